#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "taugrav/constants.hpp"

namespace taugrav {

struct PulseSpec {
  enum class Shape { Gaussian, RaisedCosine };
  Shape shape = Shape::Gaussian;
  double bandwidth = 0.0;    // rad/s
  double center_time = 0.0;  // s

  // Unit-peak envelope. Gaussian: exp(-dw^2 t^2). RaisedCosine:
  // (1 - cos(B t)) / (pi B t^2), with the removable t=0 value B/(2 pi)
  // rescaled to unit peak.
  double amplitude(double t) const;
  void validate() const;
};

struct LightClockSpec {
  double mirror_spacing = 0.0;  // L, m
  double ball_mass = 0.0;       // M, kg
  double radius_a = 0.0;        // m
  double radius_b = 0.0;        // m; a <= b < L/2
  double transmissivity = 0.1;  // |T| of the half-silvered mirror, <= 0.3
  PulseSpec pulse;

  double reflectivity() const;  // sqrt(1 - |T|^2), reflection phase zero
  void validate() const;
};

// One emitted sub-pulse. `weight` is the per-order binomial probability
// (1 for the flat train); the field amplitude also carries the cavity
// factor T R^(order-1).
struct PulseComponent {
  double delay = 0.0;   // s
  double weight = 0.0;  // binom(2n,k)/4^n within its order
  int order = 0;        // round-trip index n >= 1
};

struct PulseTrain {
  std::vector<PulseComponent> components;
  double transmissivity = 0.0;
  double reflectivity = 0.0;

  double amplitude(const PulseComponent& c) const;  // T R^(n-1) * weight
};

// One-way traversal time past a transparent ball of the given radius:
// dt = L/c + (2GM/c^3)(log(L/2a) + 4/3).
double traversal_time(const LightClockSpec& spec, double radius,
                      const PhysicalConstants& k = codata2018());

// Maximal time difference between superposed arrival times after one full
// reflection: 2*dt_delta = (4GM/c^3) log(b/a).
double superposition_delay(const LightClockSpec& spec,
                           const PhysicalConstants& k = codata2018());

// Cavity output for a single classical branch: pulses at delays 2n*dt with
// amplitudes T R^(n-1).
PulseTrain pulse_train_flat(const LightClockSpec& spec, int n_max,
                            const PhysicalConstants& k = codata2018());

// Exact binomial expansion of the superposed output: order n emits 2n+1
// sub-pulses at delays 2n*dtbar + (n-k)*delta_t with weights
// binom(2n,k)/4^n, where delta_t = dt(a) - dt(b) is the per-traversal
// difference (half the superposition delay).
PulseTrain pulse_train_superposed_exact(const LightClockSpec& spec, int n_max,
                                        const PhysicalConstants& k =
                                            codata2018());

// Same expansion parameterized directly by the mean traversal time and the
// per-traversal difference; used for desk-scale studies of the envelope.
PulseTrain binomial_train(double dtbar, double delta_t, double transmissivity,
                          int n_max);

// binom(2n,k)/4^n in log space; exact to double precision up to n = 1e4.
double binomial_weight(int n, int k);

// Peak envelope of order n when the input pulse is a unit-peak Gaussian of
// bandwidth dw: sum_k binom(2n,k)/4^n exp(-(dw (n-k) dt_delta)^2).
double order_envelope_peak(int n, double dw, double delta_t);

// xi_out(t) ~ 1/(dw * dt_delta * sqrt(t / (2 dtbar))), the large-time
// envelope of the superposed train.
double pulse_height_asymptotic(double dw, double delta_t, double dtbar,
                               double t);

// Time at which the asymptotic pulse height crosses the given threshold
// (default 1): t = 2 dtbar threshold^-2 / (dw dt_delta)^2. nullopt when
// delta_t == 0 (infinite coherence).
std::optional<double> coherence_horizon(double dw, double delta_t,
                                        double dtbar,
                                        double threshold = 1.0);

// Per-traverse dephasing factor sum_n |c_n|^2 exp(i w dt_n).
std::complex<double> dephasing_factor(double omega, std::span<const double> dts,
                                      std::span<const double> weights);

struct TrainSample {
  double time;
  std::complex<double> amplitude;
};

// Time-domain synthesis of a train against the spec's input pulse shape.
// Sampling rate is at least `samples_per_bandwidth` per 1/bandwidth.
std::vector<TrainSample> synthesize(const PulseTrain& train,
                                    const PulseSpec& pulse, double t0,
                                    double t1,
                                    double samples_per_bandwidth = 8.0);

}  // namespace taugrav
