#include "taugrav/lightclock.hpp"

#include <cmath>
#include <numbers>

#include "taugrav/errors.hpp"

namespace taugrav {

using std::numbers::pi;

double PulseSpec::amplitude(double t) const {
  const double u = t - center_time;
  if (shape == Shape::Gaussian) return std::exp(-bandwidth * bandwidth * u * u);
  // raised cosine, unit peak (raw peak is B/(2 pi))
  const double B = bandwidth;
  if (u == 0.0) return 1.0;
  // 1 - cos(Bu) written as 2 sin^2(Bu/2) to stay accurate near the peak
  const double s = std::sin(0.5 * B * u);
  return 2.0 * s * s / (pi * B * u * u) * (2.0 * pi / B);
}

void PulseSpec::validate() const {
  if (!(bandwidth > 0.0)) throw GeometryError("pulse bandwidth must be > 0");
}

double LightClockSpec::reflectivity() const {
  return std::sqrt(1.0 - transmissivity * transmissivity);
}

void LightClockSpec::validate() const {
  if (!(radius_a > 0.0) || !(radius_a <= radius_b) ||
      !(radius_b < 0.5 * mirror_spacing))
    throw GeometryError("light clock requires 0 < a <= b < L/2");
  if (!(ball_mass >= 0.0)) throw GeometryError("ball mass must be >= 0");
  if (!(std::abs(transmissivity) <= 0.3))
    throw GeometryError("|T| <= 0.3 required (weak-transmission regime)");
  pulse.validate();
}

double PulseTrain::amplitude(const PulseComponent& c) const {
  return transmissivity * std::pow(reflectivity, c.order - 1) * c.weight;
}

double traversal_time(const LightClockSpec& spec, double radius,
                      const PhysicalConstants& k) {
  if (!(radius < 0.5 * spec.mirror_spacing))
    throw GeometryError("ball radius must be smaller than L/2");
  const double L = spec.mirror_spacing;
  return L / k.c + 2.0 * k.G * spec.ball_mass / (k.c * k.c * k.c) *
                       (std::log(L / (2.0 * radius)) + 4.0 / 3.0);
}

double superposition_delay(const LightClockSpec& spec,
                           const PhysicalConstants& k) {
  return 4.0 * k.G * spec.ball_mass / (k.c * k.c * k.c) *
         std::log(spec.radius_b / spec.radius_a);
}

PulseTrain pulse_train_flat(const LightClockSpec& spec, int n_max,
                            const PhysicalConstants& k) {
  if (n_max < 1) throw GeometryError("n_max must be >= 1");
  spec.validate();
  const double dt = traversal_time(spec, spec.radius_a, k);
  PulseTrain train;
  train.transmissivity = spec.transmissivity;
  train.reflectivity = spec.reflectivity();
  train.components.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    train.components.push_back({2.0 * n * dt, 1.0, n});
  return train;
}

double binomial_weight(int n, int k) {
  // binom(2n, k) / 4^n, accumulated in log space
  const double lg = std::lgamma(2.0 * n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(2.0 * n - k + 1.0) -
                    n * std::log(4.0);
  return std::exp(lg);
}

PulseTrain binomial_train(double dtbar, double delta_t, double transmissivity,
                          int n_max) {
  if (n_max < 1) throw GeometryError("n_max must be >= 1");
  if (n_max > 10000)
    throw ConvergenceError("binomial expansion capped at n_max = 1e4");
  PulseTrain train;
  train.transmissivity = transmissivity;
  train.reflectivity = std::sqrt(1.0 - transmissivity * transmissivity);
  train.components.reserve(static_cast<std::size_t>(n_max) * (n_max + 2));
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= 2 * n; ++k)
      train.components.push_back(
          {2.0 * n * dtbar + (n - k) * delta_t, binomial_weight(n, k), n});
  return train;
}

PulseTrain pulse_train_superposed_exact(const LightClockSpec& spec, int n_max,
                                        const PhysicalConstants& k) {
  spec.validate();
  const double dt_a = traversal_time(spec, spec.radius_a, k);
  const double dt_b = traversal_time(spec, spec.radius_b, k);
  return binomial_train(0.5 * (dt_a + dt_b), dt_a - dt_b, spec.transmissivity,
                        n_max);
}

double order_envelope_peak(int n, double dw, double delta_t) {
  double sum = 0.0;
  for (int k = 0; k <= 2 * n; ++k) {
    const double shift = dw * (n - k) * delta_t;
    sum += binomial_weight(n, k) * std::exp(-shift * shift);
  }
  return sum;
}

double pulse_height_asymptotic(double dw, double delta_t, double dtbar,
                               double t) {
  return 1.0 / (dw * delta_t * std::sqrt(t / (2.0 * dtbar)));
}

std::optional<double> coherence_horizon(double dw, double delta_t,
                                        double dtbar, double threshold) {
  if (delta_t == 0.0) return std::nullopt;  // no horizon: infinite coherence
  const double x = dw * delta_t * threshold;
  return 2.0 * dtbar / (x * x);
}

std::complex<double> dephasing_factor(double omega, std::span<const double> dts,
                                      std::span<const double> weights) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < dts.size(); ++i)
    acc += weights[i] * std::polar(1.0, omega * dts[i]);
  return acc;
}

std::vector<TrainSample> synthesize(const PulseTrain& train,
                                    const PulseSpec& pulse, double t0,
                                    double t1, double samples_per_bandwidth) {
  const double dt = 1.0 / (pulse.bandwidth * samples_per_bandwidth);
  const std::size_t count =
      static_cast<std::size_t>(std::ceil((t1 - t0) / dt)) + 1;
  std::vector<TrainSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = t0 + i * dt;
    double re = 0.0;
    for (const auto& c : train.components)
      re += train.amplitude(c) * pulse.amplitude(t - c.delay);
    out.push_back({t, {re, 0.0}});
  }
  return out;
}

}  // namespace taugrav
