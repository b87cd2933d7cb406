#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <functional>
#include <utility>

#include "taugrav/constants.hpp"
#include "taugrav/errors.hpp"

namespace taugrav {

using Complex = std::complex<double>;

struct AmplifierSpec {
  double gain = 1.0;             // G = cosh^2 |s| >= 1
  double theta = 0.0;            // squeeze phase, rad
  double bandwidth = 0.0;        // B_a, rad/s
  double pump_frequency = 0.0;   // rad/s

  double squeeze_parameter() const;  // |s| with G = cosh^2 |s|
  // sqrt((G-1)/G), the factor multiplying the squeezed quadratic term.
  double squeeze_ratio() const;
  void validate() const;
};

struct HybridSpec {
  Complex transmission{-0.7071067811865476, 0.0};
  Complex reflection{0.0, -0.7071067811865476};

  Eigen::Matrix2cd scattering() const;  // [[T, R], [R, T]]
  void validate() const;                // |T|^2 + |R|^2 = 1
};

struct CoaxSpec {
  double radius = 1e-3;                  // m
  double length = 3.0;                   // m
  double eps_r = 20.0;
  double dielectric_density = 1e4;       // kg/m^3
  double signal_frequency = 2.0 * 3.14159265358979323846 * 1e9;  // rad/s

  double mass() const;  // rho * pi r^2 l
  void validate() const;
};

struct InterferometerSpec {
  AmplifierSpec amplifier;      // shared by both arms
  HybridSpec hybrid_in;
  HybridSpec hybrid_out;
  double photon_bandwidth = 2.0 * 3.14159265358979323846 * 1e7;  // rad/s
  double phase_difference = 0.0;  // rad, path 1 vs path 2
  CoaxSpec coax;
};

// Interference visibility when the amplifier bandwidth is smaller than the
// photon bandwidth: (Bph + Ba(G-1)) / (Bph + 3 Ba(G-1)), in (1/3, 1].
double visibility(double photon_bandwidth, double amplifier_bandwidth,
                  double gain);

// Output photon flux at the dark-fringe port:
// f6(t) = (G/2)(1 - cos dphi) f1(t) + (Ba/2pi)(G - 1).
// Valid only when the amplifier bandwidth exceeds the photon bandwidth;
// otherwise throws RegimeError (use visibility() in that regime).
double output_flux_f6(const InterferometerSpec& spec,
                      const std::function<double(double)>& photon_flux,
                      double t);

// Squeezer input-output map on a (signal, idler) amplitude pair:
// out_sig = e^{i phi} (cosh|s| a_sig - e^{i theta} sinh|s| conj(a_idl)).
std::pair<Complex, Complex> squeezer_io(const std::pair<Complex, Complex>& a_in,
                                        const AmplifierSpec& amp,
                                        double arm_phase);

// Gravitational potential shift tied to the cable voltage through the
// shared Poisson equation: Phi_e = 4 pi G eps0 eps_r (m_e/|q_e|) V.
double phi_from_voltage(double volts, double eps_r,
                        const PhysicalConstants& k = codata2018());

// Analytic-signal voltage of a coherent state |alpha> in the cable:
// V = sqrt(hbar w / (2 eps0 eps_r)) alpha e^{-i(w t - k x)}.
Complex coherent_voltage(Complex alpha, double omega, double eps_r, double x,
                         double t, const PhysicalConstants& k = codata2018());

// Coherent-state amplitude <0|D_L^+ D_R^+|psi> of the amplified
// single-photon state, normalized so |.|^2 integrates to 1 over both
// planes (d^2 alpha / pi each).
Complex overlap_amplitude(Complex alpha_L, Complex alpha_R,
                          const AmplifierSpec& amp);

// I_p = (1/pi) int d^2 alpha |alpha|^p exp(-|alpha|^2
//        - s/2 (alpha^2 e^{-i th} + conj(alpha)^2 e^{i th}))
// by adaptive 2-D quadrature; p in {0, 2, 4}.
double gaussian_moment(int power, const AmplifierSpec& amp,
                       double rel_tol = 1e-9);

struct VariancePhiResult {
  double closed_form;  // 16 G K^2 hbar w_s / (2 eps0 eps_r)  (paper form)
  double monte_carlo;  // stratified MC of the 8-D coherent-state integral
  double mc_error;     // absolute 1-sigma error of the MC value
};

// Branch-weighted potential variance sum_{n,m} w_n w_m (Phi_n - Phi_m)^2
// of the amplified state, (J/kg)^2.
VariancePhiResult variance_phi(const AmplifierSpec& amp, const CoaxSpec& coax,
                               std::size_t samples = 10000000,
                               std::uint64_t seed = 20260823,
                               const PhysicalConstants& k = codata2018());

// tau_p(G) = pi hbar / (M_coax sqrt(2 * variance_phi_closed_form)).
double tau_vs_gain(double gain, const CoaxSpec& coax,
                   const PhysicalConstants& k = codata2018());

// Gain (dB, power convention 10 log10 G) at which tau_vs_gain hits the
// target timescale.
double critical_gain_db(double target_tau, const CoaxSpec& coax,
                        const PhysicalConstants& k = codata2018());

}  // namespace taugrav
