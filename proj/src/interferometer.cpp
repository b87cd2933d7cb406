#include "taugrav/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "taugrav/quadrature.hpp"
#include "taugrav/rng.hpp"

namespace taugrav {

using std::numbers::pi;

double AmplifierSpec::squeeze_parameter() const {
  return std::acosh(std::sqrt(gain));
}

double AmplifierSpec::squeeze_ratio() const {
  return std::sqrt((gain - 1.0) / gain);
}

void AmplifierSpec::validate() const {
  if (!(gain >= 1.0)) throw GeometryError("amplifier gain must be >= 1");
}

Eigen::Matrix2cd HybridSpec::scattering() const {
  Eigen::Matrix2cd m;
  m << transmission, reflection, reflection, transmission;
  return m;
}

void HybridSpec::validate() const {
  const double p = std::norm(transmission) + std::norm(reflection);
  if (std::abs(p - 1.0) > 1e-12)
    throw GeometryError("hybrid requires |T|^2 + |R|^2 = 1");
}

double CoaxSpec::mass() const {
  return dielectric_density * pi * radius * radius * length;
}

void CoaxSpec::validate() const {
  if (!(radius > 0.0 && length > 0.0 && eps_r > 0.0 &&
        dielectric_density > 0.0 && signal_frequency > 0.0))
    throw GeometryError("coax parameters must be positive");
}

double visibility(double photon_bandwidth, double amplifier_bandwidth,
                  double gain) {
  const double noise = amplifier_bandwidth * (gain - 1.0);
  return (photon_bandwidth + noise) / (photon_bandwidth + 3.0 * noise);
}

double output_flux_f6(const InterferometerSpec& spec,
                      const std::function<double(double)>& photon_flux,
                      double t) {
  const AmplifierSpec& amp = spec.amplifier;
  amp.validate();
  if (!(amp.bandwidth > spec.photon_bandwidth))
    throw RegimeError(
        "f6 formula needs amplifier bandwidth above the photon bandwidth; "
        "use visibility() in the narrow-amplifier regime");
  return 0.5 * amp.gain * (1.0 - std::cos(spec.phase_difference)) *
             photon_flux(t) +
         amp.bandwidth / (2.0 * pi) * (amp.gain - 1.0);
}

std::pair<Complex, Complex> squeezer_io(const std::pair<Complex, Complex>& a_in,
                                        const AmplifierSpec& amp,
                                        double arm_phase) {
  amp.validate();
  const double s = amp.squeeze_parameter();
  const double ch = std::cosh(s), sh = std::sinh(s);
  const Complex phase = std::polar(1.0, arm_phase);
  const Complex squeeze = std::polar(1.0, amp.theta);
  return {phase * (ch * a_in.first - squeeze * sh * std::conj(a_in.second)),
          phase * (ch * a_in.second - squeeze * sh * std::conj(a_in.first))};
}

double phi_from_voltage(double volts, double eps_r,
                        const PhysicalConstants& k) {
  return 4.0 * pi * k.G * k.eps0 * eps_r * (k.m_e / k.q_e) * volts;
}

Complex coherent_voltage(Complex alpha, double omega, double eps_r, double x,
                         double t, const PhysicalConstants& k) {
  const double wavenumber = omega * std::sqrt(eps_r) / k.c;
  return std::sqrt(k.hbar * omega / (2.0 * k.eps0 * eps_r)) * alpha *
         std::polar(1.0, -(omega * t - wavenumber * x));
}

Complex overlap_amplitude(Complex alpha_L, Complex alpha_R,
                          const AmplifierSpec& amp) {
  amp.validate();
  const double s = amp.squeeze_ratio();
  const Complex phase = std::polar(1.0, amp.theta);
  const Complex cL = std::conj(alpha_L), cR = std::conj(alpha_R);
  const Complex expo = -0.5 * (std::norm(alpha_L) + std::norm(alpha_R)) -
                       0.5 * (cL * cL + cR * cR) * phase * s;
  return (1.0 / std::sqrt(2.0)) * (1.0 / amp.gain) * (cL + cR) *
         std::exp(expo);
}

namespace {

// Squeezed Gaussian weight in its principal frame (alpha = e^{i th/2} beta):
// w = exp(-(1+s) X^2 - (1-s) Y^2). The quadrature below works in (X, Y).
double moment_integrand(int power, double s, double X, double Y) {
  const double mag_sq = X * X + Y * Y;
  double poly = 1.0;
  for (int i = 0; i < power / 2; ++i) poly *= mag_sq;
  return poly * std::exp(-(1.0 + s) * X * X - (1.0 - s) * Y * Y);
}

}  // namespace

double gaussian_moment(int power, const AmplifierSpec& amp, double rel_tol) {
  if (power != 0 && power != 2 && power != 4)
    throw GeometryError("gaussian_moment supports p in {0, 2, 4}");
  amp.validate();
  const double s = amp.squeeze_ratio();
  // 80 e-folds of decay in each principal direction
  const double Lx = std::sqrt(80.0 / (1.0 + s));
  const double Ly = std::sqrt(80.0 / (1.0 - s));
  auto f = [&](const Eigen::Vector2d& u) {
    return moment_integrand(power, s, u[0], u[1]);
  };
  auto q = integrate_2d(f, Eigen::Vector2d(-Lx, -Ly), Eigen::Vector2d(Lx, Ly),
                        rel_tol);
  if (q.relative_error() > 100.0 * rel_tol)
    throw ConvergenceError("gaussian_moment quadrature did not converge");
  return q.value / pi;
}

VariancePhiResult variance_phi(const AmplifierSpec& amp, const CoaxSpec& coax,
                               std::size_t samples, std::uint64_t seed,
                               const PhysicalConstants& k) {
  amp.validate();
  coax.validate();
  const double K = 4.0 * pi * k.G * k.eps0 * coax.eps_r * (k.m_e / k.q_e);
  const double volt_sq =
      k.hbar * coax.signal_frequency / (2.0 * k.eps0 * coax.eps_r);
  const double prefactor = K * K * volt_sq;
  const double G = amp.gain;

  VariancePhiResult out;
  out.closed_form = 16.0 * G * prefactor;

  // Stratified MC of the displayed 8-D coherent-state integral, sampling
  // each alpha from the squeezed Gaussian envelope itself (the e^{-|a|^2}
  // proposal has unbounded weights at large gain).
  const double s = amp.squeeze_ratio();
  const double sig_x = 1.0 / std::sqrt(2.0 * (1.0 + s));
  const double sig_y = 1.0 / std::sqrt(2.0 * (1.0 - s));
  const Complex frame = std::polar(1.0, 0.5 * amp.theta);
  const std::size_t strata = 500;
  const std::size_t per = std::max<std::size_t>(2, samples / strata);
  CounterRng rng(seed, /*stream=*/2);
  auto draw_alpha = [&](double first_uniform) {
    // first normal reuses a stratified uniform; remaining draws are free
    const double u2 = rng.uniform();
    const double X =
        sig_x * std::sqrt(-2.0 * std::log(first_uniform)) *
        std::cos(2.0 * pi * u2);
    const double Y = sig_y * rng.normal();
    return frame * Complex(X, Y);
  };
  std::vector<double> means(strata);
  double mean_of_means = 0.0;
  for (std::size_t si = 0; si < strata; ++si) {
    double acc = 0.0;
    for (std::size_t i = 0; i < per; ++i) {
      const double u1 = (si + rng.uniform()) / strata;
      const Complex aL = draw_alpha(u1);
      const Complex aR = draw_alpha(rng.uniform());
      const Complex bL = draw_alpha(rng.uniform());
      const Complex bR = draw_alpha(rng.uniform());
      acc += std::norm(aL + aR) * std::norm(bL + bR) * std::norm(aL - bL);
    }
    means[si] = acc / per;
    mean_of_means += means[si];
  }
  mean_of_means /= strata;
  double var_of_means = 0.0;
  for (double m : means)
    var_of_means += (m - mean_of_means) * (m - mean_of_means);
  var_of_means /= strata * (strata - 1.0);
  // proposal normalization (pi sqrt(G))^4 / pi^4 over 1/G^4 polynomial scale
  const double scale = prefactor * (G * G) / (G * G * G * G);
  out.monte_carlo = scale * mean_of_means;
  out.mc_error = scale * std::sqrt(var_of_means);
  return out;
}

double tau_vs_gain(double gain, const CoaxSpec& coax,
                   const PhysicalConstants& k) {
  coax.validate();
  AmplifierSpec amp;
  amp.gain = gain;
  const double K = 4.0 * pi * k.G * k.eps0 * coax.eps_r * (k.m_e / k.q_e);
  const double volt_sq =
      k.hbar * coax.signal_frequency / (2.0 * k.eps0 * coax.eps_r);
  const double variance = 16.0 * gain * K * K * volt_sq;
  return pi * k.hbar / (coax.mass() * std::sqrt(2.0 * variance));
}

double critical_gain_db(double target_tau, const CoaxSpec& coax,
                        const PhysicalConstants& k) {
  if (!(target_tau > 0.0)) throw GeometryError("target tau must be > 0");
  const double tau_unit = tau_vs_gain(1.0, coax, k);
  const double gain = (tau_unit / target_tau) * (tau_unit / target_tau);
  return 10.0 * std::log10(gain);
}

}  // namespace taugrav
