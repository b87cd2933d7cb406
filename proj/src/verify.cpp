#include "taugrav/verify.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "taugrav/instability.hpp"
#include "taugrav/interferometer.hpp"
#include "taugrav/lightclock.hpp"
#include "taugrav/potentials.hpp"
#include "taugrav/rng.hpp"

namespace taugrav {

using std::numbers::pi;

namespace {

const PhysicalConstants kC = codata2018();

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

OracleCheck check_line_integral(CounterRng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double M = std::pow(10.0, -15.0 + 6.0 * rng.uniform());
    const double L = std::pow(10.0, -2.0 + 2.0 * rng.uniform());
    const double a = L * (0.001 + 0.3 * rng.uniform());
    const Body ball = Body::uniform_ball(M, a, Vec3::Zero());
    const double closed = line_integral_phi(ball, L, kC);
    const auto quad = line_integral_phi_quadrature(ball, L, kC, 1e-12);
    worst = std::max(worst, rel_dev(quad.value, closed));
  }
  return {"line_integral_phi closed form vs segment quadrature", worst, 1e-8,
          worst <= 1e-8};
}

OracleCheck check_far_field() {
  // unit box observed from 100 m: multipole corrections ~ (edge/r)^2
  MassConfiguration box{{Body::box(1.0, 1.0, Vec3::Zero())}};
  const Vec3 x(100.0, 0.0, 0.0);
  const double phi = potential_at(box, x, kC);
  const double point = -kC.G / 100.0;
  const double dev = rel_dev(phi, point);
  return {"box potential far-field vs point mass", dev, 1e-4, dev <= 1e-4};
}

OracleCheck check_binomial_envelope() {
  // exact binomial weights vs the continuum Gaussian at n=50
  const int n = 50;
  double worst = 0.0;
  for (int k = 0; k <= 2 * n; ++k) {
    if (std::abs(k - n) > 2.0 * std::sqrt(static_cast<double>(n))) continue;
    const double exact = binomial_weight(n, k);
    const double gauss =
        std::exp(-(k - n) * (k - n) / static_cast<double>(n)) /
        std::sqrt(pi * n);
    worst = std::max(worst, rel_dev(gauss, exact));
  }
  return {"binomial weights vs Gaussian continuum (n=50)", worst, 0.05,
          worst <= 0.05};
}

OracleCheck check_asymptotic_height() {
  // Eq.-(11)-style envelope vs the exact binomial sum, desk-scale
  // parameters inside the formula's validity range n (dw dt)^2 >= 1.
  const double dtbar = 1.0;
  double worst_log2 = 0.0;
  for (double dwdt : {1e-2, 3e-2, 1e-1}) {
    for (int n : {1000, 3000, 10000}) {
      if (n * dwdt * dwdt < 1.0) continue;
      const double exact = order_envelope_peak(n, dwdt, 1.0);
      const double t = 2.0 * n * dtbar;
      const double asym = pulse_height_asymptotic(dwdt, 1.0, dtbar, t);
      worst_log2 = std::max(worst_log2, std::abs(std::log2(exact / asym)));
    }
  }
  return {"asymptotic pulse height vs exact envelope (|log2 ratio|)",
          worst_log2, 1.0, worst_log2 <= 1.0};
}

OracleCheck check_gaussian_moments_02() {
  double worst = 0.0;
  for (double gain : {1.0, 2.0, 10.0, 1e4}) {
    AmplifierSpec amp;
    amp.gain = gain;
    worst = std::max(worst,
                     rel_dev(gaussian_moment(0, amp), std::sqrt(gain)));
    worst = std::max(worst,
                     rel_dev(gaussian_moment(2, amp), std::pow(gain, 1.5)));
  }
  return {"gaussian moments p=0,2 quadrature vs G^(1/2), G^(3/2)", worst,
          1e-6, worst <= 1e-6};
}

OracleCheck check_gaussian_moment_4() {
  // quadrature vs the exact 3 G^(5/2) - G^(3/2); the published 3 G^(5/2)
  // is recovered in the large-gain limit (checked at G = 1e4 in the
  // acceptance suite)
  double worst = 0.0;
  for (double gain : {1.0, 2.0, 10.0, 1e4}) {
    AmplifierSpec amp;
    amp.gain = gain;
    const double exact = 3.0 * std::pow(gain, 2.5) - std::pow(gain, 1.5);
    worst = std::max(worst, rel_dev(gaussian_moment(4, amp), exact));
  }
  return {"gaussian moment p=4 quadrature vs 3G^(5/2)-G^(3/2)", worst, 1e-6,
          worst <= 1e-6};
}

OracleCheck check_variance_mc(const VerifyOptions& opts) {
  AmplifierSpec amp;
  amp.gain = 100.0;
  CoaxSpec coax;
  const auto v = variance_phi(amp, coax, opts.mc_samples, opts.seed);
  const double dev = rel_dev(v.monte_carlo, v.closed_form);
  return {"8-D Monte Carlo vs 16G closed form (G=100)", dev, 0.05,
          dev <= 0.05};
}

SuperpositionState random_two_branch(CounterRng& rng, double mass_scale) {
  auto branch_at = [&](const Vec3& c) {
    return SuperpositionBranch{
        0.5, MassConfiguration{{Body::point(mass_scale, c)}}};
  };
  const Vec3 d(1e-6 * rng.uniform(), 1e-6 * rng.uniform(),
               1e-6 * rng.uniform());
  return SuperpositionState{{branch_at(Vec3::Zero()), branch_at(d)}};
}

OracleCheck check_reduction_lattice(CounterRng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double M = std::pow(10.0, -16.0 + 4.0 * rng.uniform());
    auto s = random_two_branch(rng, M);
    const Vec3 xp(1e-5 + 1e-5 * rng.uniform(), 1e-5 * rng.uniform(),
                  1e-5 * rng.uniform());
    const double m_p = std::pow(10.0, -17.0 + 3.0 * rng.uniform());
    const auto two = tau_two_branch(m_p, s, xp);
    const auto multi = tau_multibranch(s, m_p, xp);
    if (two.infinite || multi.infinite) continue;
    worst = std::max(worst, rel_dev(multi.tau, two.tau));
  }
  return {"multi-branch formula reduces to two-branch (100 random)", worst,
          1e-6, worst <= 1e-6};
}

OracleCheck check_point_density_limit(CounterRng& rng) {
  const double M = 1e-15, m_p = 1e-16;
  auto s = random_two_branch(rng, M);
  const Vec3 xp(1e-5, 0.0, 0.0);
  const auto point = tau_two_branch(m_p, s, xp);
  const double radius = 1e-3 * 1e-5;  // 1e-3 x distance
  const double density = m_p / (4.0 / 3.0 * pi * std::pow(radius, 3));
  const auto ball = tau_density(ProbeDensity::ball(density, radius, xp), s);
  const double dev = rel_dev(ball.tau, point.tau);
  return {"density formula point limit vs two-branch", dev, 1e-3,
          dev <= 1e-3};
}

OracleCheck check_curvature(CounterRng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int branches = 2 + static_cast<int>(rng.uniform() * 4.0);
    SuperpositionState s;
    double wsum = 0.0;
    for (int b = 0; b < branches; ++b) {
      const double w = 0.1 + rng.uniform();
      const Vec3 c(2e-6 * rng.uniform(), 2e-6 * rng.uniform(),
                   2e-6 * rng.uniform());
      s.branches.push_back(
          SuperpositionBranch{w, MassConfiguration{{Body::point(1e-14, c)}}});
      wsum += w;
    }
    for (auto& br : s.branches) br.weight /= wsum;
    // renormalize exactly enough for validate()
    double renorm = 0.0;
    for (auto& br : s.branches) renorm += br.weight;
    s.branches.back().weight += 1.0 - renorm;
    const Vec3 xp(3e-5, 1e-5, -2e-5);
    const double m_p = 1e-16;
    const auto multi = tau_multibranch(s, m_p, xp);
    if (multi.infinite) continue;
    // norm(h) ~ 1 - (m^2 S / 4 hbar^2) h^2; extract S from one step
    const double h = multi.tau / 1e3;
    const double norm_h = norm_decay(s, m_p, xp, h);
    const double S_fd =
        4.0 * kC.hbar * kC.hbar * (1.0 - norm_h) / (m_p * m_p * h * h);
    const double tau_fd = pi * kC.hbar / (m_p * std::sqrt(2.0 * S_fd));
    worst = std::max(worst, rel_dev(tau_fd, multi.tau));
  }
  return {"tau from norm_decay curvature vs multi-branch (20 random)", worst,
          1e-4, worst <= 1e-4};
}

OracleCheck check_moving_probe() {
  // linear ramp |dPhi(t)| = beta t has tau = sqrt(2 pi hbar / (m beta))
  const double m_p = 1e-16, beta = 1e-15;
  const double expected = std::sqrt(2.0 * pi * kC.hbar / (m_p * beta));
  const auto r = tau_moving_probe(
      m_p, [&](double t) { return beta * t; }, 10.0 * expected);
  const double dev = rel_dev(r.tau, expected);
  return {"moving-probe root find vs linear-ramp closed form", dev, 1e-8,
          dev <= 1e-8};
}

OracleCheck check_entanglement() {
  const double m_p = 1e-16, delta = 1e-20;
  const auto te = tau_entangled(m_p, delta, 0.0, delta, 0.0);
  const auto tne = tau_product(m_p, delta, 0.0, delta, 0.0);
  const double dev = std::abs(tne.tau / te.tau - std::sqrt(2.0));
  return {"product/entangled tau ratio vs sqrt(2)", dev, 1e-12, dev <= 1e-12};
}

}  // namespace

std::vector<OracleCheck> run_verification(const VerifyOptions& opts) {
  CounterRng rng(opts.seed, /*stream=*/0);
  std::vector<OracleCheck> checks;
  checks.push_back(check_line_integral(rng));
  checks.push_back(check_far_field());
  checks.push_back(check_binomial_envelope());
  checks.push_back(check_asymptotic_height());
  checks.push_back(check_gaussian_moments_02());
  checks.push_back(check_gaussian_moment_4());
  checks.push_back(check_variance_mc(opts));
  checks.push_back(check_reduction_lattice(rng));
  checks.push_back(check_point_density_limit(rng));
  checks.push_back(check_curvature(rng));
  checks.push_back(check_moving_probe());
  checks.push_back(check_entanglement());
  return checks;
}

std::string verification_report(const std::vector<OracleCheck>& checks) {
  std::ostringstream out;
  out << std::setprecision(6);
  for (const auto& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
        << ": measured=" << c.measured << " threshold=" << c.threshold
        << "\n";
  }
  return out.str();
}

bool all_pass(const std::vector<OracleCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace taugrav
