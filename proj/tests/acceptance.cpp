// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each check re-derives its expectation from first principles or an
// independent oracle; tolerances are stated inline.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "taugrav/catalog.hpp"
#include "taugrav/config_io.hpp"
#include "taugrav/instability.hpp"
#include "taugrav/interferometer.hpp"
#include "taugrav/lightclock.hpp"
#include "taugrav/rng.hpp"
#include "taugrav/verify.hpp"

using namespace taugrav;
using std::numbers::pi;

namespace {

const PhysicalConstants k = codata2018();
int failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

SuperpositionState two_point_branches(double M, double split) {
  auto branch = [&](const Vec3& c) {
    return SuperpositionBranch{0.5, MassConfiguration{{Body::point(M, c)}}};
  };
  return SuperpositionState{
      {branch(Vec3::Zero()), branch(Vec3(0.0, split, 0.0))}};
}

void criterion_1_superposition_delay() {
  LightClockSpec spec;
  spec.mirror_spacing = 1.0;
  spec.ball_mass = 1e-12;  // kilogram reading of the quoted mass
  spec.radius_a = 0.095;
  spec.radius_b = 0.1;
  spec.pulse.bandwidth = 1e12;
  const double two_dt = superposition_delay(spec, k);
  report(1, "light-clock superposition delay", two_dt > 1e-49 && two_dt < 1e-48,
         "2*dt = " + num(two_dt) + " s, expected within [1e-49, 1e-48]");
}

void criterion_2_coherence_horizon() {
  const auto h = coherence_horizon(1e12, 1e-49, 1e-13);
  const bool ok = h && std::abs(std::log10(*h / 1e60)) <= 1.5;
  report(2, "coherence horizon", ok,
         "t = " + num(h.value_or(-1.0)) +
             " s, expected within 1.5 decades of 1e60 s");
}

void criterion_3_worked_example() {
  auto branch = [&](const Vec3& c) {
    return SuperpositionBranch{
        0.5, MassConfiguration{{Body::uniform_ball(1e-15, 1e-7, c)}}};
  };
  SuperpositionState s{{branch(Vec3::Zero()), branch(Vec3(0.0, 1e-6, 0.0))}};
  const auto r = tau_two_branch(1e-16, s, Vec3(0.0, -1e-5, 0.0), k);
  report(3, "micro-ball probe timescale", r.tau > 1e3 && r.tau < 1e4,
         "tau = " + num(r.tau) + " s, expected within [1e3, 1e4]");
}

void criterion_4_catalog() {
  const auto entries = load_catalog_dir(TAUGRAV_CATALOG_DIR);
  const auto ranked = rank_catalog(entries, k);
  bool ok = ranked.rows.size() == 9;
  std::string detail;
  double fullerene_ratio = 0.0;
  double prev_table = 1e300;
  for (const auto& row : ranked.rows) {
    if (row.result.infinite || !row.table_tau || !row.ratio) {
      ok = false;
      break;
    }
    if (*row.table_tau > prev_table) ok = false;  // ordering mismatch
    prev_table = *row.table_tau;
    if (std::abs(std::log10(*row.ratio)) >= 1.0) ok = false;
    if (row.name.find("fullerene") != std::string::npos) {
      fullerene_ratio = row.result.tau / 2e8;
      if (fullerene_ratio <= 1.0 / 3.0 || fullerene_ratio >= 3.0) ok = false;
    }
  }
  report(4, "experiment catalog ranking", ok,
         "fullerene tau/2e8 = " + num(fullerene_ratio) +
             " (factor-3 gate), all nine rows ordered and within one decade");
}

void criterion_5_cube_scaling() {
  // mass delocalized over an N^3 grid spanning a cube of edge L; the
  // timescale should scale as a^2 (probe distance) and 1/L (edge)
  const int N = 3;
  const double M = 1e-15, m_p = 1e-16;
  auto grid_state = [&](double L) {
    SuperpositionState s;
    const double w = 1.0 / (N * N * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int l = 0; l < N; ++l)
          s.branches.push_back(
              {w, MassConfiguration{{Body::point(
                      M, Vec3(i, j, l) * (L / (N - 1)))}}});
    double sum = 0.0;
    for (auto& b : s.branches) sum += b.weight;
    s.branches.back().weight += 1.0 - sum;
    return s;
  };
  auto slope = [](const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mx += std::log(x[i]);
      my += std::log(y[i]);
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
      sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    return sxy / sxx;
  };

  const double L0 = 1e-6;
  auto s = grid_state(L0);
  std::vector<double> av, atau;
  for (double a = 10.0 * L0; a <= 100.0 * L0 * (1 + 1e-9); a *= 1.778279) {
    av.push_back(a);
    atau.push_back(tau_multibranch(s, m_p, Vec3(a, 0.42 * a, 0.0), k).tau);
  }
  const double exp_a = slope(av, atau);

  const double a_fixed = 20.0 * 4e-6;
  std::vector<double> lv, ltau;
  for (double L : {1e-6, 1.6e-6, 2.5e-6, 4e-6}) {
    lv.push_back(L);
    ltau.push_back(
        tau_multibranch(grid_state(L), m_p, Vec3(a_fixed, 0.0, 0.0), k).tau);
  }
  const double exp_L = slope(lv, ltau);

  const bool ok = std::abs(exp_a - 2.0) <= 0.1 && std::abs(exp_L + 1.0) <= 0.1;
  report(5, "cube delocalization scaling", ok,
         "tau ~ a^" + num(exp_a) + " (want 2.0+-0.1), ~ L^" + num(exp_L) +
             " (want -1.0+-0.1)");
}

void criterion_6_reduction_lattice() {
  CounterRng rng(20260823, 3);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double M = std::pow(10.0, -16.0 + 4.0 * rng.uniform());
    auto s = two_point_branches(M, 1e-6 * (0.2 + rng.uniform()));
    const Vec3 xp(1e-5 * (1.0 + rng.uniform()), 1e-5 * rng.uniform(),
                  -1e-5 * rng.uniform());
    const double m_p = std::pow(10.0, -17.0 + 3.0 * rng.uniform());
    const auto two = tau_two_branch(m_p, s, xp, k);
    const auto multi = tau_multibranch(s, m_p, xp, k);
    worst = std::max(worst, std::abs(multi.tau / two.tau - 1.0));
  }

  auto s = two_point_branches(1e-15, 1e-6);
  const Vec3 xp(0.0, -1e-5, 0.0);
  const double m_p = 1e-16;
  const double radius = 1e-3 * 1e-5;
  const double density = m_p / (4.0 / 3.0 * pi * std::pow(radius, 3));
  const auto ball = tau_density(ProbeDensity::ball(density, radius, xp), s, k);
  const auto point = tau_two_branch(m_p, s, xp, k);
  const double dev = std::abs(ball.tau / point.tau - 1.0);

  report(6, "formula reduction lattice", worst <= 1e-6 && dev <= 1e-3,
         "multi->two worst " + num(worst) + " (gate 1e-6), density->point " +
             num(dev) + " (gate 1e-3)");
}

void criterion_7_curvature() {
  CounterRng rng(20260823, 4);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int branches = 2 + static_cast<int>(rng.uniform() * 4.0);
    SuperpositionState s;
    double wsum = 0.0;
    for (int b = 0; b < branches; ++b) {
      const double w = 0.1 + rng.uniform();
      s.branches.push_back(
          {w, MassConfiguration{{Body::point(
                  1e-14, Vec3(2e-6 * rng.uniform(), 2e-6 * rng.uniform(),
                              2e-6 * rng.uniform()))}}});
      wsum += w;
    }
    for (auto& br : s.branches) br.weight /= wsum;
    double renorm = 0.0;
    for (auto& br : s.branches) renorm += br.weight;
    s.branches.back().weight += 1.0 - renorm;

    const Vec3 xp(3e-5, 1e-5, -2e-5);
    const double m_p = 1e-16;
    const auto multi = tau_multibranch(s, m_p, xp, k);
    const double h = multi.tau / 1e3;
    const double norm_h = norm_decay(s, m_p, xp, h, k);
    const double S_fd =
        4.0 * k.hbar * k.hbar * (1.0 - norm_h) / (m_p * m_p * h * h);
    const double tau_fd = pi * k.hbar / (m_p * std::sqrt(2.0 * S_fd));
    worst = std::max(worst, std::abs(tau_fd / multi.tau - 1.0));
  }
  report(7, "norm-decay curvature consistency", worst <= 1e-4,
         "worst relative deviation " + num(worst) + " (gate 1e-4)");
}

void criterion_8_visibility() {
  const double v1 = visibility(2.0 * pi * 1e7, 2.0 * pi * 300.0, 1.0);
  const double v6 = visibility(2.0 * pi * 1e7, 2.0 * pi * 300.0, 1e6);
  const double dev = std::abs(v6 - 1.0 / 3.0);
  report(8, "interference visibility", v1 == 1.0 && dev <= 1e-3,
         "V(1) = " + num(v1) + ", |V(1e6) - 1/3| = " + num(dev) +
             " (gate 1e-3; the formula floor is only reached at higher gain)");
}

void criterion_9_gaussian_moments() {
  bool ok = true;
  for (double gain : {1.0, 2.0, 10.0, 1e4}) {
    AmplifierSpec amp;
    amp.gain = gain;
    if (std::abs(gaussian_moment(0, amp) / std::sqrt(gain) - 1.0) > 1e-6)
      ok = false;
    if (std::abs(gaussian_moment(2, amp) / std::pow(gain, 1.5) - 1.0) > 1e-6)
      ok = false;
  }
  AmplifierSpec amp;
  amp.gain = 1e4;
  const double i4 = gaussian_moment(4, amp);
  if (std::abs(i4 / (3.0 * std::pow(1e4, 2.5)) - 1.0) > 1e-3) ok = false;
  // small-gain p=4 values recorded, not asserted
  AmplifierSpec g1;
  g1.gain = 1.0;
  AmplifierSpec g2;
  g2.gain = 2.0;
  report(9, "gaussian moment quadrature", ok,
         "p=0,2 at 1e-6 over four gains; I4(1e4)/3G^2.5 - 1 = " +
             num(i4 / (3.0 * std::pow(1e4, 2.5)) - 1.0) +
             "; recorded I4(1) = " + num(gaussian_moment(4, g1)) +
             ", I4(2) = " + num(gaussian_moment(4, g2)));
}

void criterion_10_variance_mc() {
  AmplifierSpec amp;
  amp.gain = 100.0;
  const auto v = variance_phi(amp, CoaxSpec{}, 10000000, 20260823, k);
  const double dev = std::abs(v.monte_carlo / v.closed_form - 1.0);
  report(10, "8-D variance Monte Carlo", dev <= 0.05,
         "MC/closed - 1 = " + num(dev) + " at 1e7 samples (gate 5%)");
}

void criterion_11_gain_curve() {
  const CoaxSpec coax;
  const double t1 = tau_vs_gain(1.0, coax, k);
  const double db = critical_gain_db(1e-6, coax, k);
  const bool ok = std::abs(t1 / 1.7e4 - 1.0) <= 0.02 && std::abs(db - 200.0) <= 5.0;
  report(11, "gain curve endpoints", ok,
         "tau(1) = " + num(t1) + " s (1.7e4 +- 2%), critical gain = " +
             num(db) + " dB (200 +- 5)");
}

void criterion_12_entanglement() {
  const double m_p = 1e-16, delta = 1e-20;
  const auto te = tau_entangled(m_p, delta, 0.0, delta, 0.0, k);
  const auto tne = tau_product(m_p, delta, 0.0, delta, 0.0, k);
  const bool ratio_ok =
      std::abs(tne.tau / te.tau - std::sqrt(2.0)) <= 1e-12;
  const auto te_anti = tau_entangled(m_p, delta, 0.0, 0.0, delta, k);
  const auto tne_anti = tau_product(m_p, delta, 0.0, 0.0, delta, k);
  const bool anti_ok = te_anti.infinite && !tne_anti.infinite;
  report(12, "entangled vs product stability", ratio_ok && anti_ok,
         "symmetric ratio " + num(tne.tau / te.tau) +
             " (want sqrt(2)); anti-aligned entangled infinite, product finite");
}

void criterion_13_determinism() {
  VerifyOptions opts;
  opts.mc_samples = 500000;
  const auto a = verification_report(run_verification(opts));
  const auto b = verification_report(run_verification(opts));
  report(13, "verification determinism", a == b && !a.empty(),
         a == b ? "repeated runs byte-identical" : "reports differ");
}

}  // namespace

int main() {
  criterion_1_superposition_delay();
  criterion_2_coherence_horizon();
  criterion_3_worked_example();
  criterion_4_catalog();
  criterion_5_cube_scaling();
  criterion_6_reduction_lattice();
  criterion_7_curvature();
  criterion_8_visibility();
  criterion_9_gaussian_moments();
  criterion_10_variance_mc();
  criterion_11_gain_curve();
  criterion_12_entanglement();
  criterion_13_determinism();
  std::printf("%d of 13 criteria failed\n", failures);
  return failures;
}
