#include "taugrav/instability.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "taugrav/rng.hpp"

namespace taugrav {

using std::numbers::pi;

const char* formula_name(Formula f) {
  switch (f) {
    case Formula::TwoBranch: return "two_branch";
    case Formula::Density: return "density";
    case Formula::MultiBranch: return "multi_branch";
    case Formula::DensityMultiBranch: return "density_multi_branch";
    case Formula::MinPointSet: return "min_pointset";
    case Formula::Entangled: return "entangled";
    case Formula::Product: return "product";
    case Formula::SelfProbe: return "self_probe";
    case Formula::MovingProbe: return "moving_probe";
  }
  return "?";
}

InstabilityResult InstabilityResult::never(Formula f) {
  InstabilityResult r;
  r.infinite = true;
  r.formula = f;
  r.denominator = 0.0;
  return r;
}

InstabilityResult InstabilityResult::finite(Formula f, double hbar,
                                            double denominator,
                                            double rel_error) {
  InstabilityResult r;
  r.infinite = false;
  r.formula = f;
  r.denominator = denominator;
  r.tau = pi * hbar / denominator;
  r.quadrature_error = rel_error;
  return r;
}

namespace {

std::vector<double> branch_potentials(const SuperpositionState& s,
                                      const Vec3& x,
                                      const PhysicalConstants& k) {
  std::vector<double> phis;
  phis.reserve(s.branches.size());
  for (const auto& br : s.branches)
    phis.push_back(potential_at(br.config, x, k));
  return phis;
}

// sum_{n,m} w_n w_m (Phi_n - Phi_m)^2 = 2 (<Phi^2> - <Phi>^2) for
// normalized weights.
// sum_{n,m} w_n w_m (phi_n - phi_m)^2, as explicit pairwise differences:
// the equivalent 2(<phi^2> - <phi>^2) form cancels catastrophically when
// the branch spread is small against the common potential.
double pair_variance_sum(const std::vector<double>& phis,
                         const SuperpositionState& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = i + 1; j < phis.size(); ++j) {
      const double d = phis[i] - phis[j];
      sum += 2.0 * s.branches[i].weight * s.branches[j].weight * d * d;
    }
  return sum;
}

void reject_point_masses_inside(const ProbeDensity& rho,
                                const SuperpositionState& s) {
  for (const auto& br : s.branches)
    for (const auto& body : br.config.bodies)
      if (body.shape == Body::Shape::Point && rho.contains(body.center))
        throw SingularityError(
            "probe volume contains a point mass; the density-weighted "
            "integral diverges");
}

struct VolumeFrame {
  Vec3 lo, hi;                                 // integration cell
  std::function<Vec3(const Vec3&)> to_world;   // cell coords -> position
  std::function<double(const Vec3&)> jacobian; // volume element factor
};

VolumeFrame probe_frame(const ProbeDensity& rho) {
  switch (rho.shape) {
    case ProbeDensity::Shape::Slab: {
      const Vec3 c = rho.center, h = rho.half_extent;
      return {c - h, c + h, [](const Vec3& u) { return u; },
              [](const Vec3&) { return 1.0; }};
    }
    case ProbeDensity::Shape::Ball: {
      const Vec3 c = rho.center;
      return {Vec3(0.0, 0.0, 0.0), Vec3(rho.radius, pi, 2.0 * pi),
              [c](const Vec3& u) {
                const double st = std::sin(u[1]);
                return Vec3(c[0] + u[0] * st * std::cos(u[2]),
                            c[1] + u[0] * st * std::sin(u[2]),
                            c[2] + u[0] * std::cos(u[1]));
              },
              [](const Vec3& u) { return u[0] * u[0] * std::sin(u[1]); }};
    }
    case ProbeDensity::Shape::Cylinder: {
      const Vec3 ez = rho.axis;
      Vec3 ex = ez.unitOrthogonal();
      const Vec3 ey = ez.cross(ex);
      const Vec3 c = rho.center;
      return {Vec3(0.0, 0.0, -0.5 * rho.length),
              Vec3(rho.radius, 2.0 * pi, 0.5 * rho.length),
              [c, ex, ey, ez](const Vec3& u) {
                return Vec3(c + u[0] * (std::cos(u[1]) * ex +
                                        std::sin(u[1]) * ey) +
                            u[2] * ez);
              },
              [](const Vec3& u) { return u[0]; }};
    }
    case ProbeDensity::Shape::Point:
      break;
  }
  throw GeometryError("point probe has no volume to integrate");
}

struct VolumeIntegral {
  double value;
  double rel_error;
};

// int rho(x) f(x) d^3x by adaptive quadrature, with a stratified Monte
// Carlo fallback for cells the quadrature cannot settle.
VolumeIntegral probe_integral(const ProbeDensity& rho,
                              const std::function<double(const Vec3&)>& f,
                              const QuadratureBudget& budget) {
  const VolumeFrame frame = probe_frame(rho);
  auto g = [&](const Vec3& u) {
    return rho.density * frame.jacobian(u) * f(frame.to_world(u));
  };
  auto q = integrate_3d(g, frame.lo, frame.hi, budget.rel_tol, 0.0,
                        budget.max_cells);
  if (q.relative_error() <= budget.accept_rel_error)
    return {q.value, q.relative_error()};

  // stratified MC over the mapped cell, stratifying the first coordinate
  CounterRng rng(budget.seed, /*stream=*/1);
  const std::size_t strata = 256;
  const std::size_t per = std::max<std::size_t>(2, budget.mc_samples / strata);
  const Vec3 span = frame.hi - frame.lo;
  const double volume = span.prod();
  double mean_of_means = 0.0, var_of_means = 0.0;
  std::vector<double> means(strata);
  for (std::size_t si = 0; si < strata; ++si) {
    double acc = 0.0;
    for (std::size_t i = 0; i < per; ++i) {
      Vec3 u;
      u[0] = frame.lo[0] + span[0] * (si + rng.uniform()) / strata;
      u[1] = frame.lo[1] + span[1] * rng.uniform();
      u[2] = frame.lo[2] + span[2] * rng.uniform();
      acc += g(u);
    }
    means[si] = acc / per;
    mean_of_means += means[si];
  }
  mean_of_means /= strata;
  for (double m : means)
    var_of_means += (m - mean_of_means) * (m - mean_of_means);
  var_of_means /= strata * (strata - 1.0);
  const double value = volume * mean_of_means;
  const double err = volume * std::sqrt(var_of_means);
  const double rel = value == 0.0 ? 0.0 : std::abs(err / value);
  if (rel > budget.accept_rel_error)
    throw ConvergenceError(
        "probe integral did not converge within the sample budget");
  return {value, rel};
}

}  // namespace

InstabilityResult tau_two_branch(double m_p, const SuperpositionState& s,
                                 const Vec3& x_p,
                                 const PhysicalConstants& k) {
  s.validate();
  if (s.branches.size() != 2)
    throw GeometryError("tau_two_branch requires exactly two branches");
  const double dphi = std::abs(delta_phi(s, 0, 1, x_p, k));
  if (dphi == 0.0) return InstabilityResult::never(Formula::TwoBranch);
  return InstabilityResult::finite(Formula::TwoBranch, k.hbar, m_p * dphi);
}

InstabilityResult tau_density(const ProbeDensity& rho,
                              const SuperpositionState& s,
                              const PhysicalConstants& k,
                              const QuadratureBudget& budget) {
  s.validate();
  rho.validate();
  if (s.branches.size() != 2)
    throw GeometryError("tau_density requires exactly two branches");
  if (rho.shape == ProbeDensity::Shape::Point) {
    auto r = tau_two_branch(rho.point_mass, s, rho.center, k);
    r.formula = Formula::Density;
    return r;
  }
  reject_point_masses_inside(rho, s);
  auto integral = probe_integral(
      rho, [&](const Vec3& x) { return std::abs(delta_phi(s, 0, 1, x, k)); },
      budget);
  if (integral.value == 0.0) return InstabilityResult::never(Formula::Density);
  return InstabilityResult::finite(Formula::Density, k.hbar, integral.value,
                                   integral.rel_error);
}

double norm_decay(const SuperpositionState& s, double m_p, const Vec3& x_p,
                  double t, const PhysicalConstants& k) {
  s.validate();
  const auto phis = branch_potentials(s, x_p, k);
  double acc = 0.0;
  for (std::size_t n = 0; n < phis.size(); ++n)
    for (std::size_t m = 0; m < phis.size(); ++m)
      acc += s.branches[n].weight * s.branches[m].weight *
             std::cos(m_p * (phis[n] - phis[m]) * t / k.hbar);
  return std::sqrt(std::max(0.0, acc));
}

InstabilityResult tau_multibranch(const SuperpositionState& s, double m_p,
                                  const Vec3& x_p,
                                  const PhysicalConstants& k) {
  s.validate();
  const auto phis = branch_potentials(s, x_p, k);
  const double pair_sum = pair_variance_sum(phis, s);
  if (pair_sum == 0.0) return InstabilityResult::never(Formula::MultiBranch);
  return InstabilityResult::finite(Formula::MultiBranch, k.hbar,
                                   m_p * std::sqrt(2.0 * pair_sum));
}

InstabilityResult tau_density_multibranch(const ProbeDensity& rho,
                                          const SuperpositionState& s,
                                          const PhysicalConstants& k,
                                          const QuadratureBudget& budget) {
  s.validate();
  rho.validate();
  if (rho.shape == ProbeDensity::Shape::Point) {
    auto r = tau_multibranch(s, rho.point_mass, rho.center, k);
    r.formula = Formula::DensityMultiBranch;
    return r;
  }
  reject_point_masses_inside(rho, s);
  auto integral = probe_integral(
      rho,
      [&](const Vec3& x) {
        const auto phis = branch_potentials(s, x, k);
        return std::sqrt(2.0 * pair_variance_sum(phis, s));
      },
      budget);
  if (integral.value == 0.0)
    return InstabilityResult::never(Formula::DensityMultiBranch);
  return InstabilityResult::finite(Formula::DensityMultiBranch, k.hbar,
                                   integral.value, integral.rel_error);
}

InstabilityResult tau_min_pointset(const std::vector<PointParticle>& particles,
                                   const SuperpositionState& s,
                                   const PhysicalConstants& k) {
  if (particles.empty())
    throw GeometryError("tau_min_pointset requires at least one particle");
  InstabilityResult best = InstabilityResult::never(Formula::MinPointSet);
  for (const auto& p : particles) {
    auto r = tau_two_branch(p.mass, s, p.position, k);
    if (!r.infinite && (best.infinite || r.tau < best.tau)) {
      best = r;
      best.formula = Formula::MinPointSet;
    }
  }
  return best;
}

InstabilityResult tau_entangled(double m_p, double phi_a1, double phi_a2,
                                double phi_b1, double phi_b2,
                                const PhysicalConstants& k) {
  const double den = m_p * std::abs(phi_a1 - phi_a2 + phi_b1 - phi_b2);
  if (den == 0.0) return InstabilityResult::never(Formula::Entangled);
  return InstabilityResult::finite(Formula::Entangled, k.hbar, den);
}

InstabilityResult tau_product(double m_p, double phi_a1, double phi_a2,
                              double phi_b1, double phi_b2,
                              const PhysicalConstants& k) {
  const double da = phi_a1 - phi_a2, db = phi_b1 - phi_b2;
  const double den = m_p * std::sqrt(da * da + db * db);
  if (den == 0.0) return InstabilityResult::never(Formula::Product);
  return InstabilityResult::finite(Formula::Product, k.hbar, den);
}

InstabilityResult tau_self(double M, const SuperpositionState& s,
                           const PhysicalConstants& k) {
  s.validate();
  if (s.branches.size() != 2)
    throw GeometryError("tau_self requires two branches of the same body");
  for (const auto& br : s.branches) {
    if (br.config.bodies.size() != 1)
      throw GeometryError("tau_self requires single-body branches");
    if (br.config.bodies[0].shape == Body::Shape::Point)
      throw SingularityError(
          "self-potential of a point mass diverges; use a finite body");
  }
  const Vec3 x1 = s.branches[0].config.bodies[0].center;
  const double den = M * std::abs(delta_phi(s, 0, 1, x1, k));
  if (den == 0.0) return InstabilityResult::never(Formula::SelfProbe);
  return InstabilityResult::finite(Formula::SelfProbe, k.hbar, den);
}

InstabilityResult tau_moving_probe(
    const double m_p, const std::function<double(double)>& delta_phi_of_t,
    double t_max, const PhysicalConstants& k, double rel_tol) {
  auto accumulated = [&](double tau) {
    auto q = integrate_1d(delta_phi_of_t, 0.0, tau, rel_tol);
    return m_p * q.value;
  };
  const double target = pi * k.hbar;
  if (accumulated(t_max) < target)
    return InstabilityResult::never(Formula::MovingProbe);
  double lo = 0.0, hi = t_max;
  // accumulated phase is nondecreasing in tau: plain bisection
  for (int i = 0; i < 200 && (hi - lo) > rel_tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (accumulated(mid) < target ? lo : hi) = mid;
  }
  const double tau = 0.5 * (lo + hi);
  InstabilityResult r;
  r.infinite = false;
  r.tau = tau;
  r.denominator = target / tau;
  r.formula = Formula::MovingProbe;
  return r;
}

std::string result_csv_row(const InstabilityResult& r) {
  std::ostringstream out;
  out.precision(6);
  out << formula_name(r.formula) << ',';
  if (r.infinite)
    out << "inf";
  else
    out << r.tau;
  out << ',' << r.denominator << ',' << r.quadrature_error;
  return out.str();
}

}  // namespace taugrav
