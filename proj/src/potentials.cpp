#include "taugrav/potentials.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace taugrav {

double default_quad_tol() {
  static const double tol = [] {
    if (const char* env = std::getenv("TAUGRAV_QUAD_TOL")) {
      double v = std::atof(env);
      if (v > 0.0) return v;
    }
    return 1e-6;
  }();
  return tol;
}

// ---- Body -----------------------------------------------------------------

Body Body::point(double mass, const Vec3& center, std::string label) {
  Body b;
  b.shape = Shape::Point;
  b.mass = mass;
  b.center = center;
  b.label = std::move(label);
  b.validate();
  return b;
}

Body Body::uniform_ball(double mass, double radius, const Vec3& center,
                        std::string label) {
  Body b;
  b.shape = Shape::UniformBall;
  b.mass = mass;
  b.radius = radius;
  b.center = center;
  b.label = std::move(label);
  b.validate();
  return b;
}

Body Body::box(double mass, double edge, const Vec3& center,
               std::string label) {
  Body b;
  b.shape = Shape::Box;
  b.mass = mass;
  b.edge = edge;
  b.center = center;
  b.label = std::move(label);
  b.validate();
  return b;
}

Body Body::cylinder(double mass, double radius, double length,
                    const Vec3& center, const Vec3& axis, std::string label) {
  Body b;
  b.shape = Shape::Cylinder;
  b.mass = mass;
  b.radius = radius;
  b.length = length;
  b.center = center;
  b.axis = axis.normalized();
  b.label = std::move(label);
  b.validate();
  return b;
}

double Body::bounding_radius() const {
  switch (shape) {
    case Shape::Point:
      return 0.0;
    case Shape::UniformBall:
      return radius;
    case Shape::Box:
      return 0.5 * edge * std::sqrt(3.0);
    case Shape::Cylinder:
      return std::hypot(radius, 0.5 * length);
  }
  return 0.0;
}

void Body::validate() const {
  if (!(mass >= 0.0) || !std::isfinite(mass))
    throw GeometryError("body mass must be finite and >= 0");
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  switch (shape) {
    case Shape::Point:
      break;
    case Shape::UniformBall:
      if (!positive(radius)) throw GeometryError("ball radius must be > 0");
      break;
    case Shape::Box:
      if (!positive(edge)) throw GeometryError("box edge must be > 0");
      break;
    case Shape::Cylinder:
      if (!positive(radius) || !positive(length))
        throw GeometryError("cylinder radius and length must be > 0");
      break;
  }
}

void MassConfiguration::validate() const {
  if (bodies.empty()) throw GeometryError("configuration has no bodies");
  for (const auto& b : bodies) b.validate();
}

void SuperpositionState::validate() const {
  if (branches.empty())
    throw GeometryError("superposition needs at least one branch");
  double sum = 0.0;
  for (const auto& br : branches) {
    if (br.weight < 0.0 || br.weight > 1.0)
      throw GeometryError("branch weight outside [0, 1]");
    br.config.validate();
    sum += br.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw GeometryError("branch weights must sum to 1");
}

// ---- ProbeDensity ---------------------------------------------------------

ProbeDensity ProbeDensity::point(double mass, const Vec3& position) {
  ProbeDensity p;
  p.shape = Shape::Point;
  p.point_mass = mass;
  p.center = position;
  p.validate();
  return p;
}

ProbeDensity ProbeDensity::slab(double density, const Vec3& full_size,
                                const Vec3& center) {
  ProbeDensity p;
  p.shape = Shape::Slab;
  p.density = density;
  p.half_extent = 0.5 * full_size;
  p.center = center;
  p.validate();
  return p;
}

ProbeDensity ProbeDensity::ball(double density, double radius,
                                const Vec3& center) {
  ProbeDensity p;
  p.shape = Shape::Ball;
  p.density = density;
  p.radius = radius;
  p.center = center;
  p.validate();
  return p;
}

ProbeDensity ProbeDensity::cylinder(double density, double radius,
                                    double length, const Vec3& center,
                                    const Vec3& axis) {
  ProbeDensity p;
  p.shape = Shape::Cylinder;
  p.density = density;
  p.radius = radius;
  p.length = length;
  p.center = center;
  p.axis = axis.normalized();
  p.validate();
  return p;
}

double ProbeDensity::total_mass() const {
  switch (shape) {
    case Shape::Point:
      return point_mass;
    case Shape::Slab:
      return density * 8.0 * half_extent.prod();
    case Shape::Ball:
      return density * 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
    case Shape::Cylinder:
      return density * std::numbers::pi * radius * radius * length;
  }
  return 0.0;
}

bool ProbeDensity::contains(const Vec3& x) const {
  const Vec3 d = x - center;
  switch (shape) {
    case Shape::Point:
      return false;
    case Shape::Slab:
      return (d.cwiseAbs().array() <= half_extent.array()).all();
    case Shape::Ball:
      return d.norm() <= radius;
    case Shape::Cylinder: {
      const double z = d.dot(axis);
      const double r = (d - z * axis).norm();
      return std::abs(z) <= 0.5 * length && r <= radius;
    }
  }
  return false;
}

void ProbeDensity::validate() const {
  if (!(total_mass() > 0.0) || !std::isfinite(total_mass()))
    throw GeometryError("probe mass must be finite and > 0");
}

// ---- Potentials -----------------------------------------------------------

namespace {

// Quadrature of -G rho / |x - y| over an extended body, mapped to a cell
// in natural coordinates (box: Cartesian, cylinder: (r, phi, z) with
// Jacobian r).
double quadrature_potential(const Body& body, const Vec3& x,
                            const PhysicalConstants& k, double rel_tol) {
  const double G = k.G;
  if (body.shape == Body::Shape::Box) {
    const double h = 0.5 * body.edge;
    const double rho = body.mass / (body.edge * body.edge * body.edge);
    auto f = [&](const Vec3& y) {
      const double r = (x - (body.center + y)).norm();
      return 1.0 / r;
    };
    auto q = integrate_3d(f, Vec3(-h, -h, -h), Vec3(h, h, h), rel_tol);
    return -G * rho * q.value;
  }
  // cylinder: local frame with axis as z
  const Vec3 ez = body.axis;
  Vec3 ex = ez.unitOrthogonal();
  const Vec3 ey = ez.cross(ex);
  const double rho = body.mass / (std::numbers::pi * body.radius *
                                  body.radius * body.length);
  auto f = [&](const Vec3& u) {
    // u = (r, phi, z)
    const Vec3 y = body.center + u[0] * (std::cos(u[1]) * ex +
                                         std::sin(u[1]) * ey) +
                   u[2] * ez;
    return u[0] / (x - y).norm();
  };
  auto q = integrate_3d(f, Vec3(0.0, 0.0, -0.5 * body.length),
                        Vec3(body.radius, 2.0 * std::numbers::pi,
                             0.5 * body.length),
                        rel_tol);
  return -G * rho * q.value;
}

}  // namespace

double body_potential(const Body& body, const Vec3& x,
                      const PhysicalConstants& k, double rel_tol) {
  const double r = (x - body.center).norm();
  switch (body.shape) {
    case Body::Shape::Point:
      if (r == 0.0) {
        std::ostringstream msg;
        msg << "potential evaluated at point-mass location";
        if (!body.label.empty()) msg << " (" << body.label << ")";
        throw SingularityError(msg.str());
      }
      return -k.G * body.mass / r;
    case Body::Shape::UniformBall: {
      const double a = body.radius;
      if (r >= a) return -k.G * body.mass / r;
      return -k.G * body.mass * (3.0 * a * a - r * r) / (2.0 * a * a * a);
    }
    case Body::Shape::Box:
    case Body::Shape::Cylinder:
      return quadrature_potential(body, x, k, rel_tol);
  }
  return 0.0;
}

double potential_at(const MassConfiguration& config, const Vec3& x,
                    const PhysicalConstants& k, double rel_tol) {
  double phi = 0.0;
  for (const auto& body : config.bodies)
    phi += body_potential(body, x, k, rel_tol);
  return phi;
}

double line_integral_phi(const Body& ball, double L,
                         const PhysicalConstants& k) {
  if (ball.shape != Body::Shape::UniformBall)
    throw GeometryError("line_integral_phi requires a uniform ball");
  if (!(ball.radius < 0.5 * L))
    throw GeometryError("ball radius must be smaller than L/2");
  return 2.0 * k.G * ball.mass * (std::log(2.0 * ball.radius / L) - 4.0 / 3.0);
}

QuadResult line_integral_phi_quadrature(const Body& ball, double L,
                                        const PhysicalConstants& k,
                                        double rel_tol) {
  if (!(ball.radius < 0.5 * L))
    throw GeometryError("ball radius must be smaller than L/2");
  Body centered = ball;
  centered.center = Vec3(0.5 * L, 0.0, 0.0);
  auto phi = [&](double t) {
    return body_potential(centered, Vec3(t, 0.0, 0.0), k);
  };
  // split at the interior/exterior kinks
  const double a = ball.radius;
  QuadResult total;
  const double cuts[4] = {0.0, 0.5 * L - a, 0.5 * L + a, L};
  for (int i = 0; i < 3; ++i) {
    auto q = integrate_1d(phi, cuts[i], cuts[i + 1], rel_tol);
    total.value += q.value;
    total.error += q.error;
    total.evaluations += q.evaluations;
  }
  return total;
}

double delta_phi(const SuperpositionState& s, std::size_t n, std::size_t m,
                 const Vec3& x, const PhysicalConstants& k, double rel_tol) {
  if (n >= s.branches.size() || m >= s.branches.size())
    throw GeometryError("branch index out of range");
  return potential_at(s.branches[n].config, x, k, rel_tol) -
         potential_at(s.branches[m].config, x, k, rel_tol);
}

}  // namespace taugrav
