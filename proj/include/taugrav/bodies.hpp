#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <vector>

#include "taugrav/errors.hpp"

namespace taugrav {

using Vec3 = Eigen::Vector3d;

// One rigid source of gravitational potential.
struct Body {
  enum class Shape { Point, UniformBall, Box, Cylinder };

  Shape shape = Shape::Point;
  double mass = 0.0;  // kg
  Vec3 center = Vec3::Zero();
  double radius = 0.0;         // ball / cylinder, m
  double edge = 0.0;           // box edge, m
  double length = 0.0;         // cylinder length, m
  Vec3 axis = Vec3::UnitZ();   // cylinder axis (unit)
  std::string label;

  static Body point(double mass, const Vec3& center, std::string label = {});
  static Body uniform_ball(double mass, double radius, const Vec3& center,
                           std::string label = {});
  static Body box(double mass, double edge, const Vec3& center,
                  std::string label = {});
  static Body cylinder(double mass, double radius, double length,
                       const Vec3& center, const Vec3& axis = Vec3::UnitZ(),
                       std::string label = {});

  // Radius of the smallest ball around `center` containing the body.
  double bounding_radius() const;
  void validate() const;
};

// One classical gravitational branch: a set of rigid bodies.
struct MassConfiguration {
  std::vector<Body> bodies;
  void validate() const;
};

struct SuperpositionBranch {
  double weight = 0.0;  // |c_n|^2
  MassConfiguration config;
};

// Weighted list of classical branches; weights are the |c_n|^2 of the
// superposition, so they are real and sum to one.
struct SuperpositionState {
  std::vector<SuperpositionBranch> branches;
  void validate() const;
};

// Analytic mass-density descriptor of the probe apparatus.
struct ProbeDensity {
  enum class Shape { Point, Slab, Cylinder, Ball };

  Shape shape = Shape::Point;
  double point_mass = 0.0;  // kg, point only
  double density = 0.0;     // kg/m^3, extended shapes
  Vec3 center = Vec3::Zero();
  Vec3 half_extent = Vec3::Zero();  // slab half-sizes along local axes
  double radius = 0.0;              // ball / cylinder
  double length = 0.0;              // cylinder
  Vec3 axis = Vec3::UnitZ();        // cylinder axis (unit)

  static ProbeDensity point(double mass, const Vec3& position);
  static ProbeDensity slab(double density, const Vec3& full_size,
                           const Vec3& center);
  static ProbeDensity ball(double density, double radius, const Vec3& center);
  static ProbeDensity cylinder(double density, double radius, double length,
                               const Vec3& center,
                               const Vec3& axis = Vec3::UnitZ());

  double total_mass() const;
  bool contains(const Vec3& x) const;
  void validate() const;
};

}  // namespace taugrav
