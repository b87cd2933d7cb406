#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "taugrav/bodies.hpp"
#include "taugrav/constants.hpp"
#include "taugrav/potentials.hpp"

namespace taugrav {

enum class Formula {
  TwoBranch,           // tau = pi hbar / (m_p |Phi_1 - Phi_2|)
  Density,             // tau = pi hbar / int rho |Phi_1 - Phi_2|
  MultiBranch,         // tau = pi hbar / (m_p sqrt(2 sum w w (dPhi)^2))
  DensityMultiBranch,  // combined generalization
  MinPointSet,
  Entangled,
  Product,
  SelfProbe,
  MovingProbe,
};

const char* formula_name(Formula f);

// An instability timescale with its provenance. A divergent timescale
// (no dephasing) is carried by the `infinite` flag, never by overflow.
struct InstabilityResult {
  double tau = std::numeric_limits<double>::infinity();  // s
  bool infinite = false;
  double denominator = 0.0;  // integrated m|dPhi| (J / (J s) units: rad/s)
  Formula formula = Formula::TwoBranch;
  double quadrature_error = 0.0;  // relative, 0 for closed-form paths

  static InstabilityResult never(Formula f);
  static InstabilityResult finite(Formula f, double hbar, double denominator,
                                  double rel_error = 0.0);
};

struct QuadratureBudget {
  double rel_tol = 1e-5;
  double accept_rel_error = 1e-3;  // beyond this -> ConvergenceError
  std::size_t max_cells = 400000;
  std::size_t mc_samples = 1000000;
  std::uint64_t seed = 20260823;
};

// Eq.-level operations of the probe-instability model. All potentials are
// evaluated with the supplied constants; SI units.

InstabilityResult tau_two_branch(double m_p, const SuperpositionState& s,
                                 const Vec3& x_p,
                                 const PhysicalConstants& k = codata2018());

InstabilityResult tau_density(const ProbeDensity& rho,
                              const SuperpositionState& s,
                              const PhysicalConstants& k = codata2018(),
                              const QuadratureBudget& budget = {});

// Norm of the superposed probe state at time t:
// sqrt(sum_{n,m} w_n w_m cos(m_p (Phi_n - Phi_m) t / hbar)).
double norm_decay(const SuperpositionState& s, double m_p, const Vec3& x_p,
                  double t, const PhysicalConstants& k = codata2018());

InstabilityResult tau_multibranch(const SuperpositionState& s, double m_p,
                                  const Vec3& x_p,
                                  const PhysicalConstants& k = codata2018());

InstabilityResult tau_density_multibranch(
    const ProbeDensity& rho, const SuperpositionState& s,
    const PhysicalConstants& k = codata2018(),
    const QuadratureBudget& budget = {});

struct PointParticle {
  double mass;  // kg
  Vec3 position;
};

InstabilityResult tau_min_pointset(const std::vector<PointParticle>& particles,
                                   const SuperpositionState& s,
                                   const PhysicalConstants& k = codata2018());

// Entangled pair (|a1 b1> + |a2 b2>)/sqrt(2):
// tau = pi hbar / (m_p |Phi_a1 - Phi_a2 + Phi_b1 - Phi_b2|).
InstabilityResult tau_entangled(double m_p, double phi_a1, double phi_a2,
                                double phi_b1, double phi_b2,
                                const PhysicalConstants& k = codata2018());

// Product state (|a1> + |a2>)(|b1> + |b2>)/2:
// tau = pi hbar / (m_p sqrt((Phi_a1-Phi_a2)^2 + (Phi_b1-Phi_b2)^2)).
InstabilityResult tau_product(double m_p, double phi_a1, double phi_a2,
                              double phi_b1, double phi_b2,
                              const PhysicalConstants& k = codata2018());

// The superposed body as its own probe; requires a finite-extent body
// (self-potential of a point mass diverges). The state must hold two
// branches of the same body displaced to x1 and x2.
InstabilityResult tau_self(double M, const SuperpositionState& s,
                           const PhysicalConstants& k = codata2018());

// Self-consistent timescale for a moving probe: the tau solving
// m_p * int_0^tau |dPhi(t)| dt = pi hbar, found by bracketing root search
// (the left side is nondecreasing, so the root is unique when it exists).
InstabilityResult tau_moving_probe(double m_p,
                                   const std::function<double(double)>&
                                       delta_phi_of_t,
                                   double t_max,
                                   const PhysicalConstants& k = codata2018(),
                                   double rel_tol = 1e-10);

// Serialization of a result to a flat record for CSV/JSON emission.
std::string result_csv_row(const InstabilityResult& r);

}  // namespace taugrav
