#pragma once

#include <cstddef>

#include "taugrav/bodies.hpp"
#include "taugrav/constants.hpp"
#include "taugrav/quadrature.hpp"

namespace taugrav {

// Newtonian potential of a single body at x, J/kg. Uniform balls use the
// closed interior/exterior forms; box and cylinder interiors go through
// adaptive volume quadrature (one code path for all field points).
double body_potential(const Body& body, const Vec3& x,
                      const PhysicalConstants& k = codata2018(),
                      double rel_tol = 1e-8);

// Potential of a whole branch: linear superposition over its bodies.
// Throws SingularityError when x coincides with a point-mass center.
double potential_at(const MassConfiguration& config, const Vec3& x,
                    const PhysicalConstants& k = codata2018(),
                    double rel_tol = 1e-8);

// Closed form of the potential of a transparent uniform ball integrated
// along a segment of length L with the ball centered midway:
//   int_0^L Phi(x) dx = 2 G M (log(2a/L) - 4/3).
// Requires radius a < L/2.
double line_integral_phi(const Body& ball, double L,
                         const PhysicalConstants& k = codata2018());

// Same quantity by adaptive quadrature of the piecewise interior/exterior
// potential; serves as the independent cross-check of the closed form.
QuadResult line_integral_phi_quadrature(const Body& ball, double L,
                                        const PhysicalConstants& k =
                                            codata2018(),
                                        double rel_tol = 1e-10);

// Phi_n(x) - Phi_m(x) between two branches of a superposition.
double delta_phi(const SuperpositionState& s, std::size_t n, std::size_t m,
                 const Vec3& x, const PhysicalConstants& k = codata2018(),
                 double rel_tol = 1e-8);

}  // namespace taugrav
