#pragma once

#include <utility>

namespace oldqm {

// Radial action integrand sqrt(-A + B/r - C/r^2) between its turning points.
// A, C > 0; the classically allowed band is nonempty iff B >= 2 sqrt(A C).
struct AbcCoefficients {
    double a;
    double b;
    double c;
};

// Roots of A r^2 - B r + C, returned (inner, outer). Uses the product form
// for the inner root, so no cancellation at large B^2/(4AC).
std::pair<double, double> turning_points(const AbcCoefficients& k);

// pi (B/(2 sqrt A) - sqrt C). Exactly 0 when B == 2 sqrt(A C).
double action_closed_form(const AbcCoefficients& k);

// Same integral evaluated numerically. The substitution
//   r = (r1+r2)/2 - ((r2-r1)/2) cos u,   u in [0, pi]
// turns the integrand into sqrt(A) h^2 sin^2 u / (m - h cos u), which is the
// half period of a smooth periodic function, so the doubling trapezoid rule
// converges geometrically; no endpoint singularity ever gets sampled.
// Panel sums are reduced pairwise in a fixed order, so the value is
// reproducible bit for bit regardless of evaluation schedule.
double action_quadrature(const AbcCoefficients& k, double rel_tol = 1e-12);

// d(action)/dB: central finite difference of the quadrature vs the exact
// pi/(2 sqrt A). The integral is linear in B, so the analytic value is exact
// at every step size; returned pair is (finite_difference, analytic).
std::pair<double, double> derivative_identity(const AbcCoefficients& k, double db,
                                              double rel_tol = 1e-12);

// (1/2pi) Int_0^2pi eps^2 sin^2 phi / (1 + eps cos phi)^2 dphi and its closed
// form 1/sqrt(1-eps^2) - 1, as (numeric, closed). Periodic trapezoid with
// panel doubling; eps in [0, 1).
std::pair<double, double> eccentricity_integral(double eps, double rel_tol = 1e-12);

}  // namespace oldqm
