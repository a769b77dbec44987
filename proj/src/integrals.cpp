#include "oldqm/integrals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oldqm/numerics.hpp"

namespace oldqm {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int max_panels = 1 << 22;

void check_coefficients(const AbcCoefficients& k) {
    if (!(k.a > 0.0) || !(k.c > 0.0))
        throw std::domain_error("sommerfeld integral: A and C must be positive");
}

void check_tolerance(double rel_tol) {
    if (!(rel_tol >= 1e-13) || !(rel_tol <= 1e-3))
        throw std::invalid_argument("quadrature: rel_tol outside [1e-13, 1e-3]");
}

// Trapezoid sums of f over (0, pi) with doubling panel count. Endpoint values
// are zero by construction for every integrand passed here, so only interior
// nodes are sampled. Stops when two successive levels agree to rel_tol/4.
template <class F>
double doubling_trapezoid(F&& f, double rel_tol, double interval) {
    double prev = 0.0;
    bool have_prev = false;
    for (int n = 16; n <= max_panels; n *= 2) {
        std::vector<double> samples;
        samples.reserve(n - 1);
        const double du = interval / n;
        for (int i = 1; i < n; ++i) samples.push_back(f(i * du));
        const double cur = du * pairwise_sum(samples);
        if (have_prev && std::abs(cur - prev) <= 0.25 * rel_tol * std::abs(cur)) return cur;
        prev = cur;
        have_prev = true;
    }
    throw std::runtime_error("quadrature: tolerance not reached within panel budget");
}

}  // namespace

std::pair<double, double> turning_points(const AbcCoefficients& k) {
    check_coefficients(k);
    const double disc = k.b * k.b - 4.0 * k.a * k.c;
    if (!(k.b > 0.0) || disc < 0.0)
        throw std::domain_error("turning_points: no classical band, B < 2 sqrt(AC)");
    const double q = k.b + std::sqrt(disc);
    return {2.0 * k.c / q, q / (2.0 * k.a)};  // product form: no cancellation
}

double action_closed_form(const AbcCoefficients& k) {
    check_coefficients(k);
    const double two_sqrt_ac = 2.0 * std::sqrt(k.a * k.c);
    if (k.b < two_sqrt_ac)
        throw std::domain_error("action_closed_form: no classical band, B < 2 sqrt(AC)");
    if (k.b == two_sqrt_ac) return 0.0;  // coincident turning points
    return pi * (k.b / (2.0 * std::sqrt(k.a)) - std::sqrt(k.c));
}

double action_quadrature(const AbcCoefficients& k, double rel_tol) {
    check_coefficients(k);
    check_tolerance(rel_tol);
    const double two_sqrt_ac = 2.0 * std::sqrt(k.a * k.c);
    if (k.b < two_sqrt_ac)
        throw std::domain_error("action_quadrature: no classical band, B < 2 sqrt(AC)");
    if (k.b == two_sqrt_ac) return 0.0;
    const auto [r1, r2] = turning_points(k);
    const double m = 0.5 * (r1 + r2);
    const double h = 0.5 * (r2 - r1);
    const double sa = std::sqrt(k.a);
    // A(r - r1)(r2 - r) == h^2 sin^2 u under r = m - h cos u, hence
    // p(r) dr = sqrt(A) h^2 sin^2 u / (m - h cos u) du.
    auto f = [=](double u) {
        const double s = std::sin(u);
        return sa * h * h * s * s / (m - h * std::cos(u));
    };
    return doubling_trapezoid(f, rel_tol, pi);
}

std::pair<double, double> derivative_identity(const AbcCoefficients& k, double db,
                                              double rel_tol) {
    check_coefficients(k);
    if (!(db > 0.0)) throw std::invalid_argument("derivative_identity: db must be positive");
    if (!(k.b - db > 2.0 * std::sqrt(k.a * k.c)))
        throw std::domain_error("derivative_identity: step leaves the classical band");
    const double plus = action_quadrature({k.a, k.b + db, k.c}, rel_tol);
    const double minus = action_quadrature({k.a, k.b - db, k.c}, rel_tol);
    return {(plus - minus) / (2.0 * db), pi / (2.0 * std::sqrt(k.a))};
}

std::pair<double, double> eccentricity_integral(double eps, double rel_tol) {
    if (!(eps >= 0.0) || !(eps < 1.0))
        throw std::domain_error("eccentricity_integral: eps must lie in [0, 1)");
    check_tolerance(rel_tol);
    const double closed = 1.0 / std::sqrt((1.0 - eps) * (1.0 + eps)) - 1.0;
    if (eps == 0.0) return {0.0, closed};
    // Integrand is 2pi-periodic and smooth, so the uniform trapezoid rule
    // (equal weights) converges geometrically; sampled as two half periods
    // (the integrand is even) to reuse the interior-node driver.
    auto g = [=](double phi) {
        const double s = std::sin(phi);
        const double d = 1.0 + eps * std::cos(phi);
        return eps * eps * s * s / (d * d);
    };
    // (1/2pi) * 2 * Int_0^pi g = (1/pi) Int_0^pi g; g(0) = g(pi) = 0.
    const double numeric = doubling_trapezoid(g, rel_tol, pi) / pi;
    return {numeric, closed};
}

}  // namespace oldqm
