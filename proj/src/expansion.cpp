#include "oldqm/expansion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oldqm/kepler.hpp"
#include "oldqm/numerics.hpp"
#include "oldqm/quantize.hpp"

namespace oldqm {

namespace {

// Bracket coefficients of the even powers of mu, with x the half-integer
// angular scale (l + 1/2 for the spin-free equation, j + 1/2 for Dirac).
double coeff2(double n) { return -1.0 / (2.0 * n * n); }

double coeff4(double n, double x) {
    return -(n / x - 0.75) / (2.0 * n * n * n * n);
}

double coeff6(double n, double x) {
    const double nx = n / x;
    return -(1.25 - 3.0 * nx + 1.5 * nx * nx + 0.5 * nx * nx * nx) /
           (4.0 * std::pow(n, 6.0));
}

double coeff8(double n, double x) {
    const double nx = n / x;
    return (4.375 - 15.0 * nx + 15.0 * nx * nx - nx * nx * nx -
            3.0 * std::pow(nx, 4.0) - std::pow(nx, 5.0)) /
           (16.0 * std::pow(n, 8.0));
}

double exact_rel_schrodinger_mu(int n, int l, double mu) {
    const double half = l + 0.5;
    if (!(mu < half)) throw std::domain_error("expansion: supercritical coupling");
    const double big_x = (n - l - 1) + 0.5 + std::sqrt(half * half - mu * mu);
    return 1.0 / std::sqrt(1.0 + (mu / big_x) * (mu / big_x));
}

double exact_dirac_mu(int n, double j, double mu) {
    const double half = j + 0.5;
    if (!(mu < half)) throw std::domain_error("expansion: supercritical coupling");
    const double big_x = (n - half) + std::sqrt(half * half - mu * mu);
    return 1.0 / std::sqrt(1.0 + (mu / big_x) * (mu / big_x));
}

// Log-log slope of |exact - series| over a geometric mu sweep placed where
// the remainder dominates rounding; points within ~64 ulps of the exact
// value carry no signal and are dropped.
template <class Exact, class Series>
double remainder_slope(Exact&& exact, Series&& series, double x_angular) {
    // Top of the sweep: far enough below the subcritical bound x_angular that
    // the first omitted order dominates (the next one biases the fitted slope
    // by under 0.1), high enough that the bottom points clear the ulp guard.
    const double top = std::min(0.25, 0.5 * x_angular);
    std::vector<double> log_mu, log_err;
    double mu = top;
    for (int i = 0; i < 6; ++i, mu /= std::sqrt(2.0)) {
        const double ex = exact(mu);
        const double err = std::abs(ex - series(mu));
        if (err < 64.0 * std::numeric_limits<double>::epsilon() * std::abs(ex)) continue;
        log_mu.push_back(std::log(mu));
        log_err.push_back(std::log(err));
    }
    if (log_mu.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    return fit_slope(log_mu, log_err);
}

template <class Coeffs, class Exact>
ExpansionReport build_report(double n, double x_angular, double mu, int max_order,
                             Coeffs&& coefficient, Exact&& exact) {
    if (max_order < 0 || max_order % 2 != 0)
        throw std::invalid_argument("expansion: order must be a nonnegative even integer");
    ExpansionReport rep;
    rep.mu = mu;
    rep.exact = exact(mu);
    double sum = 0.0;
    for (int order = 0; order <= max_order; order += 2) {
        sum += coefficient(order) * std::pow(mu, order);
        rep.orders.push_back(order);
        rep.partial_sums.push_back(sum);
    }
    auto series_at = [&](double m) {
        double s = 0.0;
        for (int order = 0; order <= max_order; order += 2)
            s += coefficient(order) * std::pow(m, order);
        return s;
    };
    rep.remainder_order_estimate = remainder_slope(exact, series_at, x_angular);
    return rep;
}

}  // namespace

ExpansionReport expand_rel_schrodinger(int n, int l, double mu, int max_order) {
    if (n < 1 || l < 0 || l > n - 1)
        throw std::domain_error("expansion: need n >= 1 and 0 <= l <= n-1");
    if (max_order > 4)
        throw std::invalid_argument("expansion: spin-free brackets available through mu^4");
    const double x = l + 0.5;
    auto coefficient = [&](int order) {
        switch (order) {
            case 0: return 1.0;
            case 2: return coeff2(n);
            case 4: return coeff4(n, x);
        }
        return 0.0;
    };
    return build_report(n, x, mu, max_order, coefficient,
                        [=](double m) { return exact_rel_schrodinger_mu(n, l, m); });
}

ExpansionReport expand_dirac(int n, double j, double mu, int max_order) {
    const double two_j = 2.0 * j;
    if (n < 1 || !(j > 0.0) || std::abs(two_j - std::round(two_j)) > 1e-9 ||
        static_cast<long long>(std::llround(two_j)) % 2 == 0 || j > n - 0.5)
        throw std::domain_error("expansion: need half-odd j with 1/2 <= j <= n - 1/2");
    if (max_order > 8)
        throw std::invalid_argument("expansion: Dirac brackets available through mu^8");
    const double x = j + 0.5;
    auto coefficient = [&](int order) {
        switch (order) {
            case 0: return 1.0;
            case 2: return coeff2(n);
            case 4: return coeff4(n, x);
            case 6: return coeff6(n, x);
            case 8: return coeff8(n, x);
        }
        return 0.0;
    };
    return build_report(n, x, mu, max_order, coefficient,
                        [=](double m) { return exact_dirac_mu(n, j, m); });
}

namespace {

// mu^4 bracket -(1/(2n^4)) (n/x - 3/4) as an exact rational; x passed as a
// fraction (half-integers stay exact).
Fraction mu4_bracket(int n, const Fraction& x) {
    const long long n4 = static_cast<long long>(n) * n * n * n;
    const Fraction inner = Fraction(n) / x - Fraction(3, 4);
    return -inner / Fraction(2 * n4);
}

}  // namespace

Fraction mu4_spread_rel_schrodinger(int n) {
    if (n < 2) throw std::domain_error("splitting: level spread needs n >= 2");
    return mu4_bracket(n, Fraction(2 * n - 1, 2)) - mu4_bracket(n, Fraction(1, 2));
}

Fraction mu4_spread_dirac(int n) {
    if (n < 2) throw std::domain_error("splitting: level spread needs n >= 2");
    return mu4_bracket(n, Fraction(n)) - mu4_bracket(n, Fraction(1));
}

Fraction splitting_ratio(int n) {
    return mu4_spread_rel_schrodinger(n) / mu4_spread_dirac(n);
}

std::vector<ComparisonRow> comparison_table(double z, int n_max, const PhysicalConstants& k) {
    if (n_max < 1) throw std::domain_error("comparison_table: n_max must be >= 1");
    const double mu = z * fine_structure_constant(k);
    std::vector<ComparisonRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
            ComparisonRow row;
            row.n = n;
            row.l = (two_j - 1) / 2;
            row.j = 0.5 * two_j;
            row.n_r = n - row.l - 1;
            row.e_nonrel = energy_nonrel(z, row.n_r, row.l);
            row.e_old = old_fine_structure_energy({row.n_r, row.l + 1}, z, k).value;
            row.e_dirac = energy_dirac(z, row.n_r, row.j, k);
            row.e_rel_schr = energy_rel_schrodinger(z, row.n_r, row.l, k);
            const double mu2 = mu * mu;
            row.mu4_schr = 1.0 + coeff2(n) * mu2 + coeff4(n, row.l + 0.5) * mu2 * mu2;
            row.mu4_dirac = 1.0 + coeff2(n) * mu2 + coeff4(n, row.j + 0.5) * mu2 * mu2;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace oldqm
