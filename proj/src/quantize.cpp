#include "oldqm/quantize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oldqm/numerics.hpp"

namespace oldqm {

namespace {

constexpr double pi = std::numbers::pi;

void check_z(double z) {
    if (!(z > 0.0)) throw std::domain_error("radial problem: nuclear charge must be positive");
}

double coupling(double z, const PhysicalConstants& k) {
    return z * fine_structure_constant(k);
}

void check_subcritical(double mu, double angular_plus_half, const char* what) {
    if (!(mu < angular_plus_half))
        throw std::domain_error(std::string("radial problem: supercritical coupling for ") + what);
}

void check_n_r(int n_r) {
    if (n_r < 0) throw std::domain_error("radial problem: n_r must be >= 0");
}

}  // namespace

RadialProblem make_nonrel(double z, int l, const PhysicalConstants& k) {
    check_z(z);
    if (l < 0) throw std::domain_error("radial problem: l must be >= 0");
    return {ProblemKind::nonrel_schrodinger, z, coupling(z, k), static_cast<double>(l)};
}

RadialProblem make_rel_schrodinger(double z, int l, const PhysicalConstants& k) {
    check_z(z);
    if (l < 0) throw std::domain_error("radial problem: l must be >= 0");
    const double mu = coupling(z, k);
    check_subcritical(mu, l + 0.5, "the relativistic Schrodinger problem");
    return {ProblemKind::rel_schrodinger, z, mu, static_cast<double>(l)};
}

RadialProblem make_dirac(double z, double j, const PhysicalConstants& k) {
    check_z(z);
    const double two_j = 2.0 * j;
    if (!(j > 0.0) || std::abs(two_j - std::round(two_j)) > 1e-9 ||
        static_cast<long long>(std::llround(two_j)) % 2 == 0)
        throw std::domain_error("radial problem: j must be a positive half-odd integer");
    const double mu = coupling(z, k);
    check_subcritical(mu, j + 0.5, "the Dirac problem");
    return {ProblemKind::dirac, z, mu, j};
}

double radial_exponent(const RadialProblem& p) {
    const double half = p.angular + 0.5;
    switch (p.kind) {
        case ProblemKind::nonrel_schrodinger:
            return p.angular;
        case ProblemKind::rel_schrodinger:
            return -0.5 + std::sqrt(half * half - p.mu * p.mu);
        case ProblemKind::dirac:
            return std::sqrt(half * half - p.mu * p.mu);
    }
    throw std::invalid_argument("radial_exponent: unknown problem kind");
}

EnergyUnit natural_unit(ProblemKind kind) {
    return kind == ProblemKind::nonrel_schrodinger ? EnergyUnit::ratio_hartree
                                                   : EnergyUnit::ratio_rest;
}

double energy_nonrel(double z, int n_r, int l) {
    check_z(z);
    check_n_r(n_r);
    if (l < 0) throw std::domain_error("radial problem: l must be >= 0");
    const double n = n_r + l + 1;
    return -z * z / (2.0 * n * n);
}

double energy_rel_schrodinger(double z, int n_r, int l, const PhysicalConstants& k) {
    check_n_r(n_r);
    const RadialProblem p = make_rel_schrodinger(z, l, k);
    const double x = n_r + radial_exponent(p) + 1.0;
    return 1.0 / std::sqrt(1.0 + (p.mu / x) * (p.mu / x));
}

double energy_dirac(double z, int n_r, double j, const PhysicalConstants& k) {
    check_n_r(n_r);
    const RadialProblem p = make_dirac(z, j, k);
    const double x = n_r + radial_exponent(p);
    return 1.0 / std::sqrt(1.0 + (p.mu / x) * (p.mu / x));
}

EnergyLevel analytic_energy(const RadialProblem& p, int n_r) {
    switch (p.kind) {
        case ProblemKind::nonrel_schrodinger:
            return {energy_nonrel(p.z, n_r, static_cast<int>(p.angular)),
                    EnergyUnit::ratio_hartree};
        case ProblemKind::rel_schrodinger: {
            check_n_r(n_r);
            const double x = n_r + radial_exponent(p) + 1.0;
            return {1.0 / std::sqrt(1.0 + (p.mu / x) * (p.mu / x)), EnergyUnit::ratio_rest};
        }
        case ProblemKind::dirac: {
            check_n_r(n_r);
            const double x = n_r + radial_exponent(p);
            return {1.0 / std::sqrt(1.0 + (p.mu / x) * (p.mu / x)), EnergyUnit::ratio_rest};
        }
    }
    throw std::invalid_argument("analytic_energy: unknown problem kind");
}

namespace {

// Centrifugal coefficient of the Langer form; independent of energy.
double centrifugal_coefficient(const RadialProblem& p) {
    const double half = p.angular + 0.5;
    switch (p.kind) {
        case ProblemKind::nonrel_schrodinger:
            return half * half;
        case ProblemKind::rel_schrodinger:
            return half * half - p.mu * p.mu;
        case ProblemKind::dirac: {
            const double nu = radial_exponent(p);
            if (!(nu > 0.5))
                throw std::domain_error(
                    "radial problem: coupling too strong for the semiclassical Dirac branch "
                    "(nu <= 1/2)");
            return (nu - 0.5) * (nu - 0.5);
        }
    }
    throw std::invalid_argument("centrifugal_coefficient: unknown problem kind");
}

}  // namespace

AbcCoefficients abc_of(const RadialProblem& p, double energy) {
    if (p.kind == ProblemKind::nonrel_schrodinger) {
        if (!(energy < 0.0))
            throw std::domain_error("abc_of: nonrelativistic bound states need energy < 0");
        return {-2.0 * energy, 2.0 * p.z, centrifugal_coefficient(p)};
    }
    if (!(energy > 0.0) || !(energy < 1.0))
        throw std::domain_error("abc_of: relativistic bound states need 0 < E/mc^2 < 1");
    return {(1.0 - energy) * (1.0 + energy), 2.0 * p.mu * energy, centrifugal_coefficient(p)};
}

AbcCoefficients abc_at_level(const RadialProblem& p, int n_r) {
    check_n_r(n_r);
    if (p.kind == ProblemKind::nonrel_schrodinger) {
        const double n = n_r + p.angular + 1.0;
        return {p.z * p.z / (n * n), 2.0 * p.z, centrifugal_coefficient(p)};
    }
    const double x = n_r + radial_exponent(p) +
                     (p.kind == ProblemKind::rel_schrodinger ? 1.0 : 0.0);
    const double denom = x * x + p.mu * p.mu;
    // 1 - eps^2 written as mu^2/(x^2 + mu^2): exact even where eps ~ 1 - 1e-16.
    return {p.mu * p.mu / denom, 2.0 * p.mu * x / std::sqrt(denom),
            centrifugal_coefficient(p)};
}

double langer_momentum_squared(const RadialProblem& p, double energy, double x) {
    if (!(x > 0.0)) throw std::domain_error("langer_momentum_squared: x must be positive");
    const AbcCoefficients k = abc_of(p, energy);
    return -k.a + k.b / x - k.c / (x * x);
}

double generic_rule_residual(const AbcCoefficients& k, int n_r) {
    check_n_r(n_r);
    return k.b / (2.0 * std::sqrt(k.a)) - std::sqrt(k.c) - (n_r + 0.5);
}

NikiforovUvarovRule nikiforov_uvarov_rule(const AbcCoefficients& k, int n) {
    check_n_r(n);
    if (!(k.a > 0.0) || !(k.c > 0.0))
        throw std::domain_error("nikiforov_uvarov_rule: A and C must be positive");
    const double sa = std::sqrt(k.a);
    NikiforovUvarovRule out;
    out.lambda = k.b - 2.0 * std::sqrt(k.a * k.c) - sa;
    out.tau_prime = -2.0 * sa;
    // sigma'' = 0 for sigma(x) = x, so lambda_n = -n tau' exactly; the
    // residual scales the mismatch back to quantum-number units.
    out.residual = (out.lambda + n * out.tau_prime) / (2.0 * sa);
    return out;
}

namespace {

struct SearchInterval {
    double degenerate;  // energy where the turning points coincide
    double upper;       // open upper end of the bound band
};

SearchInterval search_interval(const RadialProblem& p) {
    const double c = centrifugal_coefficient(p);
    if (p.kind == ProblemKind::nonrel_schrodinger) {
        const double half = p.angular + 0.5;
        return {-p.z * p.z / (2.0 * half * half), -1e-12};
    }
    return {std::sqrt(c / (c + p.mu * p.mu)), 1.0 - 1e-12};
}

}  // namespace

QuantizationResult wkb_energy_numeric(const RadialProblem& p, int n_r, const WkbOptions& opt) {
    check_n_r(n_r);
    if (!(opt.rel_tol >= 1e-13) || !(opt.rel_tol <= 1e-3))
        throw std::invalid_argument("wkb_energy_numeric: rel_tol outside [1e-13, 1e-3]");
    const double quad_tol = std::max(1e-13, opt.rel_tol * 1e-2);
    const double target = pi * (n_r + 0.5);
    auto action = [&](double energy) {
        const AbcCoefficients k = abc_of(p, energy);
        return (opt.method == ActionMethod::quadrature ? action_quadrature(k, quad_tol)
                                                       : action_closed_form(k)) -
               target;
    };

    // The action grows monotonically from 0 (coincident turning points) to
    // infinity across the bound band, so walking 64 log-spaced candidates
    // from the degenerate end always meets the first sign change at the
    // bracket containing the root.
    const SearchInterval band = search_interval(p);
    constexpr int n_candidates = 64;
    double lo, f_lo, hi = 0.0, f_hi = 0.0;
    bool bracketed = false;
    if (p.kind == ProblemKind::nonrel_schrodinger) {
        // A hair inside the band: far enough from the coincident turning
        // points that the discriminant is positive beyond doubt, yet with
        // an action of ~1e-9, leagues below the smallest target pi/2.
        lo = band.degenerate * (1.0 - 1e-9);
        f_lo = action(lo);
        const double ratio = std::pow(band.upper / band.degenerate, 1.0 / n_candidates);
        double cand = band.degenerate;
        for (int i = 1; i <= n_candidates && !bracketed; ++i) {
            cand *= ratio;  // log-spaced in |energy|, walking toward 0
            const double f = action(cand);
            if (f >= 0.0) {
                hi = cand;
                f_hi = f;
                bracketed = true;
            } else {
                lo = cand;
                f_lo = f;
            }
        }
    } else {
        const double gap0 = 1.0 - band.degenerate;
        if (!(gap0 > 1e-13))
            throw std::domain_error(
                "wkb_energy_numeric: bound band narrower than double resolution");
        // Offset proportional to the band width; 1e-9 of it keeps the
        // discriminant positive through rounding while the action stays
        // orders of magnitude below pi/2. All levels sit at
        // 1 - eps >= gap0 * C/X^2, well above the 1e-10 * gap0 floor.
        lo = band.degenerate + 1e-9 * gap0;
        f_lo = action(lo);
        const double ratio = std::pow(1e-10, 1.0 / n_candidates);
        double gap = gap0;
        for (int i = 1; i <= n_candidates && !bracketed; ++i) {
            gap *= ratio;  // log-spaced in 1 - eps, walking toward eps = 1
            const double cand = 1.0 - gap;
            const double f = action(cand);
            if (f >= 0.0) {
                hi = cand;
                f_hi = f;
                bracketed = true;
            } else {
                lo = cand;
                f_lo = f;
            }
        }
    }
    if (!bracketed)
        throw std::runtime_error("wkb_energy_numeric: no sign change across the bound band");

    const BisectResult root =
        bisect(action, lo, hi, f_lo, f_hi, std::max(1e-15, opt.rel_tol * 1e-3));
    QuantizationResult out;
    out.energy = {root.root, natural_unit(p.kind)};
    out.action_residual = action(root.root);
    out.bisection_steps = root.steps;
    return out;
}

}  // namespace oldqm
