#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oldqm/integrals.hpp"

using namespace oldqm;

namespace {
bool close_rel(double x, double ref, double tol) {
    return std::abs(x - ref) <= tol * std::abs(ref);
}

// Implementation-independent check: plain midpoint rule in r, no substitution.
double midpoint_action(const AbcCoefficients& k, int panels) {
    const auto [r1, r2] = turning_points(k);
    const double h = (r2 - r1) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double r = r1 + (i + 0.5) * h;
        const double arg = -k.a + k.b / r - k.c / (r * r);
        sum += std::sqrt(arg > 0.0 ? arg : 0.0);
    }
    return sum * h;
}
}  // namespace

TEST_SUITE("integrals") {
    TEST_CASE("closed form on a frozen triple") {
        // pi*(B/(2 sqrt A) - sqrt C) at A=2, B=6, C=2.25, evaluated at 50 digits.
        CHECK(close_rel(action_closed_form({2.0, 6.0, 2.25}), 1.9519354268528595, 1e-15));
    }

    TEST_CASE("degenerate triple gives exactly zero") {
        const double b = 2.0 * std::sqrt(3.0 * 1.75);
        CHECK(action_closed_form({3.0, b, 1.75}) == 0.0);
        CHECK(action_quadrature({3.0, b, 1.75}) == 0.0);
    }

    TEST_CASE("turning points solve the quadratic stably") {
        std::mt19937 rng(20240811u);
        std::uniform_real_distribution<double> coeff(0.1, 10.0);
        std::uniform_real_distribution<double> log_ratio(std::log(1.01), std::log(100.0));
        for (int i = 0; i < 500; ++i) {
            const double a = coeff(rng), c = coeff(rng);
            const double b = std::exp(log_ratio(rng)) * 2.0 * std::sqrt(a * c);
            const auto [r1, r2] = turning_points({a, b, c});
            CHECK(r1 > 0.0);
            CHECK(r2 > r1);
            CHECK(close_rel(r1 * r2, c / a, 1e-13));
            CHECK(close_rel(r1 + r2, b / a, 1e-13));
        }
    }

    TEST_CASE("quadrature agrees with the closed form on random triples") {
        std::mt19937 rng(7u);
        std::uniform_real_distribution<double> coeff(0.1, 10.0);
        std::uniform_real_distribution<double> log_ratio(std::log(1.01), std::log(100.0));
        for (int i = 0; i < 60; ++i) {
            const double a = coeff(rng), c = coeff(rng);
            const double b = std::exp(log_ratio(rng)) * 2.0 * std::sqrt(a * c);
            const AbcCoefficients k{a, b, c};
            CHECK(close_rel(action_quadrature(k, 1e-12), action_closed_form(k), 1e-10));
        }
    }

    TEST_CASE("midpoint cross-check without the cosine substitution") {
        const AbcCoefficients k{2.0, 6.0, 2.25};
        // Inverse-square-root edges: midpoint converges like 1/sqrt(panels),
        // so only a loose agreement is meaningful here.
        CHECK(close_rel(midpoint_action(k, 2000000), action_closed_form(k), 1e-4));
    }

    TEST_CASE("scaling identities") {
        const AbcCoefficients base{1.3, 5.0, 2.1};
        const double ref = action_closed_form(base);
        for (double s : {0.25, 2.0, 9.0}) {
            CHECK(close_rel(action_closed_form({base.a * s * s, base.b * s, base.c}), ref, 1e-14));
            CHECK(close_rel(action_closed_form({base.a * s, base.b * s, base.c * s}),
                            std::sqrt(s) * ref, 1e-14));
        }
    }

    TEST_CASE("derivative identity: finite difference matches pi/(2 sqrt A)") {
        const AbcCoefficients k{2.0, 6.0, 2.25};
        const auto [fd, analytic] = derivative_identity(k, 1e-3, 1e-12);
        CHECK(close_rel(analytic, std::numbers::pi / (2.0 * std::sqrt(2.0)), 1e-15));
        CHECK(close_rel(fd, analytic, 1e-8));
    }

    TEST_CASE("eccentricity average: closed values") {
        const auto zero = eccentricity_integral(0.0);
        CHECK(zero.first == 0.0);
        CHECK(zero.second == 0.0);
        const auto mid = eccentricity_integral(0.6, 1e-12);
        CHECK(close_rel(mid.second, 0.25, 1e-15));
        CHECK(std::abs(mid.first - 0.25) <= 1e-12);
        const auto high = eccentricity_integral(0.99, 1e-12);
        CHECK(close_rel(high.second, 6.0888120500833590, 1e-14));
        CHECK(close_rel(high.first, high.second, 1e-10));
    }

    TEST_CASE("eccentricity average: grid agreement") {
        for (double eps = 0.1; eps < 0.95; eps += 0.1) {
            const auto [numeric, closed] = eccentricity_integral(eps, 1e-13);
            CHECK(std::abs(numeric - closed) <= 1e-11);
        }
    }

    TEST_CASE("domain and tolerance validation") {
        CHECK_THROWS_AS(action_closed_form({1.0, 1.0, 1.0}), std::domain_error);
        CHECK_THROWS_AS(turning_points({1.0, 1.0, 1.0}), std::domain_error);
        CHECK_THROWS_AS(action_closed_form({-1.0, 5.0, 1.0}), std::domain_error);
        CHECK_THROWS_AS(action_quadrature({2.0, 6.0, 2.25}, 1e-20), std::invalid_argument);
        CHECK_THROWS_AS(eccentricity_integral(1.0), std::domain_error);
        CHECK_THROWS_AS(eccentricity_integral(-0.2), std::domain_error);
        CHECK_THROWS_AS(derivative_identity({2.0, 6.0, 2.25}, 0.0), std::invalid_argument);
    }
}
