#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oldqm/constants.hpp"
#include "oldqm/expansion.hpp"
#include "oldqm/quantize.hpp"

using namespace oldqm;

namespace {
bool close_rel(double x, double ref, double tol) {
    return std::abs(x - ref) <= tol * std::abs(ref);
}
const PhysicalConstants k = default_constants();

double last_sum(const ExpansionReport& r) { return r.partial_sums.back(); }
}  // namespace

TEST_SUITE("expansion") {
    TEST_CASE("ground-state Dirac series is the binomial series of sqrt(1 - mu^2)") {
        const double mu = 0.3;
        const ExpansionReport r = expand_dirac(1, 0.5, mu, 8);
        REQUIRE(r.orders.size() == 5);
        CHECK(close_rel(r.exact, std::sqrt(1.0 - mu * mu), 1e-15));
        const double t = mu * mu;
        CHECK(close_rel(r.partial_sums[0], 1.0, 1e-15));
        CHECK(close_rel(r.partial_sums[1], 1.0 - t / 2.0, 1e-15));
        CHECK(close_rel(r.partial_sums[2], 1.0 - t / 2.0 - t * t / 8.0, 1e-15));
        CHECK(close_rel(r.partial_sums[3], 1.0 - t / 2.0 - t * t / 8.0 - t * t * t / 16.0,
                        1e-15));
        CHECK(close_rel(r.partial_sums[4],
                        1.0 - t / 2.0 - t * t / 8.0 - t * t * t / 16.0 -
                            5.0 * t * t * t * t / 128.0,
                        1e-15));
    }

    TEST_CASE("remainder shrinks by 2^(order+2) when mu is halved") {
        const double mu = 0.2;
        const double e8 = std::abs(expand_dirac(1, 0.5, mu, 8).exact -
                                   last_sum(expand_dirac(1, 0.5, mu, 8)));
        const double e8h = std::abs(expand_dirac(1, 0.5, mu / 2, 8).exact -
                                    last_sum(expand_dirac(1, 0.5, mu / 2, 8)));
        CHECK(e8 / e8h > 700.0);   // nominal 1024 for a mu^10 remainder
        CHECK(e8 / e8h < 1500.0);
        const double e4 = std::abs(expand_rel_schrodinger(2, 0, mu, 4).exact -
                                   last_sum(expand_rel_schrodinger(2, 0, mu, 4)));
        const double e4h = std::abs(expand_rel_schrodinger(2, 0, mu / 2, 4).exact -
                                    last_sum(expand_rel_schrodinger(2, 0, mu / 2, 4)));
        CHECK(e4 / e4h > 45.0);    // nominal 64 for a mu^6 remainder
        CHECK(e4 / e4h < 90.0);
    }

    TEST_CASE("fitted remainder order tracks the first omitted power") {
        CHECK(std::abs(expand_dirac(1, 0.5, 0.1, 8).remainder_order_estimate - 10.0) < 0.4);
        CHECK(std::abs(expand_dirac(2, 0.5, 0.1, 4).remainder_order_estimate - 6.0) < 0.4);
        CHECK(std::abs(expand_rel_schrodinger(2, 0, 0.1, 4).remainder_order_estimate - 6.0) <
              0.4);
        CHECK(std::abs(expand_rel_schrodinger(1, 0, 0.1, 2).remainder_order_estimate - 4.0) <
              0.4);
    }

    TEST_CASE("quadratic spin-free coefficient of the n=2 s level") {
        // -1/8 at mu^2 and -13/128 at mu^4
        const double mu = 0.1;
        const ExpansionReport r = expand_rel_schrodinger(2, 0, mu, 4);
        CHECK(close_rel((r.partial_sums[1] - r.partial_sums[0]) / (mu * mu), -0.125, 1e-12));
        CHECK(close_rel((r.partial_sums[2] - r.partial_sums[1]) / (mu * mu * mu * mu),
                        -0.1015625, 1e-12));
    }

    TEST_CASE("series partial sums approach the exact level") {
        const double mu = 50.0 * fine_structure_constant(k);
        const ExpansionReport r = expand_dirac(3, 1.5, mu, 8);
        const double exact = energy_dirac(50.0, 1, 1.5, k);  // n = 3, j = 3/2 -> n_r = 1
        CHECK(close_rel(r.exact, exact, 1e-14));
        double prev = std::abs(r.partial_sums[1] - r.exact);
        for (std::size_t i = 2; i < r.partial_sums.size(); ++i) {
            const double cur = std::abs(r.partial_sums[i] - r.exact);
            CHECK(cur < prev);
            prev = cur;
        }
    }

    TEST_CASE("exact fine-structure spreads and their ratio") {
        CHECK(mu4_spread_rel_schrodinger(2) == Fraction(1, 12));
        CHECK(mu4_spread_dirac(2) == Fraction(1, 32));
        for (int n = 2; n <= 10; ++n) {
            CHECK(splitting_ratio(n) == Fraction(4 * n, 2 * n - 1));
            CHECK(mu4_spread_dirac(n) == Fraction(n - 1, 2 * n * n * n * n));
        }
        CHECK(splitting_ratio(2) == Fraction(8, 3));
    }

    TEST_CASE("comparison table: old quantization equals Dirac, spin-free deviates") {
        const auto rows = comparison_table(50.0, 4, k);
        REQUIRE(rows.size() == 10);
        for (const ComparisonRow& r : rows) {
            CHECK(close_rel(r.e_old, r.e_dirac, 1e-14));
            CHECK(r.n_r == r.n - r.l - 1);
            CHECK(r.j == r.l + 0.5);
            CHECK(close_rel(r.e_nonrel, -50.0 * 50.0 / (2.0 * r.n * r.n), 1e-14));
            // the spin-free equation shifts every level at order mu^4
            CHECK(std::abs(r.e_rel_schr - r.e_dirac) > 1e-9);
        }
    }

    TEST_CASE("mu^4 partial sums sit within the next order of the exact levels") {
        const double mu = fine_structure_constant(k);
        for (const ComparisonRow& r : comparison_table(1.0, 3, k)) {
            CHECK(std::abs(r.mu4_dirac - r.e_dirac) < 1e2 * std::pow(mu, 6));
            CHECK(std::abs(r.mu4_schr - r.e_rel_schr) < 1e2 * std::pow(mu, 6));
        }
    }

    TEST_CASE("validation") {
        CHECK_THROWS_AS(expand_dirac(1, 0.5, 0.1, 10), std::invalid_argument);
        CHECK_THROWS_AS(expand_dirac(1, 0.5, 0.1, 3), std::invalid_argument);
        CHECK_THROWS_AS(expand_dirac(1, 1.0, 0.1, 4), std::domain_error);
        CHECK_THROWS_AS(expand_dirac(1, 1.5, 0.1, 4), std::domain_error);  // j > n - 1/2
        CHECK_THROWS_AS(expand_rel_schrodinger(2, 0, 0.1, 6), std::invalid_argument);
        CHECK_THROWS_AS(expand_rel_schrodinger(2, 2, 0.1, 4), std::domain_error);
        CHECK_THROWS_AS(expand_dirac(1, 0.5, 1.2, 4), std::domain_error);
        CHECK_THROWS_AS(splitting_ratio(1), std::domain_error);
    }
}
