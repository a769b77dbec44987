#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oldqm/constants.hpp"

using namespace oldqm;

namespace {
bool close_rel(double x, double ref, double tol) {
    return std::abs(x - ref) <= tol * std::abs(ref);
}
}  // namespace

TEST_SUITE("constants") {
    TEST_CASE("derived scales from the 5-digit cgs inputs") {
        const PhysicalConstants k = default_constants();
        // Independently evaluated from m = 9.1094e-28 g, e = 4.8032e-10 statC,
        // hbar = 1.0546e-27 erg s, c = 2.9979e10 cm/s at 50-digit precision.
        CHECK(close_rel(fine_structure_constant(k), 7.2972030671169547e-3, 1e-14));
        CHECK(close_rel(bohr_radius(k), 5.2920558659884607e-9, 1e-14));
        CHECK(close_rel(hartree_energy(k), 4.3595023983539908e-11, 1e-14));
        CHECK(close_rel(rest_energy(k), 8.1869861732454022e-7, 1e-14));
    }

    TEST_CASE("hartree is alpha^2 of the rest energy") {
        const PhysicalConstants k = default_constants();
        const double alpha = fine_structure_constant(k);
        CHECK(close_rel(hartree_energy(k), alpha * alpha * rest_energy(k), 1e-15));
    }

    TEST_CASE("rest energy in electron volts") {
        const PhysicalConstants k = default_constants();
        const EnergyLevel rest{1.0, EnergyUnit::ratio_rest};
        CHECK(close_rel(convert(rest, EnergyUnit::ev, k).value, 510991.48492795957, 1e-14));
    }

    TEST_CASE("unit conversions round-trip") {
        const PhysicalConstants k = default_constants();
        const EnergyLevel e{-13.6057, EnergyUnit::ev};
        for (EnergyUnit u : {EnergyUnit::erg, EnergyUnit::ratio_rest, EnergyUnit::ratio_hartree}) {
            const EnergyLevel through = convert(convert(e, u, k), EnergyUnit::ev, k);
            CHECK(close_rel(through.value, e.value, 1e-14));
        }
        CHECK(convert(e, EnergyUnit::ev, k).value == e.value);
    }

    TEST_CASE("alpha override rescales the charge only") {
        const PhysicalConstants base = default_constants();
        const PhysicalConstants k = with_alpha(base, 1.0 / 137.0);
        CHECK(close_rel(fine_structure_constant(k), 1.0 / 137.0, 1e-15));
        CHECK(k.electron_mass == base.electron_mass);
        CHECK(k.hbar == base.hbar);
        CHECK(k.c == base.c);
        CHECK_THROWS_AS(with_alpha(base, 0.0), std::domain_error);
        CHECK_THROWS_AS(with_alpha(base, -0.5), std::domain_error);
    }

    TEST_CASE("unit names parse back") {
        for (EnergyUnit u : {EnergyUnit::erg, EnergyUnit::ev, EnergyUnit::ratio_rest,
                             EnergyUnit::ratio_hartree}) {
            CHECK(parse_unit(unit_name(u)) == u);
        }
        CHECK_THROWS_AS(parse_unit("furlong"), std::invalid_argument);
    }
}
