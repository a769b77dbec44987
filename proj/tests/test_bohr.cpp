#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oldqm/bohr.hpp"
#include "oldqm/constants.hpp"

using namespace oldqm;

namespace {
bool close_rel(double x, double ref, double tol) {
    return std::abs(x - ref) <= tol * std::abs(ref);
}
const PhysicalConstants k = default_constants();
}  // namespace

TEST_SUITE("bohr") {
    TEST_CASE("helium ion ground and first excited circular orbits") {
        // 50-digit evaluations from the same 5-digit constants.
        CHECK(close_rel(bohr_orbit_radius({2.0, 1}, k), 2.6460279329942303e-9, 1e-14));
        const EnergyLevel e1{bohr_energy({2.0, 1}, k), EnergyUnit::erg};
        const EnergyLevel e2{bohr_energy({2.0, 2}, k), EnergyUnit::erg};
        CHECK(close_rel(convert(e1, EnergyUnit::ev, k).value, -54.419747558919784, 1e-13));
        CHECK(close_rel(convert(e2, EnergyUnit::ev, k).value, -13.604936889729946, 1e-13));
    }

    TEST_CASE("hydrogen ground-state speed is alpha c") {
        CHECK(close_rel(bohr_speed({1.0, 1}, k), 2.1876285074909918e8, 1e-14));
        CHECK(close_rel(bohr_speed({1.0, 1}, k), fine_structure_constant(k) * k.c, 1e-15));
    }

    TEST_CASE("virial identity holds on a grid") {
        for (double z : {1.0, 2.0, 10.0, 92.0})
            for (int n : {1, 2, 3, 7, 20}) {
                const BohrState s{z, n};
                const double scale = std::abs(bohr_energy(s, k));
                CHECK(std::abs(virial_residual(s, k)) <= 1e-14 * scale);
            }
    }

    TEST_CASE("angular momentum is quantized in units of hbar") {
        for (int n : {1, 2, 5, 13}) {
            const BohrState s{3.0, n};
            const double p_times_r =
                k.electron_mass * bohr_speed(s, k) * bohr_orbit_radius(s, k);
            CHECK(close_rel(p_times_r, n * k.hbar, 1e-14));
        }
    }

    TEST_CASE("orbit length closes an integer number of de Broglie waves") {
        for (int n : {1, 2, 3, 8}) {
            const BohrState s{1.0, n};
            const double lambda_db =
                2.0 * std::numbers::pi * k.hbar / (k.electron_mass * bohr_speed(s, k));
            const double circumference = 2.0 * std::numbers::pi * bohr_orbit_radius(s, k);
            CHECK(close_rel(circumference, n * lambda_db, 1e-14));
        }
    }

    TEST_CASE("scaling laws in Z and n") {
        const double r11 = bohr_orbit_radius({1.0, 1}, k);
        const double e11 = bohr_energy({1.0, 1}, k);
        for (double z : {1.0, 4.0, 30.0})
            for (int n : {1, 3, 6}) {
                CHECK(close_rel(bohr_orbit_radius({z, n}, k), r11 * n * n / z, 1e-13));
                CHECK(close_rel(bohr_energy({z, n}, k), e11 * z * z / (n * n), 1e-13));
            }
    }

    TEST_CASE("transition wavelengths") {
        const PhotonTransition he = transition(2.0, 2, 1, k);
        CHECK(close_rel(he.wavelength_nm, 30.377819516255958, 1e-13));
        CHECK(he.direction == PhotonDirection::emission);
        CHECK(he.energy > 0.0);
        const PhotonTransition balmer = transition(1.0, 3, 2, k);
        CHECK(close_rel(balmer.wavelength_nm, 656.16090155112869, 1e-13));
        const PhotonTransition lyman = transition(1.0, 2, 1, k);
        CHECK(close_rel(lyman.wavelength_nm, 121.51127806502383, 1e-13));
        const PhotonTransition up = transition(1.0, 1, 2, k);
        CHECK(up.direction == PhotonDirection::absorption);
        CHECK(close_rel(up.wavelength_nm, lyman.wavelength_nm, 1e-15));
    }

    TEST_CASE("photon energy matches the level difference") {
        const PhotonTransition t = transition(2.0, 2, 1, k);
        const double de = bohr_energy({2.0, 2}, k) - bohr_energy({2.0, 1}, k);
        CHECK(close_rel(t.energy, de, 1e-14));
        const double planck = 2.0 * std::numbers::pi * k.hbar;
        CHECK(close_rel(t.wavelength_cm, planck * k.c / t.energy, 1e-14));
    }

    TEST_CASE("invalid states are rejected") {
        CHECK_THROWS_AS(bohr_orbit_radius({0.0, 1}, k), std::domain_error);
        CHECK_THROWS_AS(bohr_orbit_radius({-1.0, 1}, k), std::domain_error);
        CHECK_THROWS_AS(bohr_energy({1.0, 0}, k), std::domain_error);
        CHECK_THROWS_AS(transition(1.0, 2, 2, k), std::domain_error);
    }

    TEST_CASE("circular trajectory kinematics are self-consistent") {
        const double r = bohr_orbit_radius({1.0, 1}, k);
        const double omega = bohr_speed({1.0, 1}, k) / r;
        std::vector<double> times;
        for (int i = 0; i < 25; ++i) times.push_back(1e-17 * i);
        const auto samples = circular_trajectory(r, omega, times);
        REQUIRE(samples.size() == times.size());
        for (const CircularSample& s : samples) {
            CHECK(close_rel(std::hypot(s.x, s.y), r, 1e-14));
            CHECK(close_rel(std::hypot(s.vx, s.vy), omega * r, 1e-14));
            // a = -omega^2 x, both components.
            CHECK(std::abs(s.ax + omega * omega * s.x) <= 1e-14 * omega * omega * r);
            CHECK(std::abs(s.ay + omega * omega * s.y) <= 1e-14 * omega * omega * r);
            // velocity is tangential
            CHECK(std::abs(s.x * s.vx + s.y * s.vy) <= 1e-12 * r * omega * r);
        }
    }
}
