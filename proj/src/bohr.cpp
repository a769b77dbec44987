#include "oldqm/bohr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oldqm {

namespace {

void check_state(const BohrState& s) {
    if (!(s.z > 0.0)) throw std::domain_error("bohr: nuclear charge must be positive");
    if (s.n < 1) throw std::domain_error("bohr: principal quantum number must be >= 1");
}

}  // namespace

double bohr_orbit_radius(const BohrState& s, const PhysicalConstants& k) {
    check_state(s);
    const double n = s.n;
    return k.hbar * k.hbar * n * n /
           (k.electron_mass * s.z * k.electron_charge * k.electron_charge);
}

double bohr_energy(const BohrState& s, const PhysicalConstants& k) {
    check_state(s);
    const double e2 = k.electron_charge * k.electron_charge;
    const double n = s.n;
    return -k.electron_mass * s.z * s.z * e2 * e2 / (2.0 * k.hbar * k.hbar * n * n);
}

double bohr_speed(const BohrState& s, const PhysicalConstants& k) {
    check_state(s);
    return s.z * k.electron_charge * k.electron_charge / (k.hbar * s.n);
}

double virial_residual(const BohrState& s, const PhysicalConstants& k) {
    const double e2 = k.electron_charge * k.electron_charge;
    return bohr_energy(s, k) + s.z * e2 / (2.0 * bohr_orbit_radius(s, k));
}

PhotonTransition transition(double z, int n_initial, int n_final, const PhysicalConstants& k) {
    if (n_initial == n_final)
        throw std::domain_error("transition: equal levels emit no photon");
    const double e_i = bohr_energy({z, n_initial}, k);
    const double e_f = bohr_energy({z, n_final}, k);
    const double de = e_i - e_f;
    const double lambda = 2.0 * std::numbers::pi * k.hbar * k.c / std::abs(de);
    return {de, lambda, lambda * 1e7,
            de > 0.0 ? PhotonDirection::emission : PhotonDirection::absorption};
}

std::vector<CircularSample> circular_trajectory(double radius, double angular_speed,
                                                const std::vector<double>& times) {
    if (!(radius > 0.0)) throw std::domain_error("circular_trajectory: radius must be positive");
    std::vector<CircularSample> out;
    out.reserve(times.size());
    const double w = angular_speed;
    for (double t : times) {
        const double cwt = std::cos(w * t), swt = std::sin(w * t);
        CircularSample s;
        s.t = t;
        s.x = radius * cwt;
        s.y = radius * swt;
        s.vx = -radius * w * swt;
        s.vy = radius * w * cwt;
        s.ax = -w * w * s.x;
        s.ay = -w * w * s.y;
        out.push_back(s);
    }
    return out;
}

}  // namespace oldqm
