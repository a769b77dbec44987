#include "oldqm/kepler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oldqm {

namespace {

constexpr double pi = std::numbers::pi;

void check_quantum_numbers(const SommerfeldQuantumNumbers& q, double z,
                           const PhysicalConstants& k) {
    if (q.radial < 0) throw std::domain_error("kepler: radial quantum number must be >= 0");
    if (q.azimuthal < 1) throw std::domain_error("kepler: azimuthal quantum number must be >= 1");
    if (!(z > 0.0)) throw std::domain_error("kepler: nuclear charge must be positive");
    if (!(fine_structure_constant(k) * z < q.azimuthal))
        throw std::domain_error("kepler: supercritical coupling, alpha Z >= n_theta");
}

}  // namespace

OrbitDynamics orbit_shape_from_dynamics(double energy_ratio, double p_theta, double z,
                                        const PhysicalConstants& k) {
    const double e2 = k.electron_charge * k.electron_charge;
    const double critical = z * e2 / k.c;
    if (!(p_theta > critical))
        throw std::domain_error("orbit_shape_from_dynamics: p_theta <= Z e^2/c has no bound orbit");
    const double ratio = critical / p_theta;
    const double omega_sq = (1.0 - ratio) * (1.0 + ratio);
    const double energy = energy_ratio * rest_energy(k);
    return {std::sqrt(omega_sq), z * e2 * energy / (omega_sq * k.c * k.c * p_theta * p_theta)};
}

OrbitGeometry quantized_orbit(const SommerfeldQuantumNumbers& q, double z,
                              const PhysicalConstants& k) {
    check_quantum_numbers(q, z, k);
    const double az = fine_structure_constant(k) * z;
    const double nt = q.azimuthal;
    const double nr = q.radial;
    const double root = std::sqrt(nt * nt - az * az);  // omega * n_theta
    const double big_n = nr + root;
    OrbitGeometry g;
    g.omega = root / nt;
    g.eccentricity = std::sqrt(nr * (nr + 2.0 * root)) / big_n;
    g.semi_major = big_n * std::sqrt(az * az + big_n * big_n);
    return g;
}

EnergyLevel old_fine_structure_energy(const SommerfeldQuantumNumbers& q, double z,
                                      const PhysicalConstants& k) {
    check_quantum_numbers(q, z, k);
    const double az = fine_structure_constant(k) * z;
    const double nt = q.azimuthal;
    const double big_n = q.radial + std::sqrt(nt * nt - az * az);
    return {1.0 / std::sqrt(1.0 + az * az / (big_n * big_n)), EnergyUnit::ratio_rest};
}

std::vector<OrbitPoint> sample_orbit(const OrbitGeometry& g, const std::vector<double>& thetas) {
    const double p = g.semi_major * (1.0 - g.eccentricity) * (1.0 + g.eccentricity);
    std::vector<OrbitPoint> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        const double r = p / (1.0 + g.eccentricity * std::cos(g.omega * theta));
        out.push_back({theta, r, r * std::cos(theta), r * std::sin(theta)});
    }
    return out;
}

double perihelion_shift(const OrbitGeometry& g) {
    if (!(g.omega > 0.0)) throw std::domain_error("perihelion_shift: omega must be positive");
    return 2.0 * pi * (1.0 - g.omega) / g.omega;
}

double energy_equation_residual(const SommerfeldQuantumNumbers& q, double z,
                                const PhysicalConstants& k, double theta) {
    const OrbitGeometry g = quantized_orbit(q, z, k);
    const double energy_ratio = old_fine_structure_energy(q, z, k).value;
    const double a_cm = g.semi_major * bohr_radius(k) / z;
    const double p = a_cm * (1.0 - g.eccentricity) * (1.0 + g.eccentricity);
    const double s = (1.0 + g.eccentricity * std::cos(g.omega * theta)) / p;        // 1/cm
    const double ds = -g.eccentricity * g.omega * std::sin(g.omega * theta) / p;    // 1/cm
    const double coulomb_len = z * k.electron_charge * k.electron_charge / rest_energy(k);
    const double angular_len = k.hbar * q.azimuthal / (k.electron_mass * k.c);
    const double lhs = energy_ratio + coulomb_len * s;
    return lhs * lhs - 1.0 - angular_len * angular_len * (ds * ds + s * s);
}

OrbitSeries orbit_series(const SommerfeldQuantumNumbers& q, double z,
                         const PhysicalConstants& k) {
    check_quantum_numbers(q, z, k);
    const double b = fine_structure_constant(k) * z;
    const double b2 = b * b, b4 = b2 * b2;
    const double nr = q.radial, nt = q.azimuthal;
    const double s = nr + nt;
    OrbitSeries out;
    out.omega = 1.0 - b2 / (2.0 * nt * nt) - b4 / (8.0 * nt * nt * nt * nt);
    out.eccentricity = std::sqrt(nr) * std::sqrt(nr + 2.0 * nt) / s
                     + std::sqrt(nr) * b2 / (2.0 * s * s * std::sqrt(nr + 2.0 * nt))
                     + std::sqrt(nr) * (3.0 * nr + 5.0 * nt) * b4 /
                           (8.0 * nt * s * s * s * std::pow(nr + 2.0 * nt, 1.5));
    out.semi_major = s * s - b2 * (2.0 * nr + nt) / (2.0 * nt)
                   - (b4 / 8.0) * (2.0 * nr / (nt * nt * nt) + 1.0 / (s * s));
    out.energy = 1.0 - b2 / (2.0 * s * s)
               - b4 * (4.0 * nr + nt) / (8.0 * nt * s * s * s * s);
    return out;
}

}  // namespace oldqm
