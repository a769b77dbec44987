#pragma once

#include <vector>

#include "oldqm/constants.hpp"

namespace oldqm {

// Bound relativistic Kepler orbit
//   1/r = (1 + eps cos(omega theta)) / (a (1 - eps^2)),
// a precessing ellipse: omega < 1 advances the perihelion each turn.
// semi_major is dimensionless, in units of a0/Z; convert at the edge.
struct OrbitGeometry {
    double semi_major;
    double eccentricity;  // [0, 1)
    double omega;         // (0, 1]
};

struct SommerfeldQuantumNumbers {
    int radial;     // n_r >= 0
    int azimuthal;  // n_theta >= 1
};

struct OrbitDynamics {
    double omega;    // sqrt(1 - Z^2 e^4 / (c^2 p_theta^2))
    double focal_d;  // Z e^2 E / (omega^2 c^2 p_theta^2), 1/cm
};

// Orbit shape from conserved quantities. energy_ratio = E/(m c^2) includes
// rest mass; p_theta in erg*s must exceed Z e^2/c or the orbit spirals in.
OrbitDynamics orbit_shape_from_dynamics(double energy_ratio, double p_theta, double z,
                                        const PhysicalConstants& k);

// Orbit of the (n_r, n_theta) level; requires alpha Z < n_theta.
OrbitGeometry quantized_orbit(const SommerfeldQuantumNumbers& q, double z,
                              const PhysicalConstants& k);

// Total energy over m c^2 of the level:
//   [1 + alpha^2 Z^2 / (n_r + sqrt(n_theta^2 - alpha^2 Z^2))^2]^(-1/2)
EnergyLevel old_fine_structure_energy(const SommerfeldQuantumNumbers& q, double z,
                                      const PhysicalConstants& k);

struct OrbitPoint {
    double theta;
    double r;  // units of the geometry's semi_major
    double x, y;
};

std::vector<OrbitPoint> sample_orbit(const OrbitGeometry& g, const std::vector<double>& thetas);

// Perihelion advance per radial period, 2 pi (1/omega - 1), radians.
double perihelion_shift(const OrbitGeometry& g);

// Relativistic energy equation along the quantized orbit, with s = 1/r in cm:
//   (E/mc^2 + (Z e^2/mc^2) s)^2 - 1 - (hbar n_theta/(m c))^2 ((ds/dtheta)^2 + s^2)
// Identically zero on solutions; the return is the rounding-level residue.
double energy_equation_residual(const SommerfeldQuantumNumbers& q, double z,
                                const PhysicalConstants& k, double theta);

// Expansions of the orbit parameters and energy through (alpha Z)^4.
struct OrbitSeries {
    double omega;
    double eccentricity;
    double semi_major;  // units a0/Z
    double energy;      // total / (m c^2)
};

OrbitSeries orbit_series(const SommerfeldQuantumNumbers& q, double z,
                         const PhysicalConstants& k);

}  // namespace oldqm
