#pragma once

#include <vector>

#include "oldqm/constants.hpp"

namespace oldqm {

struct BohrState {
    double z;  // nuclear charge number; real to allow continuation in alpha*Z
    int n;     // principal quantum number, >= 1
};

double bohr_orbit_radius(const BohrState& s, const PhysicalConstants& k);  // hbar^2 n^2/(m Z e^2), cm
double bohr_energy(const BohrState& s, const PhysicalConstants& k);        // -m Z^2 e^4/(2 hbar^2 n^2), erg
double bohr_speed(const BohrState& s, const PhysicalConstants& k);         // Z e^2/(hbar n), cm/s

// E_n + Z e^2/(2 r_n); zero up to rounding by the virial theorem.
double virial_residual(const BohrState& s, const PhysicalConstants& k);

enum class PhotonDirection { emission, absorption };

struct PhotonTransition {
    double energy;         // E_initial - E_final, erg; sign reports direction
    double wavelength_cm;  // 2 pi hbar c / |energy|
    double wavelength_nm;
    PhotonDirection direction;
};

// n_initial == n_final has no photon and is a domain error.
PhotonTransition transition(double z, int n_initial, int n_final, const PhysicalConstants& k);

struct CircularSample {
    double t;
    double x, y;    // cm
    double vx, vy;  // cm/s
    double ax, ay;  // cm/s^2
};

// Uniform circular motion sampled at the given times. Each sample depends on
// its time alone, so any partition of the time list gives identical values.
std::vector<CircularSample> circular_trajectory(double radius, double angular_speed,
                                                const std::vector<double>& times);

}  // namespace oldqm
