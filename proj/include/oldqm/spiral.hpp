#pragma once

#include <vector>

#include "oldqm/constants.hpp"

namespace oldqm {

// Classical radiative decay of a circular Coulomb orbit: Larmor losses shrink
// the radius as dr/dt = -4 e^4/(3 m^2 c^3 r^2), i.e. r^3 decreases linearly.

double larmor_power(double acceleration, const PhysicalConstants& k);  // 2 e^2 a^2/(3 c^3), erg/s
double spiral_time(double r, const PhysicalConstants& k);      // m^2 c^3 r^3/(4 e^4), s
double revolution_time(double r, const PhysicalConstants& k);  // 2 pi r / (e / sqrt(m r)), s
double total_rotations(double r, const PhysicalConstants& k);  // spiral_time / revolution_time

struct SpiralOptions {
    double rel_tol = 1e-10;         // local error control of the adaptive RK step
    double cutoff_fraction = 1e-3;  // integrate until r <= cutoff_fraction * r_start
    int max_steps = 2000000;
};

struct SpiralSample {
    double t;
    double r;
};

struct SpiralResult {
    std::vector<SpiralSample> samples;   // every accepted step, ends at the cutoff
    double collapse_time;                // t_end plus the exact cube-law tail
    double analytic_collapse_time;       // spiral_time(r_start)
    double initial_orbit_rotations;      // spiral_time / revolution_time at r_start
    double integrated_rotations;         // Int dt / t_rot(r(t)) down to r = 0
};

// Adaptive embedded Runge-Kutta integration of the decay ODE. The rotation
// count integral accumulates along the trajectory; the stretch below the
// cutoff contributes its closed-form tail. integrated_rotations roughly
// doubles initial_orbit_rotations because revolutions speed up as r shrinks.
SpiralResult integrate_spiral(double r_start, const SpiralOptions& opt,
                              const PhysicalConstants& k);

}  // namespace oldqm
