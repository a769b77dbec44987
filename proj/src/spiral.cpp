#include "oldqm/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oldqm {

namespace {

constexpr double pi = std::numbers::pi;

// dr/dt = -decay/r^2, i.e. r^3 shrinks linearly at rate 3*decay.
double decay_constant(const PhysicalConstants& k) {
    const double e2 = k.electron_charge * k.electron_charge;
    return 4.0 * e2 * e2 / (3.0 * k.electron_mass * k.electron_mass * k.c * k.c * k.c);
}

// Rotations per unit time of the instantaneous circular orbit at radius r.
double rotation_rate(double r, const PhysicalConstants& k) {
    return k.electron_charge / (2.0 * pi * std::sqrt(k.electron_mass) * r * std::sqrt(r));
}

// Int_0^collapse dt / t_rot for a decay that starts at radius r: the cube law
// gives (m^(3/2) c^3 / (4 pi e^3)) r^(3/2) in closed form.
double rotations_below(double r, const PhysicalConstants& k) {
    const double m = k.electron_mass;
    return m * std::sqrt(m) * k.c * k.c * k.c * r * std::sqrt(r) /
           (4.0 * pi * std::pow(k.electron_charge, 3.0));
}

}  // namespace

double larmor_power(double acceleration, const PhysicalConstants& k) {
    return 2.0 * k.electron_charge * k.electron_charge * acceleration * acceleration /
           (3.0 * k.c * k.c * k.c);
}

double spiral_time(double r, const PhysicalConstants& k) {
    if (!(r > 0.0)) throw std::domain_error("spiral_time: radius must be positive");
    return r * r * r / (3.0 * decay_constant(k));
}

double revolution_time(double r, const PhysicalConstants& k) {
    if (!(r > 0.0)) throw std::domain_error("revolution_time: radius must be positive");
    return 1.0 / rotation_rate(r, k);
}

double total_rotations(double r, const PhysicalConstants& k) {
    return spiral_time(r, k) / revolution_time(r, k);
}

SpiralResult integrate_spiral(double r_start, const SpiralOptions& opt,
                              const PhysicalConstants& k) {
    if (!(r_start > 0.0)) throw std::domain_error("integrate_spiral: radius must be positive");
    if (!(opt.cutoff_fraction > 0.0) || !(opt.cutoff_fraction < 1.0))
        throw std::invalid_argument("integrate_spiral: cutoff_fraction outside (0, 1)");
    if (!(opt.rel_tol >= 1e-16) || !(opt.rel_tol <= 1e-2))
        throw std::invalid_argument("integrate_spiral: rel_tol outside [1e-16, 1e-2]");

    // A perturbation of the trajectory keeps r^3 - (r0^3 - 3 decay t) constant,
    // so early truncation and roundoff reach the small radii amplified by
    // (r0/r)^3 in relative terms. Extended-precision state keeps that budget
    // far below double rounding even at the tightest rel_tol.
    const long double decay = decay_constant(k);
    auto f = [&](long double x) { return -decay / (x * x); };
    const long double rate_coeff =
        static_cast<long double>(k.electron_charge) /
        (2.0L * std::numbers::pi_v<long double> *
         std::sqrt(static_cast<long double>(k.electron_mass)));
    auto rate = [&](long double x) { return rate_coeff / (x * std::sqrt(x)); };

    // Cash-Karp embedded 4(5) pair.
    constexpr long double a21 = 1.0L / 5;
    constexpr long double a31 = 3.0L / 40, a32 = 9.0L / 40;
    constexpr long double a41 = 3.0L / 10, a42 = -9.0L / 10, a43 = 6.0L / 5;
    constexpr long double a51 = -11.0L / 54, a52 = 5.0L / 2, a53 = -70.0L / 27,
                          a54 = 35.0L / 27;
    constexpr long double a61 = 1631.0L / 55296, a62 = 175.0L / 512, a63 = 575.0L / 13824,
                          a64 = 44275.0L / 110592, a65 = 253.0L / 4096;
    constexpr long double b51 = 37.0L / 378, b53 = 250.0L / 621, b54 = 125.0L / 594,
                          b56 = 512.0L / 1771;
    constexpr long double b41 = 2825.0L / 27648, b43 = 18575.0L / 48384,
                          b44 = 13525.0L / 55296, b45 = 277.0L / 14336, b46 = 1.0L / 4;

    const long double r_cut = static_cast<long double>(opt.cutoff_fraction) * r_start;
    long double t = 0.0L, r = r_start, rotations = 0.0L;
    long double h = 1e-3L * static_cast<long double>(spiral_time(r_start, k));

    SpiralResult out;
    out.samples.push_back({0.0, r_start});
    out.analytic_collapse_time = spiral_time(r_start, k);
    out.initial_orbit_rotations = total_rotations(r_start, k);

    int steps = 0;
    while (r > r_cut) {
        if (++steps > opt.max_steps)
            throw std::runtime_error("integrate_spiral: step budget exhausted");
        // Do not step far past the cutoff: cap by the cube-law time estimate.
        const long double t_remaining = (r * r * r - r_cut * r_cut * r_cut) / (3.0L * decay);
        h = std::min(h, 1.01L * t_remaining);
        // Stage radii must stay positive (the RHS and the rotation rate both
        // blow up at zero); a stage past the collapse point rejects the step.
        const long double k1 = f(r);
        const long double s2 = r + h * a21 * k1;
        if (!(s2 > 0.0L)) { h *= 0.2L; continue; }
        const long double k2 = f(s2);
        const long double s3 = r + h * (a31 * k1 + a32 * k2);
        if (!(s3 > 0.0L)) { h *= 0.2L; continue; }
        const long double k3 = f(s3);
        const long double s4 = r + h * (a41 * k1 + a42 * k2 + a43 * k3);
        if (!(s4 > 0.0L)) { h *= 0.2L; continue; }
        const long double k4 = f(s4);
        const long double s5 = r + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        if (!(s5 > 0.0L)) { h *= 0.2L; continue; }
        const long double k5 = f(s5);
        const long double s6 = r + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        if (!(s6 > 0.0L)) { h *= 0.2L; continue; }
        const long double k6 = f(s6);
        const long double r5 = r + h * (b51 * k1 + b53 * k3 + b54 * k4 + b56 * k6);
        const long double r4 = r + h * (b41 * k1 + b43 * k3 + b44 * k4 + b45 * k5 + b46 * k6);
        const long double err = std::abs(r5 - r4);
        const long double tol = static_cast<long double>(opt.rel_tol) * r;
        if (err <= tol && r5 > 0.0L) {
            // The rotation count rides along as a second state variable; its
            // rate depends only on r, so the stage values are the rates at the
            // stage radii and the same fifth-order weights apply.
            rotations +=
                h * (b51 * rate(r) + b53 * rate(s3) + b54 * rate(s4) + b56 * rate(s6));
            t += h;
            r = r5;
            out.samples.push_back(
                {static_cast<double>(t), static_cast<double>(r)});
        }
        const long double shrink =
            err > 0.0L ? 0.9L * std::pow(tol / err, 0.2L) : 5.0L;
        h *= std::clamp(shrink, 0.2L, 5.0L);
    }

    const double r_end = static_cast<double>(r);
    out.collapse_time = static_cast<double>(t) + spiral_time(r_end, k);
    out.integrated_rotations =
        static_cast<double>(rotations) + rotations_below(r_end, k);
    return out;
}

}  // namespace oldqm
