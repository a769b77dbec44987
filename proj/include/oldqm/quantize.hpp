#pragma once

#include "oldqm/constants.hpp"
#include "oldqm/integrals.hpp"

namespace oldqm {

// The three hydrogenic radial problems whose WKB action integral is exactly
// of the form sqrt(-A + B/x - C/x^2).
enum class ProblemKind {
    nonrel_schrodinger,  // x in units a0, energy in hartree (ratio_hartree)
    rel_schrodinger,     // x in units hbar/(m c), energy as E/(m c^2)
    dirac                // x in units hbar/(m c), energy as E/(m c^2)
};

struct RadialProblem {
    ProblemKind kind;
    double z;
    double mu;       // coupling alpha*Z
    double angular;  // l for the Schrodinger kinds, j for Dirac
};

// Factories validate the angular momentum and subcriticality of the coupling
// (mu < l+1/2 resp. j+1/2 keeps the effective centrifugal strength real).
RadialProblem make_nonrel(double z, int l, const PhysicalConstants& k);
RadialProblem make_rel_schrodinger(double z, int l, const PhysicalConstants& k);
RadialProblem make_dirac(double z, double j, const PhysicalConstants& k);

// Effective radial exponent: l for nonrel, -1/2 + sqrt((l+1/2)^2 - mu^2) for
// the relativistic Schrodinger problem, sqrt((j+1/2)^2 - mu^2) for Dirac.
double radial_exponent(const RadialProblem& p);

EnergyUnit natural_unit(ProblemKind kind);

// Closed-form spectra. n_r = 0, 1, 2, ... counts radial nodes; the ground
// state of every kind is n_r = 0.
double energy_nonrel(double z, int n_r, int l);                                   // -Z^2/(2 n^2), hartree
double energy_rel_schrodinger(double z, int n_r, int l, const PhysicalConstants& k);  // E/mc^2
double energy_dirac(double z, int n_r, double j, const PhysicalConstants& k);         // E/mc^2
EnergyLevel analytic_energy(const RadialProblem& p, int n_r);

// Langer form of the radial problem at the given energy (in the kind's
// natural unit): coefficients of -A + B/x - C/x^2.
// For Dirac the centrifugal coefficient is C = (nu - 1/2)^2: the effective
// equation with kappa_eff = nu - 1 is the one whose lowest action solution
// is the j-series ground state, and with it the half-integer rule
// B/(2 sqrt A) - sqrt C = n_r + 1/2 holds at the exact Dirac energies for
// n_r = 0, 1, 2, ...
AbcCoefficients abc_of(const RadialProblem& p, double energy);

// abc at the analytic level n_r, computed from the closed forms (A via
// mu^2/(X^2+mu^2), not via 1 - eps^2), so no cancellation occurs even where
// eps is within a few ulps of 1. Needed to check algebraic identities at
// small coupling; agrees with abc_of at the same energy to rounding.
AbcCoefficients abc_at_level(const RadialProblem& p, int n_r);

// -A + B/x - C/x^2 at radius x (kind's natural radial unit).
double langer_momentum_squared(const RadialProblem& p, double energy, double x);

// B/(2 sqrt A) - sqrt C - (n_r + 1/2); zero at quantized energies.
double generic_rule_residual(const AbcCoefficients& k, int n_r);

// Polynomial-reduction quantization of the same equation: sigma = x,
// sigma_tilde = -a x^2 + b x - c + 1/4, tau = -2 sqrt(a) x + stuff.
// residual = (lambda + n tau_prime)/(2 sqrt a) equals the generic rule
// residual identically.
struct NikiforovUvarovRule {
    double lambda;     // b - 2 sqrt(a c) - sqrt(a)
    double tau_prime;  // -2 sqrt(a)
    double residual;
};
NikiforovUvarovRule nikiforov_uvarov_rule(const AbcCoefficients& k, int n);

// Fully numerical WKB quantizer: root of quadrature(abc_of(p, E)) =
// pi (n_r + 1/2) in E. Scans 64 log-spaced candidates across the bound
// interval for a sign change, then bisects. Independent of the closed-form
// spectra end to end when method == quadrature (the default); the
// closed-form action is available as a cross check of the root-finder alone.
enum class ActionMethod { quadrature, closed_form };

struct WkbOptions {
    double rel_tol = 1e-10;
    ActionMethod method = ActionMethod::quadrature;
};

struct QuantizationResult {
    EnergyLevel energy;
    double action_residual;  // quantization condition at the returned energy
    int bisection_steps;
};

QuantizationResult wkb_energy_numeric(const RadialProblem& p, int n_r,
                                      const WkbOptions& opt = {});

}  // namespace oldqm
