#pragma once

#include <string>

namespace oldqm {

// Gaussian-cgs electromagnetic units throughout: lengths in cm, energies in
// erg, charge in statC, action in erg*s.
struct PhysicalConstants {
    double electron_mass;    // g
    double electron_charge;  // statC
    double hbar;             // erg*s
    double c;                // cm/s
};

// Electron mass/charge, hbar and c rounded to five significant digits.
// Derived quantities inherit this rounding on purpose; golden tests compare
// against values printed at the same precision.
PhysicalConstants default_constants();

// Same m, hbar, c but the charge rescaled so that e^2/(hbar c) == alpha.
PhysicalConstants with_alpha(const PhysicalConstants& k, double alpha);

double fine_structure_constant(const PhysicalConstants& k);  // e^2/(hbar c)
double bohr_radius(const PhysicalConstants& k);              // hbar^2/(m e^2), cm
double hartree_energy(const PhysicalConstants& k);           // e^2/a0 == alpha^2 m c^2, erg
double rest_energy(const PhysicalConstants& k);              // m c^2, erg

// Exact SI-2019 value; the one constant not rounded to five digits.
inline constexpr double erg_per_ev = 1.602176634e-12;

enum class EnergyUnit {
    erg,
    ev,
    ratio_rest,    // E / (m c^2), dimensionless
    ratio_hartree  // E / (e^2/a0), dimensionless
};

struct EnergyLevel {
    double value;
    EnergyUnit unit;
};

// Conversion goes through erg; the ratio units need the constant set.
EnergyLevel convert(const EnergyLevel& x, EnergyUnit to, const PhysicalConstants& k);

const char* unit_name(EnergyUnit u);
EnergyUnit parse_unit(const std::string& name);  // throws std::invalid_argument

}  // namespace oldqm
