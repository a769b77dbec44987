#include "oldqm/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace oldqm {

PhysicalConstants default_constants() {
    return {9.1094e-28, 4.8032e-10, 1.0546e-27, 2.9979e10};
}

PhysicalConstants with_alpha(const PhysicalConstants& k, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("with_alpha: alpha must be positive");
    PhysicalConstants out = k;
    out.electron_charge = std::sqrt(alpha * k.hbar * k.c);
    return out;
}

double fine_structure_constant(const PhysicalConstants& k) {
    return k.electron_charge * k.electron_charge / (k.hbar * k.c);
}

double bohr_radius(const PhysicalConstants& k) {
    return k.hbar * k.hbar / (k.electron_mass * k.electron_charge * k.electron_charge);
}

double hartree_energy(const PhysicalConstants& k) {
    return k.electron_charge * k.electron_charge / bohr_radius(k);
}

double rest_energy(const PhysicalConstants& k) {
    return k.electron_mass * k.c * k.c;
}

EnergyLevel convert(const EnergyLevel& x, EnergyUnit to, const PhysicalConstants& k) {
    double erg = 0.0;
    switch (x.unit) {
        case EnergyUnit::erg: erg = x.value; break;
        case EnergyUnit::ev: erg = x.value * erg_per_ev; break;
        case EnergyUnit::ratio_rest: erg = x.value * rest_energy(k); break;
        case EnergyUnit::ratio_hartree: erg = x.value * hartree_energy(k); break;
    }
    switch (to) {
        case EnergyUnit::erg: return {erg, to};
        case EnergyUnit::ev: return {erg / erg_per_ev, to};
        case EnergyUnit::ratio_rest: return {erg / rest_energy(k), to};
        case EnergyUnit::ratio_hartree: return {erg / hartree_energy(k), to};
    }
    throw std::invalid_argument("convert: unknown target unit");
}

const char* unit_name(EnergyUnit u) {
    switch (u) {
        case EnergyUnit::erg: return "erg";
        case EnergyUnit::ev: return "eV";
        case EnergyUnit::ratio_rest: return "E/mc2";
        case EnergyUnit::ratio_hartree: return "E/E_h";
    }
    return "?";
}

EnergyUnit parse_unit(const std::string& name) {
    if (name == "erg") return EnergyUnit::erg;
    if (name == "eV" || name == "ev") return EnergyUnit::ev;
    if (name == "E/mc2" || name == "mc2" || name == "rest") return EnergyUnit::ratio_rest;
    if (name == "E/E_h" || name == "hartree") return EnergyUnit::ratio_hartree;
    throw std::invalid_argument("parse_unit: unknown energy unit '" + name + "'");
}

}  // namespace oldqm
