#pragma once

#include <map>
#include <string>
#include <string_view>

namespace fluxatom {

/// Physical constants in SI units. All model formulas consume this struct;
/// unit conversion happens only at output boundaries.
///
/// Defaults are CODATA-2018 (see the provenance table in constants.cpp).
/// After load the derived members (a0, R_inf, mu_B, mu_K, alpha,
/// flux_quantum, hbar) are guaranteed consistent with the base members to
/// 1e-9 relative; load_constants() enforces this.
struct PhysicalConstants {
    double h;            // Planck constant [J s]
    double hbar;         // reduced Planck constant [J s]
    double e;            // elementary charge [C]
    double m_e;          // electron mass [kg]
    double m_p;          // proton mass [kg]
    double eps0;         // vacuum permittivity [F/m]
    double mu0;          // vacuum permeability [H/m]
    double c;            // speed of light [m/s]
    double a0;           // Bohr radius [m]
    double R_inf;        // Rydberg constant [1/m]
    double mu_B;         // Bohr magneton [J/T]
    double mu_K;         // nuclear magneton [J/T]
    double alpha;        // fine-structure constant
    double g_s;          // electron g-factor (model default: exactly 2)
    double flux_quantum; // magnetic flux quantum h/e [Wb]

    /// R_inf * h * c, the Rydberg energy [J] (13.6057 eV).
    double rydberg_energy() const { return R_inf * h * c; }
};

/// Raw key=value overrides for load_constants. Keys match field names of
/// PhysicalConstants ("g_s" additionally accepts the word "codata").
using ConstantsConfig = std::map<std::string, std::string, std::less<>>;

/// Parse a plain-text config file: one `key = value` per line, '#' comments.
/// Throws std::runtime_error with the offending line number on bad syntax.
ConstantsConfig read_constants_file(const std::string& path);

/// CODATA-2018 defaults.
PhysicalConstants load_constants();

/// Defaults with overrides applied. Derived constants are recomputed from
/// overridden bases; an override that leaves the set internally inconsistent
/// (base and derived disagreeing beyond 1e-9 relative) is rejected.
/// Throws std::invalid_argument on unknown keys, non-positive or
/// non-numeric values, and inconsistent overrides.
PhysicalConstants load_constants(const ConstantsConfig& config);

enum class EnergyUnit { joule, electron_volt, megahertz, inverse_cm };

/// Parse "J", "eV", "MHz" or "1/cm". Throws std::invalid_argument otherwise.
EnergyUnit parse_energy_unit(std::string_view name);

std::string_view energy_unit_name(EnergyUnit unit);

/// Convert an energy in joules to the target unit (E = h nu for MHz).
/// Throws std::invalid_argument on non-finite input.
double convert_energy(double joules, EnergyUnit target, const PhysicalConstants& k);

/// Inverse of convert_energy.
double energy_to_joules(double value, EnergyUnit source, const PhysicalConstants& k);

} // namespace fluxatom
