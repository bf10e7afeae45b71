#pragma once

#include <optional>
#include <string>

#include "fluxatom/constants.hpp"
#include "fluxatom/quantum_numbers.hpp"
#include "fluxatom/reference.hpp"
#include "fluxatom/report.hpp"

namespace fluxatom {

/// Shared context of every command: loaded constants and the two registries.
struct CommandContext {
    PhysicalConstants constants;
    SpeciesRegistry species;
    ExperimentalRegistry experimental;

    static CommandContext standard();
};

/// Gross Bohr/Sommerfeld levels W(n), n = 1..n_max.
/// Throws std::invalid_argument for n_max < 1 or Z < 1.
Report cmd_levels(int Z, int n_max, const CommandContext& ctx);

enum class FieldRegime { weak, strong };

/// Zeeman splitting of a state like "2p3/2": one row per m_j in the weak
/// (coupled) regime, one per (m_l, m_s) in the strong (Paschen-Back) regime.
/// The intermediate regime is not modeled and there is no interpolation.
Report cmd_zeeman(const std::string& state_spec, double B_tesla, FieldRegime regime, int Z,
                  const CommandContext& ctx);

enum class HyperfineModel { simple, full, standard };

/// Hyperfine A-constant and F-level diagram for a state and species.
/// model=simple uses the focus-dipole shift with the given cos(beta);
/// model=full/standard use the coupled A-constant with the (2l +- 1) /
/// (2l + 1) denominators respectively. When the experimental registry has
/// an interval for the state, the ratio to it is reported.
Report cmd_hyperfine(const std::string& state_spec, const std::string& species_name,
                     HyperfineModel model, double cos_beta, const CommandContext& ctx);

/// Model vs standard spin-orbit shift with the deviation factor
/// standard/model (Z n_phi^2 / (12 cos beta) for 2p3/2). n_phi defaults to
/// l + 1/2.
Report cmd_spin_orbit(const std::string& state_spec, double cos_beta,
                      std::optional<HalfInt> n_phi, int Z, const CommandContext& ctx);

enum class VerifySuite { action, dipole_flux, linearization, all };

VerifySuite parse_verify_suite(const std::string& name);

/// Oracle verification runs. Every diagnostic row carries its residual and
/// tolerance; report.all_pass() is the machine-readable outcome (the CLI
/// maps a failure to exit code 2). tol_override replaces the per-suite
/// default tolerance on every row.
Report cmd_verify(VerifySuite suite, std::optional<double> tol_override,
                  const CommandContext& ctx);

} // namespace fluxatom
