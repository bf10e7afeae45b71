#pragma once

#include <string>

#include "fluxatom/constants.hpp"
#include "fluxatom/flux.hpp"
#include "fluxatom/quantum_numbers.hpp"

namespace fluxatom {

enum class ShiftOrder { exact, first_order };

/// A first-order (or exact) energy perturbation with the flux that caused it.
struct EnergyShift {
    double value; // J, signed
    ShiftOrder order;
    QuantumNumbers state;
    FluxValue flux;
    std::string warning; // non-empty when the linear regime is strained

    double in(EnergyUnit unit, const PhysicalConstants& k) const {
        return convert_energy(value, unit, k);
    }
};

/// Exact level energy with the flux folded into the action:
///   W = -m_e Z^2 e^4 / (8 eps0^2 (n h - e Phi)^2).
/// At Phi = 0 this is the Bohr level -Z^2 R_inf h c / n^2. The flux argument
/// is oriented along the orbital angular momentum, so positive flux deepens
/// the binding. Throws std::domain_error as e Phi approaches n h.
double energy_exact(const QuantumNumbers& qn, int Z, double flux_Wb,
                    const PhysicalConstants& k);

/// Bohr level of the same n, the reference point for all shifts.
double bohr_energy(const QuantumNumbers& qn, int Z, const PhysicalConstants& k);

/// First-order level shift for a small flux:
///   dW = 2 R_inf c e Z^2 Phi / n^3  (= m_e Z^2 e^5 Phi / (4 eps0^2 n^3 h^3)).
///
/// Sign convention: the shift counts flux along the orbital current normal
/// (the orientation in which the spectroscopic Zeeman, Paschen-Back and
/// hyperfine results carry their usual signs). Relative to energy_exact,
/// whose flux argument is counted along the angular momentum, the
/// orientations are opposite:
///   energy_exact(Phi) = bohr_energy() - energy_shift_linear(Phi).value + O(Phi^2).
///
/// Never throws for finite input; sets a warning when |e Phi / n h| > 0.01.
EnergyShift energy_shift_linear(const QuantumNumbers& qn, int Z, double flux_Wb,
                                const PhysicalConstants& k);

/// Same, keeping the provenance of a structured flux value.
EnergyShift energy_shift_linear(const QuantumNumbers& qn, int Z, const FluxValue& flux,
                                const PhysicalConstants& k);

} // namespace fluxatom
