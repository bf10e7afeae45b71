#pragma once

#include "fluxatom/energy.hpp"
#include "fluxatom/reference.hpp"

namespace fluxatom {

/// Normal (semi-classical) Zeeman shift of a weak homogeneous field:
///   dW = mu_B n_psi B with n_psi = n_phi cos(alpha).
/// Computed by chaining uniform_field_flux and energy_shift_linear; the
/// closed form is asserted against the chained value (std::logic_error on
/// disagreement, which would mean the factorization identity broke).
/// Valid only while the field leaves the orbit geometry unchanged.
EnergyShift zeeman_normal(const QuantumNumbers& qn, int Z, double B_tesla, double alpha_rad,
                          const PhysicalConstants& k);

/// Simplified hyperfine shift: the nuclear moment sits at the focus, tilted
/// by beta against the orbit normal,
///   dW = -alpha^2 Z^3 R_inf h c (mu_nuc/mu_B) cos(beta) / (n^3 n_phi^2).
/// The minus sign is the interior-flux convention (field lines of the
/// dipole close outside the orbit). The observable hyperfine interval is
/// twice the magnitude: the two opposite moment orientations.
EnergyShift hyperfine_simplified(const QuantumNumbers& qn, const NuclearSpecies& species,
                                 double cos_beta, const PhysicalConstants& k);

/// Interval between the two opposite dipole orientations, 2 |shift|.
double hyperfine_interval(const EnergyShift& shift);

/// Simplified spin-orbit shift: the electron's own moment g_s mu_B at the
/// focus. The electron moment points against its angular-momentum axis, so
/// its component along the orbit normal is -g_s mu_B cos(beta) and the
/// shift comes out positive:
///   dW = Z^3 (mu0/4pi) g_s mu_B^2 2 cos(beta) / (n^3 a0^3 n_phi^2).
EnergyShift spin_orbit_simplified(const QuantumNumbers& qn, int Z, double cos_beta,
                                  const PhysicalConstants& k);

/// cos(beta) of the documented ground-state preset, 2/3.
constexpr double ground_state_cos_beta() { return 2.0 / 3.0; }

} // namespace fluxatom
