#include "fluxatom/effects_simple.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "factorization_check.hpp"
#include "fluxatom/flux.hpp"
#include "fluxatom/orbits.hpp"

namespace fluxatom {

EnergyShift zeeman_normal(const QuantumNumbers& qn, int Z, double B_tesla, double alpha_rad,
                          const PhysicalConstants& k) {
    const OrbitGeometry geom = orbit_geometry(qn, Z, k);
    const FluxValue fv = uniform_field_flux(geom, B_tesla, alpha_rad);
    EnergyShift shift = energy_shift_linear(qn, Z, fv, k);

    const double n_psi = qn.n_phi.value() * std::cos(alpha_rad);
    detail::verify_factorization("zeeman_normal", k.mu_B * n_psi * B_tesla, shift.value);
    return shift;
}

EnergyShift hyperfine_simplified(const QuantumNumbers& qn, const NuclearSpecies& species,
                                 double cos_beta, const PhysicalConstants& k) {
    if (!(std::abs(cos_beta) <= 1.0))
        throw std::invalid_argument("hyperfine_simplified: |cos beta| must be <= 1");
    const OrbitGeometry geom = orbit_geometry(qn, species.Z, k);
    const FluxValue fv = dipole_focus_flux(geom, species.mu_nuc * cos_beta, k);
    EnergyShift shift = energy_shift_linear(qn, species.Z, fv, k);

    const double n = qn.n().value();
    const double n_phi = qn.n_phi.value();
    const double closed = -k.alpha * k.alpha * std::pow(static_cast<double>(species.Z), 3) *
                          k.rydberg_energy() * (species.mu_nuc / k.mu_B) * cos_beta /
                          (n * n * n * n_phi * n_phi);
    detail::verify_factorization("hyperfine_simplified", closed, shift.value);
    return shift;
}

double hyperfine_interval(const EnergyShift& shift) { return 2.0 * std::abs(shift.value); }

EnergyShift spin_orbit_simplified(const QuantumNumbers& qn, int Z, double cos_beta,
                                  const PhysicalConstants& k) {
    if (!(std::abs(cos_beta) <= 1.0))
        throw std::invalid_argument("spin_orbit_simplified: |cos beta| must be <= 1");
    const OrbitGeometry geom = orbit_geometry(qn, Z, k);
    // Electron moment anti-parallel to the angular-momentum axis: component
    // along the orbit normal is -g_s mu_B cos(beta).
    const FluxValue fv = dipole_focus_flux(geom, -k.g_s * k.mu_B * cos_beta, k);
    EnergyShift shift = energy_shift_linear(qn, Z, fv, k);

    const double n = qn.n().value();
    const double n_phi = qn.n_phi.value();
    const double closed = std::pow(static_cast<double>(Z), 3) * k.mu0 /
                          (4.0 * std::numbers::pi) * k.g_s * k.mu_B * k.mu_B * 2.0 * cos_beta /
                          (n * n * n * std::pow(k.a0, 3) * n_phi * n_phi);
    detail::verify_factorization("spin_orbit_simplified", closed, shift.value);
    return shift;
}

} // namespace fluxatom
