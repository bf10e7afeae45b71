#pragma once

#include "fluxatom/constants.hpp"
#include "fluxatom/orbits.hpp"

namespace fluxatom {

enum class FluxSource { uniform, dipole_focus, composite };

/// Signed magnetic flux through an orbit, split by the action integral it
/// perturbs: total = phi_component + r_component always holds.
///
/// Orientation convention (applied globally): flux is positive when the
/// field component is parallel to the orbital angular momentum. A dipole at
/// the focus therefore produces a negative interior flux for a moment tilted
/// towards the orbit normal (the interior and exterior fluxes of a dipole
/// sum to zero since its field lines close).
struct FluxValue {
    double total;         // Wb
    double phi_component; // Wb, share entering the azimuthal action
    double r_component;   // Wb, share entering the radial action
    FluxSource source;

    /// Flux that enters only the azimuthal action (external fields and
    /// focus dipoles accelerate the electron along the orbit).
    static FluxValue azimuthal(double flux_Wb, FluxSource source);

    /// Spin-rule flux: equal azimuthal and radial shares, so the total
    /// responds twice as strongly as an orbital contribution. This is what
    /// makes g = 2 come out of the coupling rules.
    static FluxValue spin_split(double each_Wb, FluxSource source);

    friend FluxValue operator+(const FluxValue& a, const FluxValue& b);
};

/// Flux of a homogeneous field B through the orbit: pi a b B cos(alpha),
/// alpha the angle between orbit normal and field. Uses the classical area.
FluxValue uniform_field_flux(const OrbitGeometry& geom, double B_tesla, double alpha_rad);

/// Interior flux of a point dipole sitting at the focus, closed form:
/// Phi_in = -mu0 mu_perp / (2 p) with mu_perp the moment component along the
/// orbit normal. Throws std::domain_error when p = 0.
FluxValue dipole_focus_flux(const OrbitGeometry& geom, double mu_perp_J_per_T,
                            const PhysicalConstants& k);

/// Exterior counterpart, +mu0 mu_perp / (2 p).
double dipole_focus_flux_exterior(const OrbitGeometry& geom, double mu_perp_J_per_T,
                                  const PhysicalConstants& k);

/// Independent oracle for dipole_focus_flux: evaluates the exterior-flux
/// integral of the in-plane model field B = (mu0/4pi) mu_perp / r^3 outside
/// the ellipse. The improper radial integral is reduced analytically per
/// angle (int_r^inf dr/r^2 = 1/r), the angular integral of 1/r(phi) is done
/// by adaptive quadrature. Returns the interior flux -Phi_out.
double dipole_flux_oracle(const OrbitGeometry& geom, double mu_perp_J_per_T,
                          const PhysicalConstants& k, double tol = 1e-10);

/// Secondary slow check: 2D cubature of the same model field over a
/// truncated annulus r(phi) <= r <= R, with R chosen so the neglected tail
/// is below tol/10 of the result. Returns the interior flux.
double dipole_flux_cubature(const OrbitGeometry& geom, double mu_perp_J_per_T,
                            const PhysicalConstants& k, double tol = 1e-5);

/// Dipole of magnitude mu at angle beta against the orbit normal:
/// dipole_focus_flux with mu_perp = mu cos(beta).
FluxValue tilted_dipole_flux(const OrbitGeometry& geom, double mu_J_per_T,
                             double beta_rad, const PhysicalConstants& k);

} // namespace fluxatom
