#include "fluxatom/flux.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fluxatom/quadrature.hpp"

namespace fluxatom {

FluxValue FluxValue::azimuthal(double flux_Wb, FluxSource source) {
    return FluxValue{flux_Wb, flux_Wb, 0.0, source};
}

FluxValue FluxValue::spin_split(double each_Wb, FluxSource source) {
    return FluxValue{2.0 * each_Wb, each_Wb, each_Wb, source};
}

FluxValue operator+(const FluxValue& a, const FluxValue& b) {
    return FluxValue{a.total + b.total, a.phi_component + b.phi_component,
                     a.r_component + b.r_component, FluxSource::composite};
}

FluxValue uniform_field_flux(const OrbitGeometry& geom, double B_tesla, double alpha_rad) {
    if (!std::isfinite(B_tesla))
        throw std::invalid_argument("uniform_field_flux: non-finite field");
    const double base = geom.area * B_tesla;
    return FluxValue::azimuthal(base * std::cos(alpha_rad), FluxSource::uniform);
}

FluxValue dipole_focus_flux(const OrbitGeometry& geom, double mu_perp_J_per_T,
                            const PhysicalConstants& k) {
    return FluxValue::azimuthal(-dipole_focus_flux_exterior(geom, mu_perp_J_per_T, k),
                                FluxSource::dipole_focus);
}

double dipole_focus_flux_exterior(const OrbitGeometry& geom, double mu_perp_J_per_T,
                                  const PhysicalConstants& k) {
    if (!(geom.p > 0.0))
        throw std::domain_error("dipole_focus_flux: focal parameter is zero");
    return 0.5 * k.mu0 * mu_perp_J_per_T / geom.p;
}

double dipole_flux_oracle(const OrbitGeometry& geom, double mu_perp_J_per_T,
                          const PhysicalConstants& k, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("dipole_flux_oracle: tol must be positive");
    if (mu_perp_J_per_T == 0.0) return 0.0;
    const auto inverse_radius = [&](double phi) { return 1.0 / geom.radius(phi); };
    const QuadratureResult q =
        integrate_adaptive(inverse_radius, 0.0, 2.0 * std::numbers::pi, tol);
    const double exterior = k.mu0 / (4.0 * std::numbers::pi) * mu_perp_J_per_T * q.value;
    return -exterior;
}

double dipole_flux_cubature(const OrbitGeometry& geom, double mu_perp_J_per_T,
                            const PhysicalConstants& k, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("dipole_flux_cubature: tol must be positive");
    if (mu_perp_J_per_T == 0.0) return 0.0;

    // Tail of the radial integral beyond R is 1/R per angle; relative to the
    // full result (~2 pi / p) that is p/R, so R = 10 p / tol keeps the
    // truncation below tol/10.
    const double r_max = 10.0 * geom.p / tol;

    const auto ring = [&](double phi) {
        const double r0 = geom.radius(phi);
        const auto radial = [](double r) { return 1.0 / (r * r); }; // B r dr with B ~ 1/r^3
        return integrate_adaptive(radial, r0, r_max, 0.1 * tol).value;
    };
    const QuadratureResult q = integrate_adaptive(ring, 0.0, 2.0 * std::numbers::pi, 0.1 * tol);
    const double exterior = k.mu0 / (4.0 * std::numbers::pi) * mu_perp_J_per_T * q.value;
    return -exterior;
}

FluxValue tilted_dipole_flux(const OrbitGeometry& geom, double mu_J_per_T,
                             double beta_rad, const PhysicalConstants& k) {
    return dipole_focus_flux(geom, mu_J_per_T * std::cos(beta_rad), k);
}

} // namespace fluxatom
