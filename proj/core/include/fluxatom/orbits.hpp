#pragma once

#include "fluxatom/constants.hpp"
#include "fluxatom/quantum_numbers.hpp"

namespace fluxatom {

/// Elliptic orbit with the nucleus at a focus.
struct OrbitGeometry {
    double a;    // semi-major axis [m]
    double b;    // semi-minor axis [m]
    double p;    // focal parameter (semi-latus rectum) b^2/a [m]
    double eps;  // eccentricity, eps^2 = 1 - b^2/a^2
    double area; // pi a b [m^2]

    /// Builds the full record from the semi-axes and checks 0 < b <= a.
    static OrbitGeometry from_semi_axes(double a, double b);

    /// Orbit radius at true anomaly phi: r = p / (1 - eps cos phi).
    double radius(double phi_rad) const;
};

/// Unperturbed Sommerfeld geometry: a = n^2 a0/Z, b = n n_phi a0/Z.
/// Throws std::domain_error when n_phi > n (b > a) or n_phi <= 0.
OrbitGeometry orbit_geometry(const QuantumNumbers& qn, int Z, const PhysicalConstants& k);

/// Geometry with an initial magnetic flux folded into the action integrals:
/// n -> n - e Phi/h and n_phi -> n_phi - e Phi_phi/h in the formulas above.
/// Throws std::domain_error outside the perturbative regime (b <= 0, b > a,
/// or |e Phi/h| >= n).
OrbitGeometry orbit_geometry_with_flux(const QuantumNumbers& qn, int Z,
                                       double flux_total_Wb, double flux_phi_Wb,
                                       const PhysicalConstants& k);

/// Quantum magnitude of the orbit's vector area,
/// |A| = pi n^3 sqrt(n_phi (n_phi + 1)) a0^2 / Z^2.
/// This replaces n_phi of the classical area pi a b = pi n^3 n_phi a0^2/Z^2
/// by sqrt(n_phi(n_phi+1)); both notions are used downstream and every
/// consumer documents which one it takes.
double vector_area_magnitude(const QuantumNumbers& qn, int Z, const PhysicalConstants& k);

/// Numerically evaluates the loop integral of the kinetic momentum along one
/// Kepler orbit of energy W(n) and returns it in J s. For a quantized orbit
/// the result is n h; the residual against that is the check that the
/// enclosed magnetic flux comes in units of h/e.
///
/// The orbit is parametrized by eccentric anomaly (no perihelion
/// singularity); the speed comes from vis-viva at the Bohr level of n.
/// Throws QuadratureError if the quadrature cannot reach quadrature_tol.
double action_integral(const QuantumNumbers& qn, int Z, const PhysicalConstants& k,
                       double quadrature_tol = 1e-12);

} // namespace fluxatom
