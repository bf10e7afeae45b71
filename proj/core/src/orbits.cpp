#include "fluxatom/orbits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fluxatom/energy.hpp"
#include "fluxatom/quadrature.hpp"

namespace fluxatom {

OrbitGeometry OrbitGeometry::from_semi_axes(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("orbit geometry: semi-axes must be positive");
    if (b > a)
        throw std::domain_error("orbit geometry: semi-minor axis exceeds semi-major axis");
    OrbitGeometry g;
    g.a = a;
    g.b = b;
    g.p = b * b / a;
    g.eps = std::sqrt(std::max(0.0, 1.0 - (b / a) * (b / a)));
    g.area = std::numbers::pi * a * b;
    return g;
}

double OrbitGeometry::radius(double phi_rad) const {
    return p / (1.0 - eps * std::cos(phi_rad));
}

namespace {

void require_charge_number(int Z) {
    if (Z < 1) throw std::invalid_argument("orbit geometry: Z must be >= 1");
}

} // namespace

OrbitGeometry orbit_geometry(const QuantumNumbers& qn, int Z, const PhysicalConstants& k) {
    require_charge_number(Z);
    qn.validate();
    if (qn.n_phi > qn.n())
        throw std::domain_error("orbit geometry: n_phi > n is unphysical (b > a)");
    if (qn.n_phi <= HalfInt(0))
        throw std::domain_error("orbit geometry: n_phi must be positive (degenerate ellipse)");
    const double n = qn.n().value();
    const double n_phi = qn.n_phi.value();
    const double a = n * n * k.a0 / Z;
    const double b = n * n_phi * k.a0 / Z;
    return OrbitGeometry::from_semi_axes(a, b);
}

OrbitGeometry orbit_geometry_with_flux(const QuantumNumbers& qn, int Z,
                                       double flux_total_Wb, double flux_phi_Wb,
                                       const PhysicalConstants& k) {
    require_charge_number(Z);
    qn.validate();
    const double n_eff = qn.n().value() - k.e * flux_total_Wb / k.h;
    const double n_phi_eff = qn.n_phi.value() - k.e * flux_phi_Wb / k.h;
    if (!(n_eff > 0.0))
        throw std::domain_error("orbit geometry: flux perturbation degenerates the orbit (n - e Phi/h <= 0)");
    if (!(n_phi_eff > 0.0))
        throw std::domain_error("orbit geometry: flux perturbation degenerates the orbit (b <= 0)");
    if (n_phi_eff > n_eff)
        throw std::domain_error("orbit geometry: flux perturbation makes b > a");
    const double a = n_eff * n_eff * k.a0 / Z;
    const double b = n_eff * n_phi_eff * k.a0 / Z;
    return OrbitGeometry::from_semi_axes(a, b);
}

double vector_area_magnitude(const QuantumNumbers& qn, int Z, const PhysicalConstants& k) {
    require_charge_number(Z);
    qn.validate();
    const double n = qn.n().value();
    return std::numbers::pi * n * n * n * std::sqrt(qn.n_phi.times_plus_one()) *
           k.a0 * k.a0 / (static_cast<double>(Z) * Z);
}

double action_integral(const QuantumNumbers& qn, int Z, const PhysicalConstants& k,
                       double quadrature_tol) {
    const OrbitGeometry geom = orbit_geometry(qn, Z, k);
    const double W = energy_exact(qn, Z, 0.0, k); // Bohr level, < 0
    const double coulomb = Z * k.e * k.e / (4.0 * std::numbers::pi * k.eps0);

    // r(E) = a (1 - eps cos E), |ds/dE| = sqrt(a^2 sin^2 E + b^2 cos^2 E),
    // speed from vis-viva at energy W.
    const auto momentum_ds = [&](double ecc_anomaly) {
        const double ce = std::cos(ecc_anomaly);
        const double se = std::sin(ecc_anomaly);
        const double r = geom.a * (1.0 - geom.eps * ce);
        const double kinetic = W + coulomb / r;
        const double speed = std::sqrt(2.0 * kinetic / k.m_e);
        const double ds = std::sqrt(geom.a * geom.a * se * se + geom.b * geom.b * ce * ce);
        return k.m_e * speed * ds;
    };

    const QuadratureResult q =
        integrate_adaptive(momentum_ds, 0.0, 2.0 * std::numbers::pi, quadrature_tol);
    return q.value;
}

} // namespace fluxatom
