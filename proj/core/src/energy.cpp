#include "fluxatom/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace fluxatom {

double energy_exact(const QuantumNumbers& qn, int Z, double flux_Wb,
                    const PhysicalConstants& k) {
    if (Z < 1) throw std::invalid_argument("energy_exact: Z must be >= 1");
    if (!std::isfinite(flux_Wb)) throw std::invalid_argument("energy_exact: non-finite flux");
    qn.validate();
    const double action = qn.n().value() * k.h - k.e * flux_Wb;
    if (!(action > 1e-6 * qn.n().value() * k.h))
        throw std::domain_error("energy_exact: e Phi too close to n h (denominator underflow)");
    const double Zd = Z;
    return -k.m_e * Zd * Zd * std::pow(k.e, 4) / (8.0 * k.eps0 * k.eps0 * action * action);
}

double bohr_energy(const QuantumNumbers& qn, int Z, const PhysicalConstants& k) {
    return energy_exact(qn, Z, 0.0, k);
}

EnergyShift energy_shift_linear(const QuantumNumbers& qn, int Z, const FluxValue& flux,
                                const PhysicalConstants& k) {
    if (Z < 1) throw std::invalid_argument("energy_shift_linear: Z must be >= 1");
    if (!std::isfinite(flux.total))
        throw std::invalid_argument("energy_shift_linear: non-finite flux");
    qn.validate();
    const double n = qn.n().value();
    const double Zd = Z;
    EnergyShift shift;
    shift.value = 2.0 * k.R_inf * k.c * k.e * Zd * Zd * flux.total / (n * n * n);
    shift.order = ShiftOrder::first_order;
    shift.state = qn;
    shift.flux = flux;
    if (std::abs(k.e * flux.total) > 0.01 * n * k.h)
        shift.warning = "flux is beyond the linear regime (|e Phi / n h| > 0.01)";
    return shift;
}

EnergyShift energy_shift_linear(const QuantumNumbers& qn, int Z, double flux_Wb,
                                const PhysicalConstants& k) {
    return energy_shift_linear(qn, Z, FluxValue::azimuthal(flux_Wb, FluxSource::composite), k);
}

} // namespace fluxatom
