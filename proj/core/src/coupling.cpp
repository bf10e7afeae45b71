#include "fluxatom/coupling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "factorization_check.hpp"

namespace fluxatom {

VectorAreaTriple VectorAreaTriple::make(HalfInt n, int l, HalfInt j, int Z, double a0) {
    if (l < 0) throw std::invalid_argument("vector areas: l must be >= 0");
    if (Z < 1) throw std::invalid_argument("vector areas: Z must be >= 1");
    const HalfInt s = QuantumNumbers::spin();
    const HalfInt lh(l);
    if (j != lh + s && j != lh - s)
        throw std::invalid_argument("vector areas: j must be l +- 1/2");
    if (j < s) throw std::invalid_argument("vector areas: j must be >= 1/2");

    const double nd = n.value();
    const double common = std::numbers::pi * nd * nd * nd * a0 * a0 / (static_cast<double>(Z) * Z);
    const auto area = [&](HalfInt n_phi) {
        return VectorArea{common * std::sqrt(n_phi.times_plus_one()), n_phi};
    };
    return VectorAreaTriple{area(lh), area(s), area(j)};
}

double project_area(AreaComponent component, const VectorAreaTriple& triple) {
    const double aj = triple.total.magnitude;
    if (!(aj > 0.0)) throw std::domain_error("project_area: |A_j| = 0");
    const double aj2 = aj * aj;
    const double as2 = triple.spin.magnitude * triple.spin.magnitude;
    const double al2 = triple.orbital.magnitude * triple.orbital.magnitude;
    if (component == AreaComponent::orbital) return 0.5 * (aj2 - as2 + al2) / aj;
    return 0.5 * (aj2 + as2 - al2) / aj;
}

double lande_g(int l, HalfInt j) {
    const VectorAreaTriple triple = VectorAreaTriple::make(HalfInt(1), l, j, 1, 1.0);
    const double projected = 2.0 * project_area(AreaComponent::spin, triple) +
                             project_area(AreaComponent::orbital, triple);
    // Normalize by the classical area (pi here) and the field projection
    // factor sqrt(j(j+1)) of rule-e.
    const double route = projected / (std::numbers::pi * std::sqrt(j.times_plus_one()));

    const double closed = standard_lande(l, QuantumNumbers::spin(), j);
    detail::verify_factorization("lande_g", closed, route);
    return route;
}

EnergyShift zeeman_anomalous(const QuantumNumbers& qn, int Z, double B_tesla,
                             const PhysicalConstants& k) {
    qn.validate();
    if (!qn.l || !qn.j || !qn.m_j)
        throw std::invalid_argument("zeeman_anomalous: state needs l, j and m_j");

    const VectorAreaTriple triple = VectorAreaTriple::make(qn.n(), *qn.l, *qn.j, Z, k.a0);
    // Field projection along A_j (rule e with the classical area):
    // A_j.B/|A_j| = m_j B / sqrt(j(j+1)).
    const double field_projection =
        qn.m_j->value() * B_tesla / std::sqrt(qn.j->times_plus_one());

    const FluxValue fv =
        FluxValue::spin_split(project_area(AreaComponent::spin, triple) * field_projection,
                              FluxSource::uniform) +
        FluxValue::azimuthal(project_area(AreaComponent::orbital, triple) * field_projection,
                             FluxSource::uniform);
    EnergyShift shift = energy_shift_linear(qn, Z, fv, k);

    const double closed = k.mu_B * lande_g(*qn.l, *qn.j) * qn.m_j->value() * B_tesla;
    detail::verify_factorization("zeeman_anomalous", closed, shift.value);
    return shift;
}

EnergyShift paschen_back(const QuantumNumbers& qn, int Z, double B_tesla,
                         const PhysicalConstants& k) {
    qn.validate();
    if (!qn.m_l || !qn.m_s)
        throw std::invalid_argument("paschen_back: state needs m_l and m_s");
    if (Z < 1) throw std::invalid_argument("paschen_back: Z must be >= 1");

    // Decoupled time-averaged areas: n_psi^x = m_x picks the orientation of
    // each contribution separately, spin counted twice by the spin rule.
    const double nd = qn.n().value();
    const double classical = std::numbers::pi * nd * nd * nd * k.a0 * k.a0 /
                             (static_cast<double>(Z) * Z);
    const FluxValue fv =
        FluxValue::spin_split(qn.m_s->value() * classical * B_tesla, FluxSource::uniform) +
        FluxValue::azimuthal(qn.m_l->value() * classical * B_tesla, FluxSource::uniform);
    EnergyShift shift = energy_shift_linear(qn, Z, fv, k);

    const double closed = k.mu_B * (2.0 * qn.m_s->value() + qn.m_l->value()) * B_tesla;
    detail::verify_factorization("paschen_back", closed, shift.value);
    return shift;
}

namespace {

Branch branch_of(const QuantumNumbers& qn) {
    return *qn.j == HalfInt(*qn.l) + QuantumNumbers::spin() ? Branch::plus : Branch::minus;
}

} // namespace

HyperfineResult hyperfine_full(const QuantumNumbers& qn, const NuclearSpecies& species,
                               HalfInt F, Branch branch, const PhysicalConstants& k) {
    qn.validate();
    if (!qn.l || !qn.j)
        throw std::invalid_argument("hyperfine_full: state needs the (l, j) decomposition");
    if (species.I <= HalfInt(0))
        throw std::domain_error("hyperfine_full: species '" + species.name +
                                "' has I = 0, no hyperfine structure");
    if (branch != branch_of(qn))
        throw std::invalid_argument(
            "hyperfine_full: branch must match j = l +- 1/2 (for l = 0 only the plus "
            "branch exists)");
    {
        QuantumNumbers checked = qn;
        checked.I = species.I;
        checked.F = F;
        checked.validate(); // F in {|I-j|, ..., I+j}
    }

    const int l = *qn.l;
    const double two_l_pm_one = branch == Branch::plus ? 2.0 * l + 1.0 : 2.0 * l - 1.0;
    const double n = qn.n().value();
    const double jj = qn.j->times_plus_one();
    const double I = species.I.value();
    const double mu_e = 0.5 * k.g_s * k.mu_B;
    const double Zd = species.Z;

    const double A = 2.0 * k.alpha * k.alpha * Zd * Zd * Zd * k.rydberg_energy() * mu_e *
                     species.mu_nuc / (k.mu_B * k.mu_B * n * n * n * jj * two_l_pm_one * I);

    const double bracket =
        F.times_plus_one() - species.I.times_plus_one() - qn.j->times_plus_one();

    // The dipole-flux intermediate behind the shift:
    // Phi = alpha^2 Z (h/2e) [bracket] mu_e mu_nuc / (mu_B^2 j(j+1) (2l+-1) I).
    const double flux_Wb = k.alpha * k.alpha * Zd * k.h / (2.0 * k.e) * bracket * mu_e *
                           species.mu_nuc / (k.mu_B * k.mu_B * jj * two_l_pm_one * I);
    const FluxValue fv = FluxValue::azimuthal(flux_Wb, FluxSource::dipole_focus);

    QuantumNumbers state = qn;
    state.I = species.I;
    state.F = F;
    EnergyShift shift = energy_shift_linear(state, species.Z, fv, k);
    detail::verify_factorization("hyperfine_full", 0.5 * A * bracket, shift.value);

    return HyperfineResult{A, shift, fv};
}

HyperfineResult hyperfine_full(const QuantumNumbers& qn, const NuclearSpecies& species,
                               HalfInt F, const PhysicalConstants& k) {
    qn.validate();
    if (!qn.l || !qn.j)
        throw std::invalid_argument("hyperfine_full: state needs the (l, j) decomposition");
    return hyperfine_full(qn, species, F, branch_of(qn), k);
}

} // namespace fluxatom
