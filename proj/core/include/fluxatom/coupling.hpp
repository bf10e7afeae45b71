#pragma once

#include "fluxatom/energy.hpp"
#include "fluxatom/reference.hpp"

namespace fluxatom {

/// One oriented orbit area in the coupling rules: its quantum magnitude
/// pi n^3 sqrt(n_phi(n_phi+1)) a0^2/Z^2 together with the governing n_phi.
struct VectorArea {
    double magnitude; // m^2
    HalfInt n_phi;
};

/// The orbital/spin/total area triple A_l, A_s, A_j of a coupled state.
/// n_phi^s = 1/2 is fixed and n_phi^j = n_phi^l +- 1/2.
struct VectorAreaTriple {
    VectorArea orbital; // A_l, n_phi^l = l
    VectorArea spin;    // A_s, n_phi^s = 1/2
    VectorArea total;   // A_j, n_phi^j = j

    /// a0 may be 1 for scale-free uses; the projections are homogeneous in
    /// the common factor pi n^3 a0^2 / Z^2.
    static VectorAreaTriple make(HalfInt n, int l, HalfInt j, int Z, double a0);
};

enum class AreaComponent { orbital, spin };

/// Projection of A_l (or A_s) onto the direction of A_j assuming areas add
/// linearly, A_l = A_j - A_s:
///   A_x . A_j/|A_j| = (|A_j|^2 -+ |A_s|^2 +- |A_l|^2) / (2 |A_j|).
/// The two projections telescope: orbital + spin projection = |A_j|.
/// Throws std::domain_error when |A_j| = 0.
double project_area(AreaComponent component, const VectorAreaTriple& triple);

/// Lande factor via the vector-area route: the effective flux area
/// (2 A_s + A_l) . A_j/|A_j| (the spin share doubled by the spin rule)
/// normalized by the classical area and the field projection. The closed
/// form 1 + [j(j+1)+s(s+1)-l(l+1)]/(2j(j+1)) is asserted against the route.
double lande_g(int l, HalfInt j);

/// Weak-field (spin-orbit coupled) Zeeman shift, dW = mu_B g_j m_j B.
/// Built from the rule projections and energy_shift_linear; requires the
/// (l, j, m_j) decomposition on qn.
EnergyShift zeeman_anomalous(const QuantumNumbers& qn, int Z, double B_tesla,
                             const PhysicalConstants& k);

/// Strong-field (decoupled) shift, dW = mu_B (2 m_s + m_l) B, from the
/// factor-two spin flux Phi = (2 n_psi^s + n_psi^l) pi n^3 a0^2 B / Z^2.
/// Requires m_l and m_s on qn. The intermediate regime between this and
/// zeeman_anomalous is not modeled; callers pick one closed-form regime.
EnergyShift paschen_back(const QuantumNumbers& qn, int Z, double B_tesla,
                         const PhysicalConstants& k);

/// Which sign of (2l +- 1) the hyperfine formula uses; tied to j = l +- 1/2.
enum class Branch { plus, minus };

struct HyperfineResult {
    double A_constant;  // J
    EnergyShift shift;  // per-F level shift (A/2)[F(F+1)-I(I+1)-j(j+1)]
    FluxValue flux;     // the dipole flux intermediate behind the shift
};

/// Full hyperfine shift of level F:
///   dW = (A/2) [F(F+1) - I(I+1) - j(j+1)],
///   A  = 2 alpha^2 Z^3 R_inf h c mu_e mu_nuc / (mu_B^2 n^3 j(j+1) (2l +- 1) I),
/// with mu_e = (g_s/2) mu_B. The branch argument must match j = l +- 1/2
/// (for l = 0 only plus is admissible); the overload without it derives the
/// branch from qn. Throws std::domain_error when I = 0 and
/// std::invalid_argument for an invalid F or branch.
HyperfineResult hyperfine_full(const QuantumNumbers& qn, const NuclearSpecies& species,
                               HalfInt F, Branch branch, const PhysicalConstants& k);
HyperfineResult hyperfine_full(const QuantumNumbers& qn, const NuclearSpecies& species,
                               HalfInt F, const PhysicalConstants& k);

} // namespace fluxatom
