#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fluxatom/constants.hpp"
#include "fluxatom/quantum_numbers.hpp"

namespace fluxatom {

/// A nucleus: charge number, mass number, spin and g-factor. The magnetic
/// moment mu_nuc = g_I mu_K I is derived at load time and stored; g_I (and
/// hence mu_nuc) may be negative.
struct NuclearSpecies {
    std::string name;
    int Z = 0;
    int A_mass = 0;
    HalfInt I;
    double g_I = 0.0;
    double mu_nuc = 0.0; // J/T

    static NuclearSpecies make(std::string name, int Z, int A_mass, HalfInt I, double g_I,
                               const PhysicalConstants& k);
};

struct ExperimentalValue {
    std::string observable;
    double value = 0.0;
    std::string unit;
    std::string source;
};

/// Textbook Lande factor g_j = 1 + [j(j+1)+s(s+1)-l(l+1)] / (2 j(j+1)).
/// Oracle for the vector-area route in the coupling module.
/// Throws std::invalid_argument unless |l-s| <= j <= l+s in integer steps.
double standard_lande(int l, HalfInt s, HalfInt j);

/// Standard magnetic-dipole hyperfine constant with the (2l+1) denominator:
///   A = 2 alpha^2 Z^3 R_inf h c mu_e mu_nuc / (mu_B^2 n^3 j(j+1) (2l+1) I),
/// mu_e = (g_s/2) mu_B. Reduced-mass, relativistic and off-diagonal
/// corrections are not included. Throws std::domain_error when I = 0.
double standard_hyperfine_constant(const QuantumNumbers& qn, const NuclearSpecies& species,
                                   const PhysicalConstants& k);

/// Standard hydrogenic first-order spin-orbit shift,
///   dW = (mu0/4pi) g_s mu_B^2 Z^4 [j(j+1)-l(l+1)-s(s+1)]
///        / (2 a0^3 n^3 l (l+1/2) (l+1)),
/// i.e. the Coulomb coupling (one power of Z) times
/// <1/r^3> = Z^3/(a0^3 n^3 l(l+1/2)(l+1)). Throws std::domain_error at l = 0.
double standard_spin_orbit(const QuantumNumbers& qn, int Z, const PhysicalConstants& k);

/// Nuclear species registry. Built-in defaults cover H-1, D-2 and He-3; a
/// species file (CSV: name,Z,A_mass,I,g_I with '#' comments) extends or
/// replaces them. Immutable after load.
class SpeciesRegistry {
  public:
    static SpeciesRegistry builtin(const PhysicalConstants& k);
    /// Builtin defaults plus the file contents. Throws std::runtime_error
    /// with a line number on parse errors, duplicates or missing fields.
    static SpeciesRegistry load(const std::string& path, const PhysicalConstants& k);

    const NuclearSpecies& lookup(std::string_view name) const;
    std::vector<std::string> names() const;

  private:
    std::map<std::string, NuclearSpecies, std::less<>> species_;
};

/// Experimental reference values, keyed strings like
/// "H_1s_hfs_interval_MHz". File format: key,value,unit,source.
class ExperimentalRegistry {
  public:
    static ExperimentalRegistry builtin();
    static ExperimentalRegistry load(const std::string& path);

    const ExperimentalValue& lookup(std::string_view key) const;
    bool contains(std::string_view key) const;
    std::vector<std::string> keys() const;

  private:
    std::map<std::string, ExperimentalValue, std::less<>> values_;
};

} // namespace fluxatom
