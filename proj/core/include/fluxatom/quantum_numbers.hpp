#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace fluxatom {

/// Exact half-integer arithmetic. Quantum numbers in this model live on the
/// half-integer lattice (the radial and azimuthal numbers start from 1/2
/// with steps of one), so they are stored as twice their value in an int and
/// never as floating point.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return twice_ / 2.0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    /// x(x+1), exact in double for the sizes that occur here.
    constexpr double times_plus_one() const { return value() * (value() + 1.0); }

    /// "3/2", "-1/2", "2", ...
    std::string str() const;

  private:
    int twice_ = 0;
};

/// Parse "2", "3/2", "-1/2", "0.5", "1.5". Throws std::invalid_argument on
/// anything off the half-integer lattice.
HalfInt parse_half_int(std::string_view text);

/// The (n_r, n_phi, n_psi) triple of the Sommerfeld model plus the optional
/// spin/orbital decomposition used by the coupling rules.
///
/// Two base conventions are representable and both are accepted:
///   - half-integer: n_r, n_phi in {1/2, 3/2, ...} (the model's ground state
///     is n_r = n_phi = 1/2),
///   - integer: n_phi in {1, ..., n}, n_r = n - n_phi (n_phi = n is the
///     circular orbit).
/// n_psi steps in integers from -n_phi to n_phi and therefore inherits the
/// parity of n_phi; this is the documented default, the sources that define
/// the model never commit to one.
struct QuantumNumbers {
    HalfInt n_r;   // radial
    HalfInt n_phi; // azimuthal

    std::optional<HalfInt> n_psi; // orientation, |n_psi| <= n_phi
    std::optional<int> l;         // orbital part of n_phi: n_phi = l + s
    std::optional<HalfInt> j;     // l +- 1/2
    std::optional<HalfInt> m_j;
    std::optional<HalfInt> m_l;
    std::optional<HalfInt> m_s;
    std::optional<HalfInt> F; // total angular momentum incl. nucleus
    std::optional<HalfInt> I; // nuclear spin

    /// Principal quantum number, n = n_r + n_phi exactly.
    HalfInt n() const { return n_r + n_phi; }

    /// Electron spin, fixed 1/2.
    static constexpr HalfInt spin() { return HalfInt::half(); }

    /// Throws std::invalid_argument if any invariant is violated
    /// (n <= 0, negative n_r/n_phi, n_phi != l + 1/2 with l set,
    /// j not in {l - 1/2, l + 1/2}, |m_j| > j, off-lattice steps, ...).
    void validate() const;

    static QuantumNumbers sommerfeld(HalfInt n_r, HalfInt n_phi);
    /// Integer convention, n_phi = n (circular orbit of principal number n).
    static QuantumNumbers circular(int n);
    /// Spectroscopic state: n_phi = l + 1/2, n_r = n - n_phi.
    static QuantumNumbers term(int n, int l, HalfInt j);
    static QuantumNumbers term(int n, int l, HalfInt j, HalfInt m_j);

    /// Spectroscopic label "2p3/2" when the decomposition is set.
    std::string label() const;
};

/// Parse a term symbol like "1s1/2" or "2p3/2" (letters s,p,d,f,g for
/// l = 0..4, j as a fraction). Throws std::invalid_argument on bad input.
QuantumNumbers parse_term(std::string_view spec);

} // namespace fluxatom
