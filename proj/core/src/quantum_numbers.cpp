#include "fluxatom/quantum_numbers.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace fluxatom {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt parse_half_int(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw std::invalid_argument("half-integer: empty input");

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (den != "2" && den != "1")
            throw std::invalid_argument("half-integer: denominator must be 1 or 2 in '" + s + "'");
        char* end = nullptr;
        const long v = std::strtol(num.c_str(), &end, 10);
        if (end == num.c_str() || *end != '\0')
            throw std::invalid_argument("half-integer: bad numerator in '" + s + "'");
        return HalfInt::from_twice(den == "2" ? static_cast<int>(v) : static_cast<int>(2 * v));
    }

    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument("half-integer: cannot parse '" + s + "'");
    const double tw = 2.0 * v;
    const long rounded = std::lround(tw);
    if (tw != static_cast<double>(rounded))
        throw std::invalid_argument("half-integer: '" + s + "' is not on the half-integer lattice");
    return HalfInt::from_twice(static_cast<int>(rounded));
}

namespace {

void fail(const std::string& what) { throw std::invalid_argument("quantum numbers: " + what); }

} // namespace

void QuantumNumbers::validate() const {
    if (n_r < HalfInt(0)) fail("n_r must be >= 0");
    if (n_phi < HalfInt(0)) fail("n_phi must be >= 0");
    if (n() <= HalfInt(0)) fail("n = n_r + n_phi must be positive");

    if (n_psi) {
        if (n_psi->abs() > n_phi) fail("|n_psi| must not exceed n_phi");
        if (!(n_phi - *n_psi).is_integer()) fail("n_psi must step in integers from n_phi");
    }
    if (l) {
        if (*l < 0) fail("l must be >= 0");
        if (n_phi != HalfInt(*l) + spin()) fail("decomposition requires n_phi = l + 1/2");
    }
    if (j) {
        if (!l) fail("j requires l");
        const HalfInt lh(*l);
        if (*j != lh + spin() && *j != lh - spin()) fail("j must be l +- 1/2");
        if (*j < spin()) fail("j must be >= 1/2");
    }
    if (m_j) {
        if (!j) fail("m_j requires j");
        if (m_j->abs() > *j) fail("|m_j| must not exceed j");
        if (!(*j - *m_j).is_integer()) fail("m_j must step in integers from j");
    }
    if (m_l) {
        if (!l) fail("m_l requires l");
        if (!m_l->is_integer()) fail("m_l must be an integer");
        if (m_l->abs() > HalfInt(*l)) fail("|m_l| must not exceed l");
    }
    if (m_s) {
        if (m_s->abs() != spin()) fail("m_s must be +-1/2");
    }
    if (I) {
        if (*I < HalfInt(0)) fail("I must be >= 0");
    }
    if (F) {
        if (!I || !j) fail("F requires I and j");
        const HalfInt lo = (*I - *j).abs();
        const HalfInt hi = *I + *j;
        if (*F < lo || *F > hi) fail("F must lie in {|I-j|, ..., I+j}");
        if (!(*F - lo).is_integer()) fail("F must step in integers from |I-j|");
    }
}

QuantumNumbers QuantumNumbers::sommerfeld(HalfInt n_r, HalfInt n_phi) {
    QuantumNumbers qn;
    qn.n_r = n_r;
    qn.n_phi = n_phi;
    qn.validate();
    return qn;
}

QuantumNumbers QuantumNumbers::circular(int n) {
    if (n < 1) fail("circular orbit requires n >= 1");
    QuantumNumbers qn;
    qn.n_r = HalfInt(0);
    qn.n_phi = HalfInt(n);
    qn.validate();
    return qn;
}

QuantumNumbers QuantumNumbers::term(int n, int l, HalfInt j) {
    if (n < 1) fail("term requires n >= 1");
    if (l < 0 || l > n - 1) fail("term requires 0 <= l <= n-1");
    QuantumNumbers qn;
    qn.n_phi = HalfInt(l) + spin();
    qn.n_r = HalfInt(n) - qn.n_phi;
    qn.l = l;
    qn.j = j;
    qn.validate();
    return qn;
}

QuantumNumbers QuantumNumbers::term(int n, int l, HalfInt j, HalfInt m_j) {
    QuantumNumbers qn = term(n, l, j);
    qn.m_j = m_j;
    qn.validate();
    return qn;
}

namespace {
constexpr char kSpectroscopicLetters[] = "spdfg";
}

std::string QuantumNumbers::label() const {
    if (!l || !j) return "(n_r=" + n_r.str() + ", n_phi=" + n_phi.str() + ")";
    const int nn = static_cast<int>(n().value());
    std::string out = std::to_string(nn);
    out += (*l < 5) ? kSpectroscopicLetters[*l] : '?';
    out += j->str();
    return out;
}

QuantumNumbers parse_term(std::string_view spec) {
    const std::string s(spec);
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0 || i >= s.size())
        throw std::invalid_argument("state spec '" + s + "': expected <n><letter><j>");
    const int n = std::stoi(s.substr(0, i));

    const char letter = s[i];
    int l = -1;
    for (int cand = 0; cand < 5; ++cand)
        if (kSpectroscopicLetters[cand] == letter) l = cand;
    if (l < 0)
        throw std::invalid_argument("state spec '" + s + "': unknown orbital letter '" +
                                    std::string(1, letter) + "' (use s,p,d,f,g)");
    ++i;
    if (i >= s.size())
        throw std::invalid_argument("state spec '" + s + "': missing j");
    const HalfInt j = parse_half_int(s.substr(i));
    return QuantumNumbers::term(n, l, j);
}

} // namespace fluxatom
