#include "fluxatom/constants.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace fluxatom {

namespace {

// CODATA-2018 recommended values, SI.
//
//   quantity              value                   status
//   h                     6.62607015e-34  J s     exact (SI definition)
//   e                     1.602176634e-19 C       exact (SI definition)
//   c                     299792458       m/s     exact (SI definition)
//   m_e                   9.1093837015e-31 kg     u_r = 3.0e-10
//   m_p                   1.67262192369e-27 kg    u_r = 3.1e-10
//   eps0                  8.8541878128e-12 F/m    u_r = 1.5e-10
//   mu0                   1.25663706212e-6 H/m    u_r = 1.5e-10
//   a0                    5.29177210903e-11 m     u_r = 1.5e-10
//   R_inf                 10973731.568160 1/m     u_r = 1.9e-12
//   mu_B                  9.2740100783e-24 J/T    u_r = 3.0e-10
//   mu_K (mu_N)           5.0507837461e-27 J/T    u_r = 3.1e-10
//   alpha                 7.2973525693e-3         u_r = 1.5e-10
//   |g_e| (option codata) 2.00231930436           model default is exactly 2
//
// flux_quantum is h/e (not the superconducting h/2e) and is derived at load.
constexpr double kPlanck = 6.62607015e-34;
constexpr double kCharge = 1.602176634e-19;
constexpr double kLightSpeed = 299792458.0;
constexpr double kElectronMass = 9.1093837015e-31;
constexpr double kProtonMass = 1.67262192369e-27;
constexpr double kEps0 = 8.8541878128e-12;
constexpr double kMu0 = 1.25663706212e-6;
constexpr double kBohrRadius = 5.29177210903e-11;
constexpr double kRydberg = 10973731.568160;
constexpr double kBohrMagneton = 9.2740100783e-24;
constexpr double kNuclearMagneton = 5.0507837461e-27;
constexpr double kFineStructure = 7.2973525693e-3;
constexpr double kGsModel = 2.0;
constexpr double kGsCodata = 2.00231930436;

constexpr double kConsistencyTol = 1e-9;

const std::set<std::string, std::less<>> kBaseKeys = {
    "h", "e", "m_e", "m_p", "eps0", "mu0", "c", "g_s"};
const std::set<std::string, std::less<>> kDerivedKeys = {
    "hbar", "a0", "R_inf", "mu_B", "mu_K", "alpha", "flux_quantum"};

double parse_positive(const std::string& key, const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v))
        throw std::invalid_argument("constants: non-numeric value for '" + key + "': " + text);
    if (v <= 0.0)
        throw std::invalid_argument("constants: non-positive value for '" + key + "'");
    return v;
}

struct Derived {
    double hbar, a0, R_inf, mu_B, mu_K, alpha, flux_quantum;
};

Derived derive(const PhysicalConstants& k) {
    const double pi = std::numbers::pi;
    Derived d;
    d.hbar = k.h / (2.0 * pi);
    d.a0 = k.eps0 * k.h * k.h / (pi * k.m_e * k.e * k.e);
    d.R_inf = k.m_e * std::pow(k.e, 4) / (8.0 * k.eps0 * k.eps0 * std::pow(k.h, 3) * k.c);
    d.mu_B = k.e * k.h / (4.0 * pi * k.m_e);
    d.mu_K = k.e * k.h / (4.0 * pi * k.m_p);
    d.alpha = k.e * k.e / (2.0 * k.eps0 * k.h * k.c);
    d.flux_quantum = k.h / k.e;
    return d;
}

void check_consistency(const PhysicalConstants& k) {
    const Derived d = derive(k);
    const struct { const char* name; double stored, recomputed; } pairs[] = {
        {"hbar", k.hbar, d.hbar},
        {"a0", k.a0, d.a0},
        {"R_inf", k.R_inf, d.R_inf},
        {"mu_B", k.mu_B, d.mu_B},
        {"mu_K", k.mu_K, d.mu_K},
        {"alpha", k.alpha, d.alpha},
        {"flux_quantum", k.flux_quantum, d.flux_quantum},
    };
    for (const auto& p : pairs) {
        const double rel = std::abs(p.stored - p.recomputed) / std::abs(p.recomputed);
        if (!(rel <= kConsistencyTol))
            throw std::invalid_argument(
                std::string("constants: inconsistent override, '") + p.name +
                "' disagrees with its base constants by relative " + std::to_string(rel));
    }
    const double fields[] = {k.h, k.hbar, k.e, k.m_e, k.m_p, k.eps0, k.mu0, k.c,
                             k.a0, k.R_inf, k.mu_B, k.mu_K, k.alpha, k.g_s, k.flux_quantum};
    for (double f : fields)
        if (!(f > 0.0) || !std::isfinite(f))
            throw std::invalid_argument("constants: non-positive value");
}

} // namespace

PhysicalConstants load_constants() { return load_constants(ConstantsConfig{}); }

PhysicalConstants load_constants(const ConstantsConfig& config) {
    PhysicalConstants k{};
    k.h = kPlanck;
    k.e = kCharge;
    k.c = kLightSpeed;
    k.m_e = kElectronMass;
    k.m_p = kProtonMass;
    k.eps0 = kEps0;
    k.mu0 = kMu0;
    k.g_s = kGsModel;

    for (const auto& [key, value] : config) {
        if (kBaseKeys.count(key) == 0 && kDerivedKeys.count(key) == 0)
            throw std::invalid_argument("constants: unknown key '" + key + "'");
        if (key == "g_s" && value == "codata") {
            k.g_s = kGsCodata;
        } else if (kBaseKeys.count(key) != 0) {
            const double v = parse_positive(key, value);
            if (key == "h") k.h = v;
            else if (key == "e") k.e = v;
            else if (key == "c") k.c = v;
            else if (key == "m_e") k.m_e = v;
            else if (key == "m_p") k.m_p = v;
            else if (key == "eps0") k.eps0 = v;
            else if (key == "mu0") k.mu0 = v;
            else k.g_s = v;
        }
    }

    // Derived members follow the (possibly overridden) bases. CODATA stored
    // values are preferred when no base they depend on was touched, so that
    // the default table matches the published digits bit for bit.
    const bool bases_touched = [&] {
        for (const auto& [key, value] : config)
            if (kBaseKeys.count(key) != 0 && key != "g_s") return true;
        return false;
    }();
    const Derived d = derive(k);
    k.hbar = d.hbar;
    k.flux_quantum = d.flux_quantum;
    if (bases_touched) {
        k.a0 = d.a0;
        k.R_inf = d.R_inf;
        k.mu_B = d.mu_B;
        k.mu_K = d.mu_K;
        k.alpha = d.alpha;
    } else {
        k.a0 = kBohrRadius;
        k.R_inf = kRydberg;
        k.mu_B = kBohrMagneton;
        k.mu_K = kNuclearMagneton;
        k.alpha = kFineStructure;
    }

    for (const auto& [key, value] : config) {
        if (kDerivedKeys.count(key) == 0) continue;
        const double v = parse_positive(key, value);
        if (key == "hbar") k.hbar = v;
        else if (key == "a0") k.a0 = v;
        else if (key == "R_inf") k.R_inf = v;
        else if (key == "mu_B") k.mu_B = v;
        else if (key == "mu_K") k.mu_K = v;
        else if (key == "alpha") k.alpha = v;
        else k.flux_quantum = v;
    }

    check_consistency(k);
    return k;
}

ConstantsConfig read_constants_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("constants: cannot open '" + path + "'");
    ConstantsConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("constants: " + path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::runtime_error("constants: " + path + ":" + std::to_string(lineno) +
                                     ": empty key or value");
        cfg[key] = value;
    }
    return cfg;
}

EnergyUnit parse_energy_unit(std::string_view name) {
    if (name == "J") return EnergyUnit::joule;
    if (name == "eV") return EnergyUnit::electron_volt;
    if (name == "MHz") return EnergyUnit::megahertz;
    if (name == "1/cm") return EnergyUnit::inverse_cm;
    throw std::invalid_argument("unknown energy unit '" + std::string(name) + "'");
}

std::string_view energy_unit_name(EnergyUnit unit) {
    switch (unit) {
        case EnergyUnit::joule: return "J";
        case EnergyUnit::electron_volt: return "eV";
        case EnergyUnit::megahertz: return "MHz";
        case EnergyUnit::inverse_cm: return "1/cm";
    }
    return "?";
}

double convert_energy(double joules, EnergyUnit target, const PhysicalConstants& k) {
    if (!std::isfinite(joules))
        throw std::invalid_argument("convert_energy: non-finite input");
    switch (target) {
        case EnergyUnit::joule: return joules;
        case EnergyUnit::electron_volt: return joules / k.e;
        case EnergyUnit::megahertz: return joules / k.h / 1e6;
        case EnergyUnit::inverse_cm: return joules / (k.h * k.c) / 100.0;
    }
    throw std::invalid_argument("convert_energy: bad unit");
}

double energy_to_joules(double value, EnergyUnit source, const PhysicalConstants& k) {
    if (!std::isfinite(value))
        throw std::invalid_argument("energy_to_joules: non-finite input");
    switch (source) {
        case EnergyUnit::joule: return value;
        case EnergyUnit::electron_volt: return value * k.e;
        case EnergyUnit::megahertz: return value * 1e6 * k.h;
        case EnergyUnit::inverse_cm: return value * 100.0 * k.h * k.c;
    }
    throw std::invalid_argument("energy_to_joules: bad unit");
}

} // namespace fluxatom
