#include "fluxatom/reference.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fluxatom {

NuclearSpecies NuclearSpecies::make(std::string name, int Z, int A_mass, HalfInt I, double g_I,
                                    const PhysicalConstants& k) {
    if (name.empty()) throw std::invalid_argument("species: empty name");
    if (Z < 1) throw std::invalid_argument("species '" + name + "': Z must be >= 1");
    if (A_mass < 1) throw std::invalid_argument("species '" + name + "': A must be >= 1");
    if (I < HalfInt(0)) throw std::invalid_argument("species '" + name + "': I must be >= 0");
    NuclearSpecies s;
    s.name = std::move(name);
    s.Z = Z;
    s.A_mass = A_mass;
    s.I = I;
    s.g_I = g_I;
    s.mu_nuc = g_I * k.mu_K * I.value();
    return s;
}

double standard_lande(int l, HalfInt s, HalfInt j) {
    if (l < 0) throw std::invalid_argument("standard_lande: l must be >= 0");
    if (s < HalfInt(0)) throw std::invalid_argument("standard_lande: s must be >= 0");
    const HalfInt lh(l);
    const HalfInt lo = (lh - s).abs();
    const HalfInt hi = lh + s;
    if (j < lo || j > hi || !(j - lo).is_integer())
        throw std::invalid_argument("standard_lande: j must lie in {|l-s|, ..., l+s}");
    const double jj = j.times_plus_one();
    if (jj == 0.0) throw std::invalid_argument("standard_lande: j = 0 has no g-factor");
    const double ss = s.times_plus_one();
    const double ll = static_cast<double>(l) * (l + 1.0);
    return 1.0 + (jj + ss - ll) / (2.0 * jj);
}

namespace {

struct HyperfineInputs {
    double n, jj, I;
    int l;
};

HyperfineInputs hyperfine_inputs(const QuantumNumbers& qn, const NuclearSpecies& species) {
    qn.validate();
    if (!qn.l || !qn.j)
        throw std::invalid_argument("hyperfine: state needs the (l, j) decomposition");
    if (species.I <= HalfInt(0))
        throw std::domain_error("hyperfine: species '" + species.name +
                                "' has I = 0, no hyperfine structure");
    return {qn.n().value(), qn.j->times_plus_one(), species.I.value(), *qn.l};
}

} // namespace

double standard_hyperfine_constant(const QuantumNumbers& qn, const NuclearSpecies& species,
                                   const PhysicalConstants& k) {
    const HyperfineInputs in = hyperfine_inputs(qn, species);
    const double mu_e = 0.5 * k.g_s * k.mu_B;
    const double Z3 = std::pow(static_cast<double>(species.Z), 3);
    return 2.0 * k.alpha * k.alpha * Z3 * k.rydberg_energy() * mu_e * species.mu_nuc /
           (k.mu_B * k.mu_B * std::pow(in.n, 3) * in.jj * (2.0 * in.l + 1.0) * in.I);
}

double standard_spin_orbit(const QuantumNumbers& qn, int Z, const PhysicalConstants& k) {
    qn.validate();
    if (Z < 1) throw std::invalid_argument("standard_spin_orbit: Z must be >= 1");
    if (!qn.l || !qn.j)
        throw std::invalid_argument("standard_spin_orbit: state needs the (l, j) decomposition");
    const int l = *qn.l;
    if (l < 1) throw std::domain_error("standard_spin_orbit: vanishes for l = 0 states");
    const double n = qn.n().value();
    const double bracket =
        qn.j->times_plus_one() - l * (l + 1.0) - QuantumNumbers::spin().times_plus_one();
    const double r3_expect = std::pow(static_cast<double>(Z), 3) /
                             (std::pow(k.a0, 3) * std::pow(n, 3) * l * (l + 0.5) * (l + 1.0));
    return k.mu0 / (4.0 * std::numbers::pi) * k.g_s * k.mu_B * k.mu_B * Z * r3_expect *
           bracket / 2.0;
}

// --- registries ------------------------------------------------------------

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
    }
    return fields;
}

[[noreturn]] void parse_fail(const std::string& path, int lineno, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
}

double parse_number(const std::string& path, int lineno, const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v))
        parse_fail(path, lineno, "bad numeric field '" + text + "'");
    return v;
}

int parse_int(const std::string& path, int lineno, const std::string& text) {
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0')
        parse_fail(path, lineno, "bad integer field '" + text + "'");
    return static_cast<int>(v);
}

const std::set<std::string, std::less<>> kSupportedUnits = {
    "J", "eV", "MHz", "1/cm", "Wb", "T", "dimensionless"};

} // namespace

SpeciesRegistry SpeciesRegistry::builtin(const PhysicalConstants& k) {
    SpeciesRegistry reg;
    // Nuclear g-factors from the standard nuclear data tables.
    const NuclearSpecies defaults[] = {
        NuclearSpecies::make("H-1", 1, 1, HalfInt::half(), 5.5857, k),
        NuclearSpecies::make("D-2", 1, 2, HalfInt(1), 0.8574382338, k),
        NuclearSpecies::make("He-3", 2, 3, HalfInt::half(), -4.255250615, k),
        NuclearSpecies::make("He-4", 2, 4, HalfInt(0), 0.0, k), // spinless
    };
    for (const auto& s : defaults) reg.species_[s.name] = s;
    return reg;
}

SpeciesRegistry SpeciesRegistry::load(const std::string& path, const PhysicalConstants& k) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("species: cannot open '" + path + "'");
    SpeciesRegistry reg = builtin(k);
    std::set<std::string> from_file;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 5)
            parse_fail(path, lineno, "expected 5 fields name,Z,A_mass,I,g_I, got " +
                                         std::to_string(fields.size()));
        for (const auto& f : fields)
            if (f.empty()) parse_fail(path, lineno, "missing required field");
        if (from_file.count(fields[0]) != 0)
            parse_fail(path, lineno, "duplicate species name '" + fields[0] + "'");
        HalfInt I;
        try {
            I = parse_half_int(fields[3]);
        } catch (const std::invalid_argument& err) {
            parse_fail(path, lineno, err.what());
        }
        try {
            reg.species_[fields[0]] = NuclearSpecies::make(
                fields[0], parse_int(path, lineno, fields[1]), parse_int(path, lineno, fields[2]),
                I, parse_number(path, lineno, fields[4]), k);
        } catch (const std::invalid_argument& err) {
            parse_fail(path, lineno, err.what());
        }
        from_file.insert(fields[0]);
    }
    return reg;
}

const NuclearSpecies& SpeciesRegistry::lookup(std::string_view name) const {
    const auto it = species_.find(name);
    if (it == species_.end())
        throw std::out_of_range("species: unknown name '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> SpeciesRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, s] : species_) out.push_back(name);
    return out;
}

ExperimentalRegistry ExperimentalRegistry::builtin() {
    ExperimentalRegistry reg;
    const ExperimentalValue defaults[] = {
        {"H_1s_hfs_interval_MHz", 1420.4057517667, "MHz",
         "hydrogen maser 21 cm line, Essen et al. 1971"},
        {"D_1s_hfs_interval_MHz", 327.384352522, "MHz", "deuterium maser, Wineland/Ramsey 1972"},
        {"H_1s2s_interval_MHz", 2466061413.187, "MHz", "1S-2S two-photon, Parthey et al. 2011"},
    };
    for (const auto& v : defaults) reg.values_[v.observable] = v;
    return reg;
}

ExperimentalRegistry ExperimentalRegistry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("experimental: cannot open '" + path + "'");
    ExperimentalRegistry reg = builtin();
    std::set<std::string> from_file;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 4)
            parse_fail(path, lineno, "expected 4 fields key,value,unit,source, got " +
                                         std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty() || fields[2].empty())
            parse_fail(path, lineno, "missing required field");
        if (from_file.count(fields[0]) != 0)
            parse_fail(path, lineno, "duplicate key '" + fields[0] + "'");
        if (kSupportedUnits.count(fields[2]) == 0)
            parse_fail(path, lineno, "unsupported unit '" + fields[2] + "'");
        reg.values_[fields[0]] = ExperimentalValue{fields[0], parse_number(path, lineno, fields[1]),
                                                   fields[2], fields[3]};
        from_file.insert(fields[0]);
    }
    return reg;
}

const ExperimentalValue& ExperimentalRegistry::lookup(std::string_view key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw std::out_of_range("experimental: unknown key '" + std::string(key) + "'");
    return it->second;
}

bool ExperimentalRegistry::contains(std::string_view key) const {
    return values_.find(key) != values_.end();
}

std::vector<std::string> ExperimentalRegistry::keys() const {
    std::vector<std::string> out;
    for (const auto& [key, v] : values_) out.push_back(key);
    return out;
}

} // namespace fluxatom
