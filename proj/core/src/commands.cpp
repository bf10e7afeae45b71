#include "fluxatom/commands.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fluxatom/coupling.hpp"
#include "fluxatom/effects_simple.hpp"
#include "fluxatom/energy.hpp"
#include "fluxatom/flux.hpp"
#include "fluxatom/orbits.hpp"

namespace fluxatom {

namespace {

std::string signed_str(HalfInt h) {
    return (h >= HalfInt(0) ? "+" : "") + h.str();
}

std::string format_double(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

/// Experimental-registry key for a state's hyperfine interval, e.g.
/// ("H-1", 1s1/2) -> "H_1s_hfs_interval_MHz".
std::string hfs_experiment_key(const NuclearSpecies& species, const QuantumNumbers& qn) {
    const std::string prefix = species.name.substr(0, species.name.find('-'));
    // label is like "2p3/2"; keep "<n><letter>" only
    std::string short_state;
    for (char c : qn.label()) {
        short_state += c;
        if (!std::isdigit(static_cast<unsigned char>(c))) break;
    }
    return prefix + "_" + short_state + "_hfs_interval_MHz";
}

} // namespace

CommandContext CommandContext::standard() {
    CommandContext ctx;
    ctx.constants = load_constants();
    ctx.species = SpeciesRegistry::builtin(ctx.constants);
    ctx.experimental = ExperimentalRegistry::builtin();
    return ctx;
}

Report cmd_levels(int Z, int n_max, const CommandContext& ctx) {
    if (n_max < 1) throw std::invalid_argument("levels: n_max must be >= 1");
    if (Z < 1) throw std::invalid_argument("levels: Z must be >= 1");
    Report report;
    report.command = "levels";
    report.add_input("Z", std::to_string(Z));
    report.add_input("n_max", std::to_string(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double W = bohr_energy(QuantumNumbers::circular(n), Z, ctx.constants);
        report.add_row("W(n=" + std::to_string(n) + ")",
                       convert_energy(W, EnergyUnit::electron_volt, ctx.constants), "eV");
    }
    return report;
}

Report cmd_zeeman(const std::string& state_spec, double B_tesla, FieldRegime regime, int Z,
                  const CommandContext& ctx) {
    const QuantumNumbers base = parse_term(state_spec);
    Report report;
    report.command = "zeeman";
    report.add_input("state", state_spec);
    report.add_input("B_T", format_double(B_tesla));
    report.add_input("regime", regime == FieldRegime::weak ? "weak" : "strong");
    report.add_input("Z", std::to_string(Z));

    double sum = 0.0;
    double largest = 0.0;
    if (regime == FieldRegime::weak) {
        report.add_row("g_j", lande_g(*base.l, *base.j), "dimensionless");
        for (HalfInt m_j = -*base.j; m_j <= *base.j; m_j = m_j + HalfInt(1)) {
            QuantumNumbers qn = base;
            qn.m_j = m_j;
            const EnergyShift shift = zeeman_anomalous(qn, Z, B_tesla, ctx.constants);
            report.add_row("m_j=" + signed_str(m_j),
                           shift.in(EnergyUnit::electron_volt, ctx.constants), "eV");
            sum += shift.value;
            largest = std::max(largest, std::abs(shift.value));
        }
    } else {
        const int l = *base.l;
        for (int m_l = -l; m_l <= l; ++m_l) {
            for (int twice_ms : {-1, 1}) {
                QuantumNumbers qn = base;
                qn.j.reset();
                qn.m_l = HalfInt(m_l);
                qn.m_s = HalfInt::from_twice(twice_ms);
                const EnergyShift shift = paschen_back(qn, Z, B_tesla, ctx.constants);
                report.add_row(
                    "m_l=" + signed_str(HalfInt(m_l)) + ",m_s=" + signed_str(*qn.m_s),
                    shift.in(EnergyUnit::electron_volt, ctx.constants), "eV");
                sum += shift.value;
                largest = std::max(largest, std::abs(shift.value));
            }
        }
    }
    // Center of gravity of the multiplet is preserved.
    const double residual = largest > 0.0 ? std::abs(sum) / largest : std::abs(sum);
    report.add_diagnostic("sum over sublevels / largest shift", residual, 1e-15);
    return report;
}

Report cmd_hyperfine(const std::string& state_spec, const std::string& species_name,
                     HyperfineModel model, double cos_beta, const CommandContext& ctx) {
    const QuantumNumbers qn = parse_term(state_spec);
    const NuclearSpecies& species = ctx.species.lookup(species_name);
    const PhysicalConstants& k = ctx.constants;

    Report report;
    report.command = "hyperfine";
    report.add_input("state", state_spec);
    report.add_input("species", species_name);
    report.add_input("model", model == HyperfineModel::simple
                                  ? "simple"
                                  : model == HyperfineModel::full ? "full" : "standard");
    if (model == HyperfineModel::simple) report.add_input("cos_beta", format_double(cos_beta));

    if (species.I <= HalfInt(0)) {
        report.add_input("note", "no hyperfine structure (I = 0)");
        return report;
    }

    const std::string exp_key = hfs_experiment_key(species, qn);

    if (model == HyperfineModel::simple) {
        const EnergyShift shift = hyperfine_simplified(qn, species, cos_beta, k);
        const double interval = hyperfine_interval(shift);
        report.add_row("shift", shift.in(EnergyUnit::electron_volt, k), "eV");
        report.add_row("interval", convert_energy(interval, EnergyUnit::megahertz, k), "MHz");
        if (ctx.experimental.contains(exp_key)) {
            const ExperimentalValue& exp = ctx.experimental.lookup(exp_key);
            report.add_comparison("interval vs experiment (" + exp.observable + ")",
                                  convert_energy(interval, EnergyUnit::megahertz, k), exp.value);
        }
        return report;
    }

    // full / standard: A-constant and F-level diagram
    const HalfInt F_lo = (species.I - *qn.j).abs();
    const HalfInt F_hi = species.I + *qn.j;
    double A = 0.0;
    if (model == HyperfineModel::full) {
        A = hyperfine_full(qn, species, F_hi, k).A_constant;
    } else {
        A = standard_hyperfine_constant(qn, species, k);
    }
    report.add_row("A", convert_energy(A, EnergyUnit::megahertz, k), "MHz");

    for (HalfInt F = F_lo; F <= F_hi; F = F + HalfInt(1)) {
        const double bracket =
            F.times_plus_one() - species.I.times_plus_one() - qn.j->times_plus_one();
        const double shift = model == HyperfineModel::full
                                 ? hyperfine_full(qn, species, F, k).shift.value
                                 : 0.5 * A * bracket;
        report.add_row("F=" + F.str(), convert_energy(shift, EnergyUnit::megahertz, k), "MHz");
    }
    // Top interval dW(F_hi) - dW(F_hi - 1) = A * F_hi.
    const double interval = A * F_hi.value();
    report.add_row("interval(F=" + F_hi.str() + " - F=" + (F_hi - HalfInt(1)).str() + ")",
                   convert_energy(interval, EnergyUnit::megahertz, k), "MHz");

    if (model == HyperfineModel::full) {
        const double A_std = standard_hyperfine_constant(qn, species, k);
        report.add_comparison("A vs standard (2l+1) form", convert_energy(A, EnergyUnit::megahertz, k),
                              convert_energy(A_std, EnergyUnit::megahertz, k));
    }
    if (ctx.experimental.contains(exp_key)) {
        const ExperimentalValue& exp = ctx.experimental.lookup(exp_key);
        report.add_comparison("interval vs experiment (" + exp.observable + ")",
                              convert_energy(interval, EnergyUnit::megahertz, k), exp.value);
    }
    return report;
}

Report cmd_spin_orbit(const std::string& state_spec, double cos_beta,
                      std::optional<HalfInt> n_phi, int Z, const CommandContext& ctx) {
    const QuantumNumbers qn = parse_term(state_spec);
    const PhysicalConstants& k = ctx.constants;
    const HalfInt model_n_phi = n_phi.value_or(HalfInt(*qn.l) + QuantumNumbers::spin());

    Report report;
    report.command = "spin-orbit";
    report.add_input("state", state_spec);
    report.add_input("cos_beta", format_double(cos_beta));
    report.add_input("n_phi", model_n_phi.str());
    report.add_input("Z", std::to_string(Z));

    const QuantumNumbers qn_model =
        QuantumNumbers::sommerfeld(qn.n() - model_n_phi, model_n_phi);
    const EnergyShift model = spin_orbit_simplified(qn_model, Z, cos_beta, k);
    const double standard = standard_spin_orbit(qn, Z, k);

    report.add_row("model shift", model.in(EnergyUnit::electron_volt, k), "eV");
    report.add_row("standard shift", convert_energy(standard, EnergyUnit::electron_volt, k),
                   "eV");
    // Deviation factor standard/model; undefined when the model shift is 0.
    report.add_comparison("shift: model vs standard", model.value, standard,
                          RatioRule::reference_over_paper);

    if (*qn.l == 1 && *qn.j == HalfInt::from_twice(3) && qn.n() == HalfInt(2) &&
        cos_beta != 0.0) {
        const double predicted =
            Z * model_n_phi.value() * model_n_phi.value() / (12.0 * cos_beta);
        const double computed = standard / model.value;
        report.add_diagnostic("2p3/2 factor vs Z n_phi^2/(12 cos beta)",
                              std::abs(computed / predicted - 1.0), 1e-12);
    }
    return report;
}

VerifySuite parse_verify_suite(const std::string& name) {
    if (name == "action") return VerifySuite::action;
    if (name == "dipole-flux") return VerifySuite::dipole_flux;
    if (name == "linearization") return VerifySuite::linearization;
    if (name == "all") return VerifySuite::all;
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

namespace {

void verify_action(Report& report, double tol, const PhysicalConstants& k) {
    for (int Z : {1, 2}) {
        for (int n = 1; n <= 6; ++n) {
            double worst = 0.0;
            // Half-integer family n_phi in {1/2, ..., n-1/2} and integer
            // family {1, ..., n}; the action depends only on n.
            for (int twice_nphi = 1; twice_nphi <= 2 * n; ++twice_nphi) {
                const HalfInt n_phi = HalfInt::from_twice(twice_nphi);
                const QuantumNumbers qn = QuantumNumbers::sommerfeld(HalfInt(n) - n_phi, n_phi);
                const double J = action_integral(qn, Z, k, 1e-13);
                worst = std::max(worst, std::abs(J / (n * k.h) - 1.0));
            }
            report.add_diagnostic(
                "action/(n h) - 1, Z=" + std::to_string(Z) + " n=" + std::to_string(n) +
                    " (max over n_phi)",
                worst, tol);
        }
    }
}

void verify_dipole_flux(Report& report, double tol, const PhysicalConstants& k) {
    // The quadrature runs a decade tighter than the comparison, but not
    // below what double precision supports; an impossible requested tol then
    // shows up as failed diagnostics rather than a quadrature abort.
    const double quad_tol = std::max(0.01 * tol, 1e-13);
    const double mu = 1.41060679736e-26; // proton moment scale
    for (double eps : {0.0, 0.3, 0.6, 0.9, 0.95}) {
        const double a = 4.0 * k.a0;
        const double b = a * std::sqrt(1.0 - eps * eps);
        const OrbitGeometry geom = OrbitGeometry::from_semi_axes(a, b);
        const double closed = dipole_focus_flux(geom, mu, k).total;
        const double oracle = dipole_flux_oracle(geom, mu, k, quad_tol);
        report.add_diagnostic("closed vs quadrature, eps=" + format_double(eps),
                              std::abs(closed - oracle) / std::abs(closed), tol);
    }
    std::mt19937 rng(20180521u);
    std::uniform_real_distribution<double> log_a(std::log(0.1), std::log(100.0));
    std::uniform_real_distribution<double> ecc(0.0, 0.97);
    std::uniform_real_distribution<double> moment(0.1, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = k.a0 * std::exp(log_a(rng));
        const double eps = ecc(rng);
        const double b = a * std::sqrt(1.0 - eps * eps);
        const OrbitGeometry geom = OrbitGeometry::from_semi_axes(a, b);
        const double mu_i = moment(rng) * k.mu_K;
        const double closed = dipole_focus_flux(geom, mu_i, k).total;
        const double oracle = dipole_flux_oracle(geom, mu_i, k, quad_tol);
        worst = std::max(worst, std::abs(closed - oracle) / std::abs(closed));
    }
    report.add_diagnostic("closed vs quadrature, 100 random geometries (max)", worst, tol);
}

void verify_linearization(Report& report, double slope_tol, double coeff_tol,
                          const PhysicalConstants& k) {
    // Fit log(residual) vs log(flux); the remainder after the linear shift
    // must be quadratic. The exact level counts flux along the angular
    // momentum, the linear shift along the current normal, so the shift
    // enters with the orientation map applied (see energy.hpp).
    for (const auto& [n, Z] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}}) {
        const QuantumNumbers qn = QuantumNumbers::circular(n);
        const double W0 = bohr_energy(qn, Z, k);
        std::vector<double> log_flux, log_residual;
        for (int i = 0; i < 20; ++i) {
            const double frac = 1e-6 * std::pow(1e3, i / 19.0);
            const double flux = frac * k.flux_quantum;
            const double shifted = W0 + energy_shift_linear(qn, Z, flux, k).value;
            const double residual = std::abs(energy_exact(qn, Z, -flux, k) - shifted);
            log_flux.push_back(std::log(flux));
            log_residual.push_back(std::log(residual));
        }
        double mean_x = 0.0, mean_y = 0.0;
        for (std::size_t i = 0; i < log_flux.size(); ++i) {
            mean_x += log_flux[i];
            mean_y += log_residual[i];
        }
        mean_x /= static_cast<double>(log_flux.size());
        mean_y /= static_cast<double>(log_flux.size());
        double cov = 0.0, var = 0.0;
        for (std::size_t i = 0; i < log_flux.size(); ++i) {
            cov += (log_flux[i] - mean_x) * (log_residual[i] - mean_y);
            var += (log_flux[i] - mean_x) * (log_flux[i] - mean_x);
        }
        const double slope = cov / var;
        report.add_diagnostic("remainder exponent - 2, n=" + std::to_string(n) +
                                  " Z=" + std::to_string(Z),
                              std::abs(slope - 2.0), slope_tol);
    }
    for (int n : {1, 2, 3}) {
        for (int Z : {1, 2}) {
            const double form_a = k.m_e * Z * Z * std::pow(k.e, 5) /
                                  (4.0 * k.eps0 * k.eps0 * std::pow(static_cast<double>(n), 3) *
                                   std::pow(k.h, 3));
            const double form_b =
                2.0 * k.R_inf * k.c * k.e * Z * Z / std::pow(static_cast<double>(n), 3);
            report.add_diagnostic("shift coefficient forms, n=" + std::to_string(n) +
                                      " Z=" + std::to_string(Z),
                                  std::abs(form_a / form_b - 1.0), coeff_tol);
        }
    }
}

} // namespace

Report cmd_verify(VerifySuite suite, std::optional<double> tol_override,
                  const CommandContext& ctx) {
    Report report;
    report.command = "verify";
    const char* name = suite == VerifySuite::action
                           ? "action"
                           : suite == VerifySuite::dipole_flux
                                 ? "dipole-flux"
                                 : suite == VerifySuite::linearization ? "linearization" : "all";
    report.add_input("suite", name);
    if (tol_override) report.add_input("tol", format_double(*tol_override));

    const PhysicalConstants& k = ctx.constants;
    if (suite == VerifySuite::action || suite == VerifySuite::all)
        verify_action(report, tol_override.value_or(1e-9), k);
    if (suite == VerifySuite::dipole_flux || suite == VerifySuite::all)
        verify_dipole_flux(report, tol_override.value_or(1e-6), k);
    if (suite == VerifySuite::linearization || suite == VerifySuite::all)
        verify_linearization(report, tol_override.value_or(0.05), tol_override.value_or(1e-9),
                             k);
    return report;
}

} // namespace fluxatom
