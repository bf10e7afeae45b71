#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fluxatom/commands.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct GlobalOptions {
    std::string constants_path;
    std::string species_path;
    std::string experimental_path;
    std::string g_s;
    std::string format = "table";
    int digits = 10;
};

fluxatom::CommandContext make_context(const GlobalOptions& opt) {
    fluxatom::ConstantsConfig cfg;
    if (!opt.constants_path.empty()) cfg = fluxatom::read_constants_file(opt.constants_path);
    if (!opt.g_s.empty()) cfg["g_s"] = opt.g_s;

    fluxatom::CommandContext ctx;
    ctx.constants = fluxatom::load_constants(cfg);
    ctx.species = opt.species_path.empty()
                      ? fluxatom::SpeciesRegistry::builtin(ctx.constants)
                      : fluxatom::SpeciesRegistry::load(opt.species_path, ctx.constants);
    ctx.experimental = opt.experimental_path.empty()
                           ? fluxatom::ExperimentalRegistry::builtin()
                           : fluxatom::ExperimentalRegistry::load(opt.experimental_path);
    return ctx;
}

int emit(const fluxatom::Report& report, const GlobalOptions& opt) {
    std::cout << fluxatom::render_report(report, fluxatom::parse_report_format(opt.format),
                                         opt.digits);
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flux-quantized Sommerfeld atom: level tables, Zeeman/Paschen-Back and "
                 "hyperfine splittings, spin-orbit comparisons, oracle verification"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--constants", opt.constants_path,
                   "key=value file overriding physical constants");
    app.add_option("--species-file", opt.species_path, "CSV species registry (name,Z,A,I,g_I)");
    app.add_option("--experimental-file", opt.experimental_path,
                   "CSV experimental registry (key,value,unit,source)");
    app.add_option("--g-s", opt.g_s, "electron g-factor: a number or 'codata' (default 2)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--digits", opt.digits, "significant digits in table/csv output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    // levels
    auto* levels = app.add_subcommand("levels", "gross Bohr/Sommerfeld levels W(n)");
    int levels_Z = 1;
    int levels_n_max = 5;
    levels->add_option("--Z", levels_Z, "nuclear charge number")->capture_default_str();
    levels->add_option("--n-max", levels_n_max, "highest principal quantum number")
        ->capture_default_str();

    // zeeman
    auto* zeeman = app.add_subcommand("zeeman", "Zeeman / Paschen-Back splitting of a state");
    std::string zeeman_state;
    double zeeman_B = 1.0;
    std::string zeeman_regime;
    int zeeman_Z = 1;
    zeeman->add_option("state", zeeman_state, "term symbol, e.g. 2p3/2")->required();
    zeeman->add_option("--B", zeeman_B, "magnetic field [T]")->capture_default_str();
    zeeman->add_option("--regime", zeeman_regime, "weak (coupled) or strong (decoupled)")
        ->required()
        ->check(CLI::IsMember({"weak", "strong"}));
    zeeman->add_option("--Z", zeeman_Z, "nuclear charge number")->capture_default_str();

    // hyperfine
    auto* hyperfine = app.add_subcommand("hyperfine", "hyperfine A-constant and F levels");
    std::string hf_state;
    std::string hf_species = "H-1";
    std::string hf_model = "full";
    double hf_cos_beta = 2.0 / 3.0;
    hyperfine->add_option("state", hf_state, "term symbol, e.g. 1s1/2")->required();
    hyperfine->add_option("--species", hf_species, "species name from the registry")
        ->capture_default_str();
    hyperfine->add_option("--model", hf_model, "simple, full or standard")
        ->check(CLI::IsMember({"simple", "full", "standard"}))
        ->capture_default_str();
    hyperfine->add_option("--cos-beta", hf_cos_beta, "moment tilt for the simple model")
        ->capture_default_str();

    // spin-orbit
    auto* spin_orbit = app.add_subcommand("spin-orbit", "model vs standard spin-orbit shift");
    std::string so_state;
    double so_cos_beta = 2.0 / 3.0;
    std::string so_n_phi;
    int so_Z = 1;
    spin_orbit->add_option("state", so_state, "term symbol, e.g. 2p3/2")->required();
    spin_orbit->add_option("--cos-beta", so_cos_beta, "moment tilt")->capture_default_str();
    spin_orbit->add_option("--n-phi", so_n_phi, "azimuthal quantum number (default l + 1/2)");
    spin_orbit->add_option("--Z", so_Z, "nuclear charge number")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run an oracle verification suite");
    std::string verify_suite;
    double verify_tol = 0.0;
    verify->add_option("suite", verify_suite, "action, dipole-flux, linearization or all")
        ->required()
        ->check(CLI::IsMember({"action", "dipole-flux", "linearization", "all"}));
    auto* tol_opt = verify->add_option("--tol", verify_tol, "override the pass tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const fluxatom::CommandContext ctx = make_context(opt);
        if (*levels) return emit(fluxatom::cmd_levels(levels_Z, levels_n_max, ctx), opt);
        if (*zeeman)
            return emit(fluxatom::cmd_zeeman(zeeman_state, zeeman_B,
                                             zeeman_regime == "weak"
                                                 ? fluxatom::FieldRegime::weak
                                                 : fluxatom::FieldRegime::strong,
                                             zeeman_Z, ctx),
                        opt);
        if (*hyperfine)
            return emit(fluxatom::cmd_hyperfine(hf_state, hf_species,
                                                hf_model == "simple"
                                                    ? fluxatom::HyperfineModel::simple
                                                    : hf_model == "full"
                                                          ? fluxatom::HyperfineModel::full
                                                          : fluxatom::HyperfineModel::standard,
                                                hf_cos_beta, ctx),
                        opt);
        if (*spin_orbit) {
            std::optional<fluxatom::HalfInt> n_phi;
            if (!so_n_phi.empty()) n_phi = fluxatom::parse_half_int(so_n_phi);
            return emit(fluxatom::cmd_spin_orbit(so_state, so_cos_beta, n_phi, so_Z, ctx), opt);
        }
        if (*verify) {
            std::optional<double> tol;
            if (tol_opt->count() > 0) tol = verify_tol;
            return emit(fluxatom::cmd_verify(fluxatom::parse_verify_suite(verify_suite), tol, ctx),
                        opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
