#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/error.hpp"
#include "casimir/thermo.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/verify.hpp"

namespace {

using namespace casimir;
using namespace casimir::cli;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;

struct Flags {
    std::string config;
    std::string mat1;
    std::string mat2;
    std::string a;
    std::string t;
    std::string out;
    bool include_conductivity = true;
    bool include_debye = true;
    double quad_abs_tol = 0.0;
    double sum_rel_tol = 0.0;
    long max_terms = 0;
    double energy_rel_tol = 0.0;
};

void add_common(CLI::App* cmd, Flags& f, std::vector<CLI::Option*>& opts) {
    opts.push_back(cmd->add_option("--config", f.config, "YAML config file; flags override it"));
    opts.push_back(cmd->add_option("--mat1", f.mat1, "first plate material file"));
    opts.push_back(cmd->add_option("--mat2", f.mat2, "second plate material file (default: mat1)"));
    opts.push_back(cmd->add_option("--a", f.a, "separation in m, or start:stop:count(:log)"));
    opts.push_back(cmd->add_option("--t", f.t, "temperature in K, or start:stop:count(:log)"));
    opts.push_back(cmd->add_option("--include-conductivity", f.include_conductivity, "keep dc conductivity terms"));
    opts.push_back(cmd->add_option("--include-debye", f.include_debye, "keep the Debye term of mica-type models"));
    opts.push_back(cmd->add_option("--out", f.out, "output file (default: stdout)"));
    opts.push_back(cmd->add_option("--quad-abs-tol", f.quad_abs_tol, "per-term quadrature tolerance"));
    opts.push_back(cmd->add_option("--sum-rel-tol", f.sum_rel_tol, "Matsubara sum truncation tolerance"));
    opts.push_back(cmd->add_option("--max-terms", f.max_terms, "Matsubara term cap"));
    opts.push_back(cmd->add_option("--energy-rel-tol", f.energy_rel_tol, "E(a) integral tolerance"));
}

RunConfig build_config(const std::string& command, const Flags& f, const std::vector<CLI::Option*>& opts) {
    auto given = [&](const char* name) {
        for (auto* o : opts) {
            if (o->check_lname(name + 2) && o->count() > 0) return true;
        }
        return false;
    };
    std::vector<ConfigLayer> layers;
    if (given("--config")) layers.push_back(load_config_layer(f.config));
    ConfigLayer cli;
    if (given("--mat1")) cli.mat1 = f.mat1;
    if (given("--mat2")) cli.mat2 = f.mat2;
    if (given("--a")) cli.a = f.a;
    if (given("--t")) cli.T = f.t;
    if (given("--include-conductivity")) cli.include_conductivity = f.include_conductivity;
    if (given("--include-debye")) cli.include_debye = f.include_debye;
    if (given("--out")) cli.out = f.out;
    if (given("--quad-abs-tol")) cli.quad_abs_tol = f.quad_abs_tol;
    if (given("--sum-rel-tol")) cli.sum_rel_tol = f.sum_rel_tol;
    if (given("--max-terms")) cli.max_terms = f.max_terms;
    if (given("--energy-rel-tol")) cli.energy_rel_tol = f.energy_rel_tol;
    layers.push_back(cli);
    return resolve(command, layers);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (!cfg.out) {
        std::cout << text;
        return;
    }
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file " + cfg.out->string());
    file << text;
}

void emit(const RunConfig& cfg, const Table& table) {
    std::ostringstream buf;
    write_csv(buf, table);
    emit(cfg, buf.str());
}

std::vector<double> require(const std::vector<double>& v, const char* flag) {
    if (v.empty()) throw ConfigError(std::string(flag) + " is required");
    return v;
}

double single(const std::vector<double>& v, const char* flag) {
    if (v.size() != 1) throw ConfigError(std::string(flag) + " must be a single value for this command");
    return v.front();
}

int run(const std::string& command, const RunConfig& cfg) {
    if (command == "free-energy" || command == "entropy") {
        const auto [m1, m2] = load_plates(cfg);
        const auto a = require(cfg.a, "--a");
        const auto T = require(cfg.T, "--t");
        emit(cfg, command == "free-energy" ? free_energy_table(m1.model, m2.model, a, T, cfg.numerics)
                                           : entropy_table(m1.model, m2.model, a, T, cfg.numerics));
        return kExitOk;
    }
    if (command == "nernst") {
        const auto [m1, m2] = load_plates(cfg);
        const double a = single(require(cfg.a, "--a"), "--a");
        const auto grid = cfg.T.empty() ? thermo::default_nernst_grid() : cfg.T;
        const auto v = thermo::nernst_scan(lifshitz::PlateSystem(m1.model, m2.model, a), grid, cfg.numerics);
        emit(cfg, format_nernst(v, a));
        return kExitOk;
    }
    if (command == "transition") {
        if (!cfg.toggles.include_conductivity) throw ConfigError("transition needs conductivity enabled");
        const auto [m1, m2] = load_plates(cfg);
        const auto* second = std::get_if<materials::ConductiveDielectric>(&m2.model);
        if (!second) throw ConfigError("transition: --mat2 must be a conductive material");
        const double a = single(require(cfg.a, "--a"), "--a");
        const double T = single(require(cfg.T, "--t"), "--t");
        emit(cfg, format_transition(transition(m1.model, *second, a, T, cfg.numerics), a, T));
        return kExitOk;
    }
    if (command == "fig4b") {
        const auto [m1, m2] = load_plates(cfg);
        const auto grid = cfg.T.empty() ? default_fig4b_grid() : cfg.T;
        emit(cfg, fig4b_table(fig4b(m1.model, grid, cfg.numerics)));
        return kExitOk;
    }
    if (command == "verify") {
        bool all = true;
        std::string text;
        const auto results = run_acceptance([&](const CriterionResult& r) {
            if (!cfg.out) std::cout << format_result(r) << std::endl;
            text += format_result(r) + "\n";
            all = all && r.passed;
        });
        if (cfg.out) emit(cfg, text);
        return all ? kExitOk : kExitFailure;
    }
    throw ConfigError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lifshitz thermal Casimir free energy between parallel plates"};
    app.require_subcommand(1);
    Flags flags;
    std::vector<CLI::Option*> opts;
    const char* commands[][2] = {
        {"free-energy", "F, E(a) and Delta_T F / E over an a x T grid (CSV)"},
        {"entropy", "S = -dF/dT over an a x T grid (CSV)"},
        {"nernst", "entropy scan toward T = 0 and its classification"},
        {"transition", "free energy jump when the second plate's dc conductivity switches on"},
        {"fig4b", "Delta_T F / E for identical plates at 100 nm, 500 nm, 1 um, Debye term off/on (CSV)"},
        {"verify", "run the acceptance checks"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), flags, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, build_config(command, flags, opts));
    } catch (const ConfigError& e) {
        std::cerr << "casimir: " << e.what() << '\n';
        return kExitConfig;
    } catch (const MaterialFileError& e) {
        std::cerr << "casimir: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "casimir: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConvergenceError& e) {
        std::cerr << "casimir: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::cerr << "casimir: " << e.what() << '\n';
        return kExitFailure;
    }
}
