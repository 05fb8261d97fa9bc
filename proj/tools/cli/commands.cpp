#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "casimir/asymptotics.hpp"
#include "casimir/error.hpp"
#include "casimir/specfun.hpp"
#include "casimir/units.hpp"
#include "cli/parallel.hpp"

namespace casimir::cli {
namespace {

using lifshitz::PlateSystem;

std::vector<std::pair<double, double>> product(const std::vector<double>& a, const std::vector<double>& T) {
    std::vector<std::pair<double, double>> grid;
    grid.reserve(a.size() * T.size());
    for (double x : a) {
        for (double t : T) grid.emplace_back(x, t);
    }
    return grid;
}

// Static TM reflectivity at the zero Matsubara mode, T > 0.
double zero_mode_tm(const PermittivityModel& m, double T) {
    const materials::EpsValue e = materials::static_permittivity(m, T);
    if (!e.is_finite()) return 1.0;
    return asymptotics::static_reflectivity(e.value);
}

std::string line(const char* key, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-22s %.11e\n", key, v);
    return buf;
}

}  // namespace

Table free_energy_table(const PermittivityModel& m1, const PermittivityModel& m2, const std::vector<double>& a,
                        const std::vector<double>& T, const lifshitz::Options& opts) {
    const auto grid = product(a, T);
    auto rows = parallel_map(grid.size(), [&](std::size_t i) {
        const auto [sep, temp] = grid[i];
        const PlateSystem system(m1, m2, sep);
        const auto fe = lifshitz::free_energy(system, temp, opts);
        double rel = 0.0;
        if (fe.E0 != 0.0) rel = lifshitz::thermal_correction(system, temp, opts).value / fe.E0;
        return std::vector<std::string>{format_sci(sep),          format_sci(temp),
                                        format_sci(fe.F),         format_sci(fe.E0),
                                        format_sci(rel),          std::to_string(fe.l_max),
                                        fe.converged ? "true" : "false"};
    });
    return {{"a_m", "T_K", "F_J_per_m2", "E0_J_per_m2", "deltaTF_rel", "l_max", "converged"}, std::move(rows)};
}

Table entropy_table(const PermittivityModel& m1, const PermittivityModel& m2, const std::vector<double>& a,
                    const std::vector<double>& T, const lifshitz::Options& opts) {
    const auto grid = product(a, T);
    auto rows = parallel_map(grid.size(), [&](std::size_t i) {
        const auto [sep, temp] = grid[i];
        const auto p = thermo::entropy(PlateSystem(m1, m2, sep), temp, opts);
        return std::vector<std::string>{format_sci(sep), format_sci(temp), format_sci(p.S),
                                        format_sci(p.err_estimate)};
    });
    return {{"a_m", "T_K", "S_J_per_m2K", "err_estimate"}, std::move(rows)};
}

std::string format_nernst(const thermo::NernstVerdict& v, double a) {
    std::ostringstream out;
    const bool violated = v.classification == thermo::NernstVerdict::Classification::violated;
    out << "classification         " << (violated ? "violated" : "satisfied") << '\n';
    if (v.out_of_scope_model) out << "out_of_scope_model     true (" << v.note << ")\n";
    out << line("a_m", a);
    out << line("s0_extrapolated", v.limit_estimate);
    out << line("s0_uncertainty", v.uncertainty);
    out << line("s0_theory", v.limit_theory);
    out << line("relative_deviation", v.relative_deviation);
    out << "T_K,S_J_per_m2K,err_estimate\n";
    for (const auto& p : v.points) {
        out << format_sci(p.T) << ',' << format_sci(p.S) << ',' << format_sci(p.err_estimate) << '\n';
    }
    return out.str();
}

TransitionReport transition(const PermittivityModel& m1, const materials::ConductiveDielectric& m2, double a,
                            double T, const lifshitz::Options& opts) {
    const PlateSystem before(m1, m2.base(), a);
    const PlateSystem after(m1, m2, a);
    const auto results = parallel_map(2, [&](std::size_t i) {
        return lifshitz::free_energy(i == 0 ? before : after, T, opts).F;
    });

    TransitionReport r;
    r.F1 = results[0];
    r.F2 = results[1];
    r.jump_numeric = r.F2 - r.F1;
    const double R1 = zero_mode_tm(m1, T);
    const double r2 = asymptotics::static_reflectivity(m2.base().static_eps());
    r.jump_analytic = -units::zero_mode_scale(a, T) * (specfun::li3(R1) - specfun::li3(R1 * r2));
    r.agreement = r.jump_analytic != 0.0 ? std::abs(r.jump_numeric / r.jump_analytic - 1.0) : 0.0;
    r.change_vs_F1 = r.F1 != 0.0 ? r.jump_numeric / r.F1 : 0.0;
    return r;
}

std::string format_transition(const TransitionReport& r, double a, double T) {
    std::string out;
    out += line("a_m", a);
    out += line("T_K", T);
    out += line("F1_J_per_m2", r.F1);
    out += line("F2_J_per_m2", r.F2);
    out += line("jump_numeric", r.jump_numeric);
    out += line("jump_analytic", r.jump_analytic);
    out += line("relative_agreement", r.agreement);
    out += line("change_vs_F1", r.change_vs_F1);
    return out;
}

std::vector<Fig4bRow> fig4b(const PermittivityModel& model, const std::vector<double>& T,
                            const lifshitz::Options& opts) {
    auto variant = [&](bool debye) {
        if (const auto* np = std::get_if<materials::NinhamParsegianModel>(&model)) {
            return PermittivityModel(np->with_debye(debye));
        }
        return model;
    };
    const PermittivityModel off = variant(false);
    const PermittivityModel on = variant(true);

    // E(a) is shared by every temperature of a column.
    const auto energies = parallel_map(6, [&](std::size_t c) {
        const auto& m = c % 2 ? on : off;
        return lifshitz::zero_temperature_energy(PlateSystem(m, m, kFig4bSeparations[c / 2]), opts);
    });
    for (double E : energies) {
        if (E == 0.0) throw DomainError("fig4b: E(a) = 0, relative correction undefined");
    }

    const std::size_t cells = T.size() * 6;
    const auto values = parallel_map(cells, [&](std::size_t i) {
        const std::size_t c = i % 6;
        const auto& m = c % 2 ? on : off;
        const PlateSystem system(m, m, kFig4bSeparations[c / 2]);
        return lifshitz::thermal_correction(system, T[i / 6], opts).value / energies[c];
    });

    std::vector<Fig4bRow> rows(T.size());
    for (std::size_t r = 0; r < T.size(); ++r) {
        rows[r].T = T[r];
        for (std::size_t c = 0; c < 6; ++c) rows[r].rel[c] = values[r * 6 + c];
    }
    return rows;
}

Table fig4b_table(const std::vector<Fig4bRow>& rows) {
    Table t;
    t.header = {"T_K",
                "rel_a100nm_debye_off", "rel_a100nm_debye_on",
                "rel_a500nm_debye_off", "rel_a500nm_debye_on",
                "rel_a1um_debye_off",   "rel_a1um_debye_on"};
    for (const auto& r : rows) {
        std::vector<std::string> cells{format_sci(r.T)};
        for (double v : r.rel) cells.push_back(format_sci(v));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

std::vector<double> default_fig4b_grid() {
    std::vector<double> T;
    for (int k = 1; k <= 300; ++k) T.push_back(k);
    return T;
}

}  // namespace casimir::cli
