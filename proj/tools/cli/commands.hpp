#pragma once

#include <array>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/thermo.hpp"
#include "cli/csv.hpp"

namespace casimir::cli {

using materials::PermittivityModel;

/// Rows (a_m, T_K, F_J_per_m2, E0_J_per_m2, deltaTF_rel, l_max, converged)
/// over the a x T product, a outer. deltaTF_rel is 0 when E0 is 0.
Table free_energy_table(const PermittivityModel& m1, const PermittivityModel& m2, const std::vector<double>& a,
                        const std::vector<double>& T, const lifshitz::Options& opts = {});

/// Rows (a_m, T_K, S_J_per_m2K, err_estimate).
Table entropy_table(const PermittivityModel& m1, const PermittivityModel& m2, const std::vector<double>& a,
                    const std::vector<double>& T, const lifshitz::Options& opts = {});

std::string format_nernst(const thermo::NernstVerdict& v, double a);

struct TransitionReport {
    double F1 = 0.0;  // second plate without dc conductivity, J/m^2
    double F2 = 0.0;  // second plate with dc conductivity, J/m^2
    double jump_numeric = 0.0;
    double jump_analytic = 0.0;
    double agreement = 0.0;        // |numeric / analytic - 1|
    double change_vs_F1 = 0.0;     // (F2 - F1) / F1
};

/// F2 - F1 when the second plate's dc conductivity switches on, against the
/// zero-mode closed form -(k_B T / 16 pi a^2)[Li3(R1) - Li3(R1 r2)], where R1
/// is the first plate's static TM reflectivity and r2 that of the second plate
/// without conductivity.
TransitionReport transition(const PermittivityModel& m1, const materials::ConductiveDielectric& m2, double a,
                            double T, const lifshitz::Options& opts = {});

std::string format_transition(const TransitionReport& r, double a, double T);

inline constexpr std::array<double, 3> kFig4bSeparations{100e-9, 500e-9, 1e-6};

struct Fig4bRow {
    double T = 0.0;
    /// Delta_T F / E for each separation, Debye term off then on.
    std::array<double, 6> rel{};
};

/// Relative thermal correction of two identical plates of `model` for the
/// three fixed separations with the Debye term off and on.
std::vector<Fig4bRow> fig4b(const PermittivityModel& model, const std::vector<double>& T,
                            const lifshitz::Options& opts = {});

Table fig4b_table(const std::vector<Fig4bRow>& rows);

/// 1 K to 300 K in 1 K steps.
std::vector<double> default_fig4b_grid();

}  // namespace casimir::cli
