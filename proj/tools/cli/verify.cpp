#include "cli/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"
#include "cli/commands.hpp"

namespace casimir::cli {
namespace reference {

using materials::ConductivityLaw;
using materials::Oscillator;

namespace {
constexpr double ev = constants::ev_to_radps;
constexpr double kSiOmega = 6.6e15;
constexpr double kSiStrength = 4.643496e32;  // (11.66 - 1) omega^2
}  // namespace

materials::NinhamParsegianModel mica() {
    return materials::NinhamParsegianModel({157.93 * ev * ev, 10.33 * ev, 3.12e-3 * ev * ev, 3.95e-2 * ev, 0.4, 5e-8},
                                           true);
}

materials::OscillatorModel mica_electronic() { return materials::OscillatorModel({Oscillator(157.93 * ev * ev, 10.33 * ev)}); }

materials::OscillatorModel mica_oscillator() {
    return materials::OscillatorModel(
        {Oscillator(157.93 * ev * ev, 10.33 * ev), Oscillator(3.12e-3 * ev * ev, 3.95e-2 * ev)});
}

materials::OscillatorModel si() { return materials::OscillatorModel({Oscillator(kSiStrength, kSiOmega)}); }

materials::ConductiveDielectric si_conductive() {
    return {si(), ConductivityLaw::bandgap_ev(materials::resistivity_to_sigma(9.0e-5 * 1e-2), 1.12)};
}

materials::ConductiveDielectric si_doped_metallic() {
    return {si(), ConductivityLaw::constant(materials::resistivity_to_sigma(1e-2 * 1e-2))};
}

}  // namespace reference

namespace {

using lifshitz::PlateSystem;
using materials::PermittivityModel;

// Frozen from arbitrary-precision evaluations.
constexpr double kMinusLi3R0sq_eps2 = -0.112707652598745;
constexpr double kMinusLi3R0sq_eps445 = -0.423690948846025;
constexpr double kMinusLi3R0sq_eps1166 = -0.791526560345246;
constexpr double kZeta3MinusLi3R0sq_si = 0.410530342814348;
constexpr double kLi3_08421 = 0.967941899161721;

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double tau_to_T(double tau, double a) {
    return tau * constants::hbar * constants::c / (4.0 * constants::pi * constants::k_B * a);
}

double rel_correction(const PermittivityModel& m, double a, double T) {
    return thermo::relative_thermal_correction(PlateSystem(m, m, a), T);
}

CriterionResult polylog_identity() {
    CriterionResult r{1, "l=0 polylog identity", true, "", 0, 1.0};
    const std::pair<double, double> cases[] = {
        {2.0, kMinusLi3R0sq_eps2}, {4.45, kMinusLi3R0sq_eps445}, {11.66, kMinusLi3R0sq_eps1166}};
    double worst = 0.0;
    for (const auto& [eps0, expected] : cases) {
        const PermittivityModel m = materials::OscillatorModel({materials::Oscillator((eps0 - 1.0) * 1e32, 1e16)});
        const double a = 1e-6;
        const auto t = lifshitz::term_integral(PlateSystem(m, m, a), lifshitz::ThermalState(300.0, a), 0);
        worst = std::max(worst, std::abs(t.integral - expected));
    }
    r.passed = worst <= 1e-9;
    r.detail = fmt("max |I0 + Li3(r0^2)| = %.2e (bar 1e-9)", worst);
    return r;
}

CriterionResult ideal_metal_limits() {
    CriterionResult r{2, "ideal-metal limits", true, "", 0, 5.0};
    const PermittivityModel m = materials::IdealMetal{};
    double worst_E = 0.0;
    for (double a : {100e-9, 1e-6, 10e-6}) {
        const double E = lifshitz::zero_temperature_energy(PlateSystem(m, m, a));
        const double exact = -constants::pi * constants::pi * constants::hbar * constants::c / (720.0 * a * a * a);
        worst_E = std::max(worst_E, std::abs(E / exact - 1.0));
    }
    const double a = 5e-6;
    const double T = 300.0;
    const double F = lifshitz::free_energy(PlateSystem(m, m, a), T).F;
    const double classical = -constants::zeta3 * constants::k_B * T / (8.0 * constants::pi * a * a);
    const double dev = std::abs(F / classical - 1.0);
    r.passed = worst_E <= 1e-6 && dev <= 0.01;
    r.detail = fmt("E rel err %.2e (bar 1e-6); high-T F rel dev %.3e (bar 1e-2)", worst_E, dev);
    return r;
}

CriterionResult low_t_series() {
    CriterionResult r{3, "low-T series O(tau^5) residual", true, "", 0, 30.0};
    const auto model = reference::mica_electronic();
    const double a = 1e-6;
    const PlateSystem system(model, model, a);
    const auto k = asymptotics::coefficients(model, a);
    const double E = lifshitz::zero_temperature_energy(system);
    double residual[2];
    const double taus[2] = {0.1, 0.05};
    for (int i = 0; i < 2; ++i) {
        const double T = tau_to_T(taus[i], a);
        const double F = lifshitz::matsubara_free_energy(system, T).F;
        residual[i] = std::abs(F - asymptotics::free_energy_lowT(k, E, a, T).value);
    }
    const double ratio = residual[0] / residual[1];
    r.passed = ratio >= 24.0;
    r.detail = fmt("residual(0.1)/residual(0.05) = %.2f (bar >= 24)", ratio);
    return r;
}

std::vector<double> nernst_grid() { return thermo::geometric_grid(300.0, 1.0, 12); }

CriterionResult nernst_satisfied() {
    CriterionResult r{4, "Nernst satisfied, oscillator mica", true, "", 0, 60.0};
    const PermittivityModel m = reference::mica_oscillator();
    const auto v = thermo::nernst_scan(PlateSystem(m, m, 1e-6), nernst_grid());
    r.passed = std::abs(v.limit_estimate) <= v.uncertainty &&
               v.classification == thermo::NernstVerdict::Classification::satisfied;
    r.detail = fmt("S(a,0) = %.3e +- %.3e J/(m^2 K)", v.limit_estimate, v.uncertainty);
    return r;
}

CriterionResult nernst_violated() {
    CriterionResult r{5, "Nernst violated, conductive Si", true, "", 0, 60.0};
    const double a = 1e-6;
    const PermittivityModel m = reference::si_conductive();
    const auto v = thermo::nernst_scan(PlateSystem(m, m, a), nernst_grid());
    const double expected = constants::k_B / (16.0 * constants::pi * a * a) * kZeta3MinusLi3R0sq_si;
    const double dev = std::abs(v.limit_estimate / expected - 1.0);
    r.passed = dev <= 0.01 && v.classification == thermo::NernstVerdict::Classification::violated;
    r.detail = fmt("S(a,0) = %.6e vs %.6e, rel dev %.2e (bar 1e-2)", v.limit_estimate, expected, dev);
    return r;
}

CriterionResult mica_corrections() {
    CriterionResult r{6, "mica relative thermal corrections", true, "", 0, 60.0};
    const double a = 500e-9;
    const double e = rel_correction(reference::mica_electronic(), a, 300.0);
    const double ei = rel_correction(reference::mica().with_debye(false), a, 300.0);
    r.passed = std::abs(e - 0.0125) <= 0.003 && std::abs(ei - 0.135) <= 0.015;
    r.detail = fmt("electronic %.3f%% (1.25 +- 0.3), electronic+ionic %.2f%% (13.5 +- 1.5)", 100 * e, 100 * ei);
    return r;
}

CriterionResult si_correction() {
    CriterionResult r{7, "Si relative thermal correction", true, "", 0, 0.0};
    const double rel = rel_correction(reference::si(), 500e-9, 300.0);
    r.passed = std::abs(rel - 0.0145) <= 0.003;
    r.detail = fmt("%.3f%% (1.45 +- 0.3)", 100 * rel);
    return r;
}

CriterionResult transition_jump() {
    CriterionResult r{8, "insulator-metal transition jump", true, "", 0, 0.0};
    const double a = 5e-6;
    const double T = 300.0;
    const auto rep = transition(materials::IdealMetal{}, reference::si_doped_metallic(), a, T);
    const double expected = -units::zero_mode_scale(a, T) * (constants::zeta3 - kLi3_08421);
    const double dev = std::abs(rep.jump_numeric / expected - 1.0);
    r.passed = dev <= 0.01;
    r.detail = fmt("F2 - F1 = %.5e vs %.5e J/m^2, rel dev %.2e (bar 1e-2); change vs F1 %.1f%%", rep.jump_numeric,
                   expected, dev, 100 * rep.change_vs_F1);
    return r;
}

CriterionResult debye_deltas() {
    CriterionResult r{9, "Debye term increase", true, "", 0, 120.0};
    const auto rows = fig4b(reference::mica(), {300.0});
    const auto& rel = rows.front().rel;
    const double d100 = 100 * (rel[1] - rel[0]);
    const double d1000 = 100 * (rel[5] - rel[4]);
    r.passed = std::abs(d100 - 1.0) <= 0.5 && std::abs(d1000 - 8.0) <= 0.5;
    r.detail = fmt("on - off: %.2f pp at 100 nm (1 +- 0.5), %.2f pp at 1 um (8 +- 0.5)", d100, d1000);
    return r;
}

CriterionResult matsubara_constant() {
    CriterionResult r{10, "first Matsubara frequency at 300 K", true, "", 0, 0.0};
    const double xi1 = units::matsubara_frequency(300.0, 1);
    const double dev = std::abs(xi1 / 2.47e14 - 1.0);
    r.passed = dev <= 0.005;
    r.detail = fmt("xi_1 = %.4e rad/s, rel dev %.2e (bar 5e-3)", xi1, dev);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& report) {
    using Check = CriterionResult (*)();
    static constexpr Check checks[] = {polylog_identity, ideal_metal_limits, low_t_series,     nernst_satisfied,
                                       nernst_violated,  mica_corrections,   si_correction,    transition_jump,
                                       debye_deltas,     matsubara_constant};
    static constexpr const char* names[] = {"l=0 polylog identity", "ideal-metal limits",
                                            "low-T series O(tau^5) residual", "Nernst satisfied, oscillator mica",
                                            "Nernst violated, conductive Si", "mica relative thermal corrections",
                                            "Si relative thermal correction", "insulator-metal transition jump",
                                            "Debye term increase", "first Matsubara frequency at 300 K"};
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < std::size(checks); ++i) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = checks[i]();
        } catch (const std::exception& e) {
            r = {static_cast<int>(i + 1), names[i], false, std::string("error: ") + e.what(), 0, 0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.budget_seconds > 0.0 && r.seconds > r.budget_seconds) {
            r.passed = false;
            r.detail += fmt("; runtime %.1f s over budget %.0f s", r.seconds, r.budget_seconds);
        }
        if (report) report(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    return fmt("%s [%d] %s: %s (%.2f s)", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
               r.seconds);
}

}  // namespace casimir::cli
