#include "casimir/thermo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <optional>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/specfun.hpp"

namespace casimir::thermo {
namespace {

using lifshitz::PlateSystem;
using materials::ConductiveDielectric;
using materials::ConductivityForm;
using materials::EpsValue;
using materials::PermittivityModel;

struct ZeroModeReflectivity {
    double with_conduction;
    double without_conduction;
};

// Static TM reflectivity of a plate with and without its dc conductivity.
// Empty for models outside the dielectric Nernst analysis.
std::optional<ZeroModeReflectivity> zero_mode_reflectivity(const PermittivityModel& model) {
    if (std::holds_alternative<materials::IdealMetal>(model)) return std::nullopt;
    if (const auto* c = std::get_if<ConductiveDielectric>(&model)) {
        if (c->law().form() == ConductivityForm::constant) return std::nullopt;
        const double r = asymptotics::static_reflectivity(c->base().static_eps());
        return ZeroModeReflectivity{1.0, r};
    }
    const EpsValue e = materials::static_permittivity(model, 0.0);
    const double r = asymptotics::static_reflectivity(e.value);
    return ZeroModeReflectivity{r, r};
}

// Value at T = 0 of the parabola through (t[i], s[i]), and the weights used.
double parabola_at_zero(const std::array<double, 3>& t, const std::array<double, 3>& s, std::array<double, 3>& w) {
    w[0] = t[1] * t[2] / ((t[0] - t[1]) * (t[0] - t[2]));
    w[1] = t[0] * t[2] / ((t[1] - t[0]) * (t[1] - t[2]));
    w[2] = t[0] * t[1] / ((t[2] - t[0]) * (t[2] - t[1]));
    return w[0] * s[0] + w[1] * s[1] + w[2] * s[2];
}

double entropy_scale(double a) { return constants::k_B / (16.0 * constants::pi * a * a); }

}  // namespace

EntropyPoint entropy_at_step(const PlateSystem& system, double T, double h, const lifshitz::Options& opts) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("entropy: temperature must be finite and > 0");
    if (!(h > 0.0) || !(h < 0.5 * T)) throw DomainError("entropy: step must lie in (0, T/2)");

    auto F = [&](double t) { return lifshitz::matsubara_free_energy(system, t, opts).F; };
    const double f_hi = F(T + h);
    const double f_lo = F(T - h);
    const double d_h = (f_hi - f_lo) / (2.0 * h);
    const double d_half = (F(T + 0.5 * h) - F(T - 0.5 * h)) / h;
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(f_hi), std::abs(f_lo)) / h;

    EntropyPoint p;
    p.T = T;
    p.step_used = h;
    p.S = -(4.0 * d_half - d_h) / 3.0;
    p.err_estimate = std::max(std::abs(d_half - d_h) / 3.0, rounding);
    return p;
}

EntropyPoint entropy(const PlateSystem& system, double T, const lifshitz::Options& opts) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("entropy: temperature must be finite and > 0");
    const double h = std::min(std::max(1e-3 * T, 1e-3), 0.49 * T);
    return entropy_at_step(system, T, h, opts);
}

std::vector<double> geometric_grid(double high, double low, int count) {
    if (!(high > low) || !(low > 0.0) || count < 2) {
        throw DomainError("geometric_grid: need high > low > 0 and count >= 2");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    const double ratio = std::log(low / high) / (count - 1);
    for (int i = 0; i < count; ++i) grid.push_back(high * std::exp(ratio * i));
    grid.back() = low;
    return grid;
}

std::vector<double> default_nernst_grid() { return geometric_grid(300.0, 10.0, 8); }

double entropy_limit_theory(const PlateSystem& system) {
    const auto r1 = zero_mode_reflectivity(system.first());
    const auto r2 = zero_mode_reflectivity(system.second());
    if (!r1 || !r2) return 0.0;
    const double with = r1->with_conduction * r2->with_conduction;
    const double without = r1->without_conduction * r2->without_conduction;
    if (with == without) return 0.0;
    return entropy_scale(system.separation()) * (specfun::li3(with) - specfun::li3(without));
}

NernstVerdict nernst_scan(const PlateSystem& system, const std::vector<double>& T_grid, const lifshitz::Options& opts) {
    if (T_grid.size() < 6) throw DomainError("nernst_scan: need at least 6 grid temperatures");
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        if (!(T_grid[i] > 0.0)) throw DomainError("nernst_scan: temperatures must be > 0");
        if (i > 0 && !(T_grid[i] < T_grid[i - 1])) {
            throw DomainError("nernst_scan: temperature grid must be strictly decreasing");
        }
    }

    NernstVerdict v;
    v.T_grid = T_grid;
    v.out_of_scope_model = !zero_mode_reflectivity(system.first()) || !zero_mode_reflectivity(system.second());
    if (v.out_of_scope_model) {
        v.note = "model outside the dielectric Nernst analysis (ideal metal or metallic conduction)";
    }

    std::vector<std::future<EntropyPoint>> jobs;
    jobs.reserve(T_grid.size());
    for (double T : T_grid) {
        jobs.push_back(std::async(std::launch::async, [&system, &opts, T] { return entropy(system, T, opts); }));
    }
    for (auto& j : jobs) v.points.push_back(j.get());

    const std::size_t n = v.points.size();
    auto window = [&](std::size_t first, std::array<double, 3>& w) {
        std::array<double, 3> t{};
        std::array<double, 3> s{};
        for (std::size_t k = 0; k < 3; ++k) {
            t[k] = v.points[first + k].T;
            s[k] = v.points[first + k].S;
        }
        return parabola_at_zero(t, s, w);
    };
    std::array<double, 3> w{};
    std::array<double, 3> w_shift{};
    v.limit_estimate = window(n - 3, w);
    const double shifted = window(n - 4, w_shift);
    double propagated = 0.0;
    for (std::size_t k = 0; k < 3; ++k) propagated += std::abs(w[k]) * v.points[n - 3 + k].err_estimate;
    const double shift = v.limit_estimate - shifted;
    v.uncertainty = std::sqrt(shift * shift + propagated * propagated);

    v.limit_theory = entropy_limit_theory(system);
    v.classification = v.limit_estimate > kViolationSigma * v.uncertainty ? NernstVerdict::Classification::violated
                                                                          : NernstVerdict::Classification::satisfied;
    const double scale = v.limit_theory != 0.0 ? std::abs(v.limit_theory) : entropy_scale(system.separation());
    v.relative_deviation = std::abs(v.limit_estimate - v.limit_theory) / scale;
    return v;
}

double relative_thermal_correction(const PlateSystem& system, double T, const lifshitz::Options& opts) {
    if (!(T >= 0.0)) throw DomainError("relative_thermal_correction: temperature must be >= 0");
    const double E = lifshitz::zero_temperature_energy(system, opts);
    if (E == 0.0) throw DomainError("relative_thermal_correction: E(a) = 0, ratio undefined");
    if (T == 0.0) return 0.0;
    return lifshitz::thermal_correction(system, T, opts).value / E;
}

}  // namespace casimir::thermo
