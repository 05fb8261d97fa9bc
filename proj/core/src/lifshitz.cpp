#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/specfun.hpp"
#include "casimir/units.hpp"

namespace casimir::lifshitz {
namespace {

using materials::eval_eps;

// The integrand carries e^-y with y = zeta + u; beyond u = 60 the remainder is
// below e^-60 of the peak.
constexpr double kUpperU = 60.0;
// Outer cut of the zero-temperature integral: int_Z^inf F(zeta) dzeta is
// bounded by ~2 (Z + 2) e^-Z for any eps >= 1.
constexpr double kZetaCut = 64.0;

class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

bool is_null_reflector(const EpsValue& eps) { return eps.is_finite() && eps.value == 1.0; }

TermResult integrate_at(const EpsValue& e1, const EpsValue& e2, double zeta, const Options& opts) {
    TermResult out;
    if (is_null_reflector(e1) || is_null_reflector(e2)) return out;

    auto integrand = [&](double u) {
        const double y = zeta + u;
        const Reflection r1 = reflection(e1, zeta, y);
        const Reflection r2 = reflection(e2, zeta, y);
        const double ey = std::exp(-y);
        return y * (std::log1p(-r1.tm * r2.tm * ey) + std::log1p(-r1.te * r2.te * ey));
    };
    quadrature::Options q;
    q.abs_tol = opts.quad_abs_tol * std::min(1.0, (1.0 + zeta) * std::exp(-zeta));
    const quadrature::Result r = quadrature::integrate(integrand, 0.0, kUpperU, q);
    out.integral = std::min(r.value, 0.0);
    out.abs_err_estimate = r.abs_error;
    out.converged = r.converged;
    return out;
}

void check_separation(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("separation must be finite and > 0");
}

void check_temperature(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("temperature must be finite and > 0");
}

MatsubaraSum sum_terms(const PermittivityModel& m1, const PermittivityModel& m2, double a, double T,
                       const Options& opts) {
    check_separation(a);
    check_temperature(T);
    const ThermalState state(T, a);
    MatsubaraSum out;
    out.tau = state.tau();

    const double tau = state.tau();
    const double l_min_d = std::max(10.0, std::ceil(30.0 / tau));
    if (l_min_d > static_cast<double>(opts.max_terms)) {
        throw ConvergenceError("Matsubara sum needs more than " + std::to_string(opts.max_terms) +
                               " terms (tau = " + std::to_string(tau) + ")");
    }
    const long l_min = static_cast<long>(l_min_d);
    const double tail_factor = 1.0 / -std::expm1(-tau);

    KahanSum sum;
    int small_run = 0;
    for (long l = 0;; ++l) {
        if (l > opts.max_terms) {
            throw ConvergenceError("Matsubara sum did not converge within " + std::to_string(opts.max_terms) +
                                   " terms");
        }
        const double xi = state.xi(l);
        TermResult t = integrate_at(eval_eps(m1, xi, T), eval_eps(m2, xi, T), state.zeta(l), opts);
        t.l = l;
        sum.add(l == 0 ? 0.5 * t.integral : t.integral);
        out.converged = out.converged && t.converged;
        out.terms.push_back(t);

        const bool small = std::abs(t.integral) * tail_factor <= opts.sum_rel_tol * std::abs(sum.value());
        small_run = small ? small_run + 1 : 0;
        if (l >= l_min && small_run >= 3) {
            out.l_max = l;
            break;
        }
    }
    out.F = constants::k_B * T / (8.0 * constants::pi * a * a) * sum.value();
    return out;
}

std::vector<double> energy_breakpoints(const PermittivityModel& m1, const PermittivityModel& m2, double a) {
    std::vector<double> points = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, kZetaCut};
    const double omega_c = units::characteristic_frequency(a);
    for (const auto* m : {&m1, &m2}) {
        for (double w : materials::feature_frequencies(*m)) {
            const double z = w / omega_c;
            if (z > 0.0 && z < kZetaCut) points.push_back(z);
        }
    }
    std::sort(points.begin(), points.end());
    std::vector<double> unique;
    for (double p : points) {
        if (unique.empty() || p > unique.back() * (1.0 + 1e-3)) unique.push_back(p);
    }
    return unique;
}

double energy_impl(const PermittivityModel& m1, const PermittivityModel& m2, double a, const Options& opts) {
    check_separation(a);
    const double omega_c = units::characteristic_frequency(a);
    if (std::holds_alternative<materials::Vacuum>(m1) || std::holds_alternative<materials::Vacuum>(m2)) return 0.0;

    bool inner_ok = true;
    auto outer = [&](double zeta) {
        const double xi = zeta * omega_c;
        const TermResult t = integrate_at(eval_eps(m1, xi, 0.0), eval_eps(m2, xi, 0.0), zeta, opts);
        inner_ok = inner_ok && t.converged;
        return t.integral;
    };
    const std::vector<double> points = energy_breakpoints(m1, m2, a);
    quadrature::Options q;
    q.rel_tol = opts.energy_rel_tol;
    q.abs_tol = 1e-18;
    const quadrature::Result r = quadrature::integrate_piecewise(outer, points, q);
    if (!r.converged || !inner_ok) {
        throw ConvergenceError("zero-temperature energy integral did not converge (estimated error " +
                               std::to_string(r.abs_error) + ")");
    }
    return units::energy_scale(a) * r.value;
}

// Closed-form Delta_T F for identical plates at low tau, when one applies.
bool series_correction(const PlateSystem& system, double T, ThermalCorrection& out) {
    if (!system.identical_plates()) return false;
    const double a = system.separation();
    const auto& model = system.first();
    if (std::holds_alternative<materials::Vacuum>(model)) {
        out.value = 0.0;
        out.note = "vacuum plate";
        return true;
    }
    if (const auto* m = std::get_if<materials::OscillatorModel>(&model)) {
        out.value = asymptotics::thermal_correction_lowT(asymptotics::coefficients(*m, a), a, T).value;
        out.note = "low-temperature series";
        return true;
    }
    if (const auto* np = std::get_if<materials::NinhamParsegianModel>(&model)) {
        const auto k = asymptotics::coefficients(np->oscillator_part(), a);
        out.value = asymptotics::thermal_correction_lowT(k, a, T).value;
        out.note = "low-temperature series";
        if (np->include_debye()) {
            const double eps_ei = np->static_eps_ei();
            out.value += asymptotics::orientation_correction(eps_ei, eps_ei + np->params().debye_amplitude, a, T);
            out.note += " + orientation polarization zero-mode shift";
        }
        return true;
    }
    if (const auto* c = std::get_if<materials::ConductiveDielectric>(&model)) {
        if (c->law().form() == materials::ConductivityForm::constant) return false;
        const auto k = asymptotics::coefficients(c->base(), a);
        out.value = asymptotics::thermal_correction_lowT(k, a, T).value -
                    units::zero_mode_scale(a, T) * (constants::zeta3 - specfun::li3(k.r0 * k.r0));
        out.note = "low-temperature series + dc-conduction zero-mode shift";
        return true;
    }
    return false;
}

}  // namespace

PlateSystem::PlateSystem(PermittivityModel first, PermittivityModel second, double separation)
    : first_(std::move(first)), second_(std::move(second)), separation_(separation) {
    if (!(separation >= kMinSeparation && separation <= kMaxSeparation)) {
        throw DomainError("separation " + std::to_string(separation) + " m outside [1e-9, 1e-4] m");
    }
}

ThermalState::ThermalState(double T, double a)
    : T_(T), tau_(units::dimensionless_temperature(a, T)), omega_c_(units::characteristic_frequency(a)) {
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("temperature must be finite and >= 0");
    check_separation(a);
}

double ThermalState::xi(long l) const { return units::matsubara_frequency(T_, l); }

Reflection reflection(EpsValue eps, double zeta, double y) {
    if (!(zeta >= 0.0) || !(y >= zeta)) throw DomainError("reflection: need y >= zeta >= 0");
    switch (eps.kind) {
        case EpsValue::Kind::perfect_conductor:
            return {1.0, 1.0};
        case EpsValue::Kind::dc_conduction:
            return zeta == 0.0 ? Reflection{1.0, 0.0} : Reflection{1.0, 1.0};
        case EpsValue::Kind::finite:
            break;
    }
    const double e = eps.value;
    if (!(e >= 1.0)) throw DomainError("reflection: permittivity must be >= 1");
    if (zeta == 0.0) return {(e - 1.0) / (e + 1.0), 0.0};
    const double z2 = zeta * zeta;
    const double k = std::sqrt(y * y + z2 * (e - 1.0));
    // Numerators rewritten to avoid cancellation for eps close to 1.
    const double tm_den = e * y + k;
    const double tm = (e - 1.0) * ((e + 1.0) * y * y - z2) / (tm_den * tm_den);
    const double te_den = k + y;
    const double te = z2 * (e - 1.0) / (te_den * te_den);
    return {tm, te};
}

TermResult term_integral(const PlateSystem& system, const ThermalState& state, long l, const Options& opts) {
    if (l < 0) throw DomainError("term_integral: Matsubara index must be >= 0");
    const double xi = state.xi(l);
    const double T = state.temperature();
    TermResult t = integrate_at(eval_eps(system.first(), xi, T), eval_eps(system.second(), xi, T), state.zeta(l), opts);
    t.l = l;
    return t;
}

TermResult frequency_integral(const PlateSystem& system, double zeta, double T, const Options& opts) {
    if (!(zeta >= 0.0)) throw DomainError("frequency_integral: zeta must be >= 0");
    const double xi = zeta * units::characteristic_frequency(system.separation());
    return integrate_at(eval_eps(system.first(), xi, T), eval_eps(system.second(), xi, T), zeta, opts);
}

MatsubaraSum matsubara_free_energy(const PlateSystem& system, double T, const Options& opts) {
    return sum_terms(system.first(), system.second(), system.separation(), T, opts);
}

FreeEnergyResult free_energy(const PlateSystem& system, double T, const Options& opts) {
    MatsubaraSum sum = matsubara_free_energy(system, T, opts);
    FreeEnergyResult out;
    out.F = sum.F;
    out.E0 = zero_temperature_energy(system, opts);
    out.deltaTF = out.F - out.E0;
    out.tau = sum.tau;
    out.terms = std::move(sum.terms);
    out.l_max = sum.l_max;
    out.converged = sum.converged;
    return out;
}

double zero_temperature_energy(const PlateSystem& system, const Options& opts) {
    return energy_impl(system.first(), system.second(), system.separation(), opts);
}

ThermalCorrection thermal_correction(const PlateSystem& system, double T, const Options& opts) {
    check_temperature(T);
    ThermalCorrection out;
    out.tau = units::dimensionless_temperature(system.separation(), T);
    if (out.tau < kSeriesSwitchTau && series_correction(system, T, out)) {
        out.source = ThermalCorrection::Source::low_temperature_series;
        return out;
    }
    const FreeEnergyResult fe = free_energy(system, T, opts);
    out.value = fe.deltaTF;
    out.source = ThermalCorrection::Source::numeric_difference;
    out.note = out.tau < kSeriesSwitchTau ? "numeric difference; no closed-form series for this plate pair"
                                          : "numeric difference";
    return out;
}

double pressure(const PlateSystem& system, double T, const Options& opts) {
    const double a = system.separation();
    const double h = 1e-4 * a;
    auto F = [&](double sep) { return sum_terms(system.first(), system.second(), sep, T, opts).F; };
    const double d1 = (F(a + h) - F(a - h)) / (2.0 * h);
    const double d2 = (F(a + 0.5 * h) - F(a - 0.5 * h)) / h;
    return -(4.0 * d2 - d1) / 3.0;
}

}  // namespace casimir::lifshitz
