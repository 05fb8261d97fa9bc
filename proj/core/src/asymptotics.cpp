#include "casimir/asymptotics.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/specfun.hpp"
#include "casimir/units.hpp"

namespace casimir::asymptotics {
namespace {

using constants::pi;
using specfun::li2;
using specfun::li3;

double check_tau(double a, double T) {
    if (!(a > 0.0) || !(T >= 0.0)) throw DomainError("low-T series: need a > 0 and T >= 0");
    const double tau = units::dimensionless_temperature(a, T);
    if (tau > kSeriesTauMax) {
        throw DomainError("low-T series: tau = " + std::to_string(tau) + " outside validity band (<= 0.3)");
    }
    return tau;
}

// b Li2(r0^2) / (eps0^2 - 1), with the eps0 -> 1 limit taken as 0.
double damping_term(const LowTCoefficients& k) {
    if (k.r0 == 0.0 || k.b == 0.0) return 0.0;
    return k.b * li2(k.r0 * k.r0) / (k.eps0 * k.eps0 - 1.0);
}

double cubic_term(const LowTCoefficients& k) {
    return constants::zeta3 * k.r0 * k.r0 * (k.eps0 + 1.0) / (8.0 * pi * pi);
}

}  // namespace

double static_reflectivity(double eps0) {
    if (!(eps0 >= 1.0)) throw DomainError("static permittivity must be >= 1");
    if (std::isinf(eps0)) return 1.0;
    return (eps0 - 1.0) / (eps0 + 1.0);
}

LowTCoefficients coefficients(const materials::OscillatorModel& model, double a) {
    if (!(a > 0.0)) throw DomainError("coefficients: separation must be > 0");
    const double omega_c = units::characteristic_frequency(a);
    LowTCoefficients k;
    for (const auto& osc : model.oscillators()) {
        const double w2 = osc.frequency() * osc.frequency();
        k.b += osc.strength() * osc.damping() * omega_c / (w2 * w2);
    }
    k.eps0 = model.static_eps();
    k.r0 = static_reflectivity(k.eps0);
    if (model.undamped()) {
        const double s = std::sqrt(k.eps0);
        k.C4 = (s - 1.0) * (k.eps0 * k.eps0 + k.eps0 * s - 2.0) / 720.0;
    }
    return k;
}

SeriesResult thermal_correction_lowT(const LowTCoefficients& k, double a, double T) {
    const double tau = check_tau(a, T);
    const double t2 = tau * tau;
    double bracket = damping_term(k) * t2 / 3.0 + cubic_term(k) * t2 * tau;
    int order = 3;
    if (k.C4) {
        bracket -= *k.C4 * t2 * t2;
        order = 4;
    }
    return {-units::energy_scale(a) * bracket, order, kSeriesTauMax};
}

SeriesResult free_energy_lowT(const LowTCoefficients& k, double E, double a, double T) {
    SeriesResult r = thermal_correction_lowT(k, a, T);
    r.value += E;
    return r;
}

SeriesResult entropy_lowT(const LowTCoefficients& k, double a, double T) {
    const double tau = check_tau(a, T);
    double bracket = 2.0 * damping_term(k) / 3.0 + 3.0 * cubic_term(k) * tau;
    int order = 3;
    if (k.C4) {
        bracket -= 4.0 * *k.C4 * tau * tau;
        order = 4;
    }
    const double prefactor = constants::k_B * tau / (8.0 * pi * a * a);
    return {prefactor * bracket, order, kSeriesTauMax};
}

double nernst_violation_constant(double eps0, double a) {
    if (!(a > 0.0)) throw DomainError("nernst_violation_constant: separation must be > 0");
    const double r0 = static_reflectivity(eps0);
    return constants::k_B / (16.0 * pi * a * a) * (constants::zeta3 - li3(r0 * r0));
}

double transition_jump(double eps0, double a, double T) {
    if (!(a > 0.0) || !(T >= 0.0)) throw DomainError("transition_jump: need a > 0 and T >= 0");
    const double r0 = static_reflectivity(eps0);
    return -units::zero_mode_scale(a, T) * (constants::zeta3 - li3(r0));
}

double high_T_free_energy(const HighTSystem& system, double a, double T) {
    if (!(a > 0.0) || !(T >= 0.0)) throw DomainError("high_T_free_energy: need a > 0 and T >= 0");
    const double scale = units::zero_mode_scale(a, T);
    switch (system.kind) {
        case HighTSystem::Kind::metal_metal:
            return -2.0 * scale * constants::zeta3;
        case HighTSystem::Kind::metal_dielectric:
            return -scale * li3(static_reflectivity(system.eps0));
        case HighTSystem::Kind::dielectric_dielectric:
            return -scale * li3(static_reflectivity(system.eps0) * static_reflectivity(system.eps0_other));
    }
    return 0.0;
}

double orientation_correction(double eps0_ei, double eps0_p, double a, double T) {
    if (!(eps0_ei >= 1.0) || !(eps0_p >= eps0_ei)) {
        throw DomainError("orientation_correction: need eps0_p >= eps0_ei >= 1");
    }
    if (!(a > 0.0) || !(T >= 0.0)) throw DomainError("orientation_correction: need a > 0 and T >= 0");
    const double r_ei = static_reflectivity(eps0_ei);
    const double r_p = static_reflectivity(eps0_p);
    return -units::zero_mode_scale(a, T) * (li3(r_p * r_p) - li3(r_ei * r_ei));
}

}  // namespace casimir::asymptotics
