#pragma once

#include <optional>

#include "casimir/materials.hpp"

namespace casimir::asymptotics {

/// Coefficients of the low-temperature expansion for two identical plates
/// described by an oscillator model.
struct LowTCoefficients {
    double b = 0.0;             // sum_j g_j gamma_j omega_c / omega_j^4
    double r0 = 0.0;            // (eps0 - 1) / (eps0 + 1)
    std::optional<double> C4;   // tau^4 coefficient; only for undamped models
    double eps0 = 1.0;          // static permittivity
};

struct SeriesResult {
    double value = 0.0;
    int order = 0;                  // highest power of tau included
    double validity_tau_max = 0.3;  // series trusted for tau <= this
};

inline constexpr double kSeriesTauMax = 0.3;

LowTCoefficients coefficients(const materials::OscillatorModel& model, double a);

/// (eps0 - 1) / (eps0 + 1); 1 for eps0 = +inf.
double static_reflectivity(double eps0);

/// Delta_T F = F - E from the low-temperature series, J/m^2. tau <= 0.3.
SeriesResult thermal_correction_lowT(const LowTCoefficients& k, double a, double T);

/// F = E + Delta_T F from the low-temperature series, J/m^2. tau <= 0.3.
SeriesResult free_energy_lowT(const LowTCoefficients& k, double E, double a, double T);

/// S = -dF/dT from the low-temperature series, J/(m^2 K). tau <= 0.3.
SeriesResult entropy_lowT(const LowTCoefficients& k, double a, double T);

/// T -> 0 entropy once dc conductivity is added to a dielectric with static
/// permittivity eps0: k_B / (16 pi a^2) [zeta(3) - Li3(r0^2)], J/(m^2 K).
double nernst_violation_constant(double eps0, double a);

/// F2 - F1 for a metal plate facing a semiconductor whose conductivity is
/// switched on (F2) versus neglected (F1): -(k_B T / 16 pi a^2)[zeta(3) - Li3(r0)].
double transition_jump(double eps0, double a, double T);

/// Plate pairs with a closed-form classical (tau >> 1) limit.
struct HighTSystem {
    enum class Kind { metal_metal, metal_dielectric, dielectric_dielectric };
    Kind kind = Kind::metal_metal;
    double eps0 = 1.0;        // metal_dielectric, dielectric_dielectric
    double eps0_other = 1.0;  // dielectric_dielectric

    static HighTSystem metal_metal() { return {Kind::metal_metal, 1.0, 1.0}; }
    static HighTSystem metal_dielectric(double e) { return {Kind::metal_dielectric, e, 1.0}; }
    static HighTSystem dielectric_dielectric(double e1, double e2) { return {Kind::dielectric_dielectric, e1, e2}; }
};

/// Zero-Matsubara-term free energy, J/m^2.
double high_T_free_energy(const HighTSystem& system, double a, double T);

/// Shift of the thermal correction from a Debye term raising the static
/// permittivity from eps0_ei to eps0_p: -(k_B T/16 pi a^2)[Li3(r_p^2) - Li3(r_ei^2)].
/// Throws DomainError unless eps0_p >= eps0_ei >= 1.
double orientation_correction(double eps0_ei, double eps0_p, double a, double T);

}  // namespace casimir::asymptotics
