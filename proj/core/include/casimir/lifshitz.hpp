#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir::lifshitz {

using materials::EpsValue;
using materials::PermittivityModel;

/// Two thick plates facing each other across a vacuum gap of width a (m).
class PlateSystem {
public:
    static constexpr double kMinSeparation = 1e-9;
    static constexpr double kMaxSeparation = 1e-4;

    PlateSystem(PermittivityModel first, PermittivityModel second, double separation);

    const PermittivityModel& first() const { return first_; }
    const PermittivityModel& second() const { return second_; }
    double separation() const { return separation_; }

    PlateSystem with_separation(double a) const { return {first_, second_, a}; }
    PlateSystem swapped() const { return {second_, first_, separation_}; }
    bool identical_plates() const { return first_ == second_; }

private:
    PermittivityModel first_;
    PermittivityModel second_;
    double separation_;
};

/// Temperature together with the dimensionless quantities derived from it at
/// a given separation.
class ThermalState {
public:
    ThermalState(double T, double a);

    double temperature() const { return T_; }
    double tau() const { return tau_; }
    double omega_c() const { return omega_c_; }
    /// Matsubara frequency xi_l, rad/s.
    double xi(long l) const;
    /// zeta_l = xi_l / omega_c = tau l.
    double zeta(long l) const { return tau_ * static_cast<double>(l); }

private:
    double T_;
    double tau_;
    double omega_c_;
};

struct Reflection {
    double tm = 0.0;
    double te = 0.0;
};

/// TM/TE reflection coefficients at dimensionless frequency zeta and
/// dimensionless normal wavenumber y >= zeta. Throws DomainError for y < zeta
/// or a finite eps below 1.
Reflection reflection(EpsValue eps, double zeta, double y);

struct Options {
    /// Quadrature tolerance per term, scaled by the size of the integrand.
    double quad_abs_tol = 1e-13;
    /// Stop the Matsubara sum once three consecutive terms, with their
    /// geometric tail, fall below this fraction of the running sum.
    double sum_rel_tol = 1e-14;
    long max_terms = 10'000'000;
    /// Relative tolerance of the zero-temperature double integral.
    double energy_rel_tol = 1e-12;
};

struct TermResult {
    long l = 0;
    double integral = 0.0;        // dimensionless, <= 0
    double abs_err_estimate = 0.0;
    bool converged = true;
};

/// I_l = int_{zeta_l}^inf y { ln[1 - rTM1 rTM2 e^-y] + ln[1 - rTE1 rTE2 e^-y] } dy
TermResult term_integral(const PlateSystem& system, const ThermalState& state, long l, const Options& opts = {});

/// Same integral at a continuous dimensionless frequency, with each plate's
/// permittivity evaluated at xi = zeta omega_c and temperature T.
TermResult frequency_integral(const PlateSystem& system, double zeta, double T, const Options& opts = {});

/// Matsubara sum only: F = (k_B T / 8 pi a^2)(I_0 / 2 + sum_{l>=1} I_l).
struct MatsubaraSum {
    double F = 0.0;  // J/m^2
    double tau = 0.0;
    std::vector<TermResult> terms;
    long l_max = 0;
    bool converged = true;
};

MatsubaraSum matsubara_free_energy(const PlateSystem& system, double T, const Options& opts = {});

struct FreeEnergyResult {
    double F = 0.0;        // J/m^2
    double E0 = 0.0;       // zero-temperature energy, J/m^2
    double deltaTF = 0.0;  // F - E0
    double tau = 0.0;
    std::vector<TermResult> terms;
    long l_max = 0;
    bool converged = true;
};

/// Free energy per unit area. Throws DomainError for T <= 0 and
/// ConvergenceError if the sum needs more than opts.max_terms terms.
FreeEnergyResult free_energy(const PlateSystem& system, double T, const Options& opts = {});

/// E(a) = (hbar c / 32 pi^2 a^3) int_0^inf dzeta int_zeta^inf dy f(zeta, y), J/m^2.
/// Permittivities are evaluated at T = 0.
double zero_temperature_energy(const PlateSystem& system, const Options& opts = {});

struct ThermalCorrection {
    enum class Source { numeric_difference, low_temperature_series };

    double value = 0.0;  // J/m^2
    double tau = 0.0;
    Source source = Source::numeric_difference;
    std::string note;
};

/// Below this tau the thermal correction comes from the closed-form series
/// where one applies, since F and E agree to many digits there.
inline constexpr double kSeriesSwitchTau = 0.05;

/// Delta_T F = F - E.
ThermalCorrection thermal_correction(const PlateSystem& system, double T, const Options& opts = {});

/// P = -dF/da by Richardson-extrapolated central differences, Pa.
double pressure(const PlateSystem& system, double T, const Options& opts = {});

}  // namespace casimir::lifshitz
