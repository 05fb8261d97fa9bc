#pragma once

#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::thermo {

struct EntropyPoint {
    double T = 0.0;             // K
    double S = 0.0;             // J/(m^2 K)
    double step_used = 0.0;     // K
    double err_estimate = 0.0;  // J/(m^2 K)
};

/// S = -dF/dT from central differences at steps h and h/2 with one Richardson
/// refinement; h = max(1e-3 T, 1e-3 K), kept below T/2. The error estimate
/// is the Richardson correction, floored at the rounding level of F.
EntropyPoint entropy(const lifshitz::PlateSystem& system, double T, const lifshitz::Options& opts = {});

/// entropy() with an explicit step h in (0, T/2).
EntropyPoint entropy_at_step(const lifshitz::PlateSystem& system, double T, double h,
                             const lifshitz::Options& opts = {});

struct NernstVerdict {
    enum class Classification { satisfied, violated };

    double limit_estimate = 0.0;  // extrapolated S(a, 0), J/(m^2 K)
    double limit_theory = 0.0;    // expected S(a, 0), J/(m^2 K)
    double uncertainty = 0.0;     // extrapolation uncertainty, J/(m^2 K)
    Classification classification = Classification::satisfied;
    bool out_of_scope_model = false;
    std::string note;
    std::vector<double> T_grid;
    std::vector<EntropyPoint> points;

    /// |limit_estimate - limit_theory| / |limit_theory|; absolute difference
    /// scaled by k_B/(16 pi a^2) when the theory value is 0.
    double relative_deviation = 0.0;
};

/// Classification threshold: violated iff limit_estimate > this many
/// uncertainties.
inline constexpr double kViolationSigma = 5.0;

/// Default scan grid: 8 temperatures, geometric, 300 K down to 10 K.
std::vector<double> default_nernst_grid();

/// Geometric grid of `count` temperatures from `high` down to `low`.
std::vector<double> geometric_grid(double high, double low, int count);

/// Entropy on a strictly decreasing grid (>= 6 points) and its T -> 0 limit.
///
/// The limit is the value at T = 0 of the parabola through the three lowest
/// points. Its uncertainty combines the shift of that value when the window
/// moves up one grid point with the propagated entropy error estimates.
NernstVerdict nernst_scan(const lifshitz::PlateSystem& system, const std::vector<double>& T_grid,
                          const lifshitz::Options& opts = {});

/// Expected S(a, 0) for the plate pair: k_B/(16 pi a^2)[Li3(R1 R2) - Li3(r1 r2)]
/// where R_i is the static TM reflectivity with dc conduction (1 for a
/// conducting dielectric) and r_i without it. Zero for true dielectrics.
double entropy_limit_theory(const lifshitz::PlateSystem& system);

/// Delta_T F(a, T) / E(a). T = 0 returns 0. Throws DomainError when E = 0.
double relative_thermal_correction(const lifshitz::PlateSystem& system, double T, const lifshitz::Options& opts = {});

}  // namespace casimir::thermo
