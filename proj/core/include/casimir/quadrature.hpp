#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace casimir::quadrature {

struct Options {
    double abs_tol = 1e-13;
    double rel_tol = 0.0;  // tolerance is max(abs_tol, rel_tol * |I|)
    std::size_t max_panels = 4000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t panels = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Global adaptive Gauss-Kronrod (G10/K21) integration on [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate meets the tolerance or max_panels is reached. The panel order and
/// final summation are deterministic for a given integrand.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Same as integrate(), over consecutive sub-intervals [b0,b1], [b1,b2], ...
/// Breakpoints must be strictly increasing. All sub-intervals share one
/// refinement queue and one global tolerance.
Result integrate_piecewise(const Integrand& f, std::span<const double> breakpoints,
                           const Options& opts = {});

}  // namespace casimir::quadrature
