#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casimir/error.hpp"

namespace casimir::quadrature {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;
    }
};

Panel evaluate(const Integrand& f, double a, double b) {
    double err = 0.0;
    // max_depth 0: a single K21 panel. Boost reports |K21 - G10| on the
    // reference interval [-1, 1], so rescale it to [a, b].
    const double value = Rule::integrate(f, a, b, 0, 0.0, &err);
    err *= 0.5 * (b - a);
    return {a, b, value, std::isfinite(err) ? err : HUGE_VAL};
}

double compensated_sum(std::vector<double>& terms) {
    double sum = 0.0;
    double comp = 0.0;
    for (double t : terms) {
        const double y = t - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
    if (!(b > a)) {
        if (a == b) return {0.0, 0.0, 0, 0, true};
        throw DomainError("integrate: lower limit exceeds upper limit");
    }
    const double ends[] = {a, b};
    return integrate_piecewise(f, ends, opts);
}

Result integrate_piecewise(const Integrand& f, std::span<const double> breakpoints, const Options& opts) {
    if (breakpoints.size() < 2) throw DomainError("integrate_piecewise: need at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1])) {
            throw DomainError("integrate_piecewise: breakpoints must be strictly increasing");
        }
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    std::size_t evaluations = 0;
    double total = 0.0;
    double total_err = 0.0;
    std::size_t unbounded = 0;  // panels whose error estimate is not finite
    auto add_error = [&](double e, int sign) {
        if (std::isinf(e)) {
            unbounded = sign > 0 ? unbounded + 1 : unbounded - 1;
        } else {
            total_err += sign * e;
        }
    };
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const Panel p = evaluate(f, breakpoints[i - 1], breakpoints[i]);
        evaluations += 21;
        total += p.value;
        add_error(p.error, +1);
        queue.push(p);
    }

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

    auto done = [&] { return unbounded == 0 && total_err <= target(); };
    bool converged = done();
    while (!converged && queue.size() < opts.max_panels) {
        Panel worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;
        queue.pop();
        const Panel left = evaluate(f, worst.a, mid);
        const Panel right = evaluate(f, mid, worst.b);
        evaluations += 42;
        total += left.value + right.value - worst.value;
        add_error(left.error, +1);
        add_error(right.error, +1);
        add_error(worst.error, -1);
        queue.push(left);
        queue.push(right);
        converged = done();
    }

    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    std::vector<double> values;
    std::vector<double> errors;
    values.reserve(panels.size());
    errors.reserve(panels.size());
    for (const Panel& p : panels) {
        values.push_back(p.value);
        errors.push_back(p.error);
    }

    Result result;
    result.value = compensated_sum(values);
    result.abs_error = compensated_sum(errors);
    result.panels = panels.size();
    result.evaluations = evaluations;
    result.converged = result.abs_error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(result.value));
    return result;
}

}  // namespace casimir::quadrature
