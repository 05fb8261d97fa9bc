#include "casimir/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::specfun {
namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
constexpr double kZeta3 = constants::zeta3;

// Above this argument the power series needs thousands of terms; the
// expansion in mu = ln z around z = 1 converges after a handful.
constexpr double kSeriesLimit = 0.99;
constexpr std::size_t kMaxTerms = 100000;

int order_of(PolyOrder n) { return static_cast<int>(n); }

double zeta_of(PolyOrder n) { return n == PolyOrder::two ? kZeta2 : kZeta3; }

struct SeriesSum {
    double value;
    std::size_t terms;
};

// sum_{k>=1} z^k / k^n for |z| <= kSeriesLimit. Stops once the geometric
// remainder bound |z|^(K+1) / ((1 - |z|)(K+1)^n) falls below 1e-16 of the sum.
SeriesSum power_series(PolyOrder n, double z) {
    const int p = order_of(n);
    if (z == 0.0) return {0.0, 0};
    double sum = 0.0;
    double comp = 0.0;
    double zk = 1.0;
    std::size_t k = 1;
    for (; k <= kMaxTerms; ++k) {
        zk *= z;
        const double kd = static_cast<double>(k);
        const double term = zk / (p == 2 ? kd * kd : kd * kd * kd);
        // Kahan-compensated accumulation.
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        const double next = zk * z;
        const double kn = kd + 1.0;
        const double remainder = std::abs(next) / ((1.0 - std::abs(z)) * (p == 2 ? kn * kn : kn * kn * kn));
        if (remainder < 1e-16 * std::abs(sum)) break;
    }
    return {sum, k};
}

// Li_n(e^mu) for small negative mu:
//   mu^(n-1)/(n-1)! [H_(n-1) - ln(-mu)] + sum_{k != n-1} zeta(n-k) mu^k / k!
double near_one(PolyOrder n, double z) {
    const double mu = std::log(z);
    const double lm = std::log(-mu);
    // zeta(0), zeta(-1), ..., zeta(-9)
    constexpr std::array<double, 10> zeta_neg = {
        -0.5, -1.0 / 12.0, 0.0, 1.0 / 120.0, 0.0, -1.0 / 252.0, 0.0, 1.0 / 240.0, 0.0, -1.0 / 132.0};
    if (n == PolyOrder::two) {
        double sum = kZeta2 + mu * (1.0 - lm);
        double mk = mu;
        double fact = 1.0;
        for (int k = 2; k < 12; ++k) {
            mk *= mu;
            fact *= k;
            sum += zeta_neg[static_cast<std::size_t>(k - 2)] * mk / fact;
        }
        return sum;
    }
    double sum = kZeta3 + kZeta2 * mu + 0.5 * mu * mu * (1.5 - lm);
    double mk = mu * mu;
    double fact = 2.0;
    for (int k = 3; k < 13; ++k) {
        mk *= mu;
        fact *= k;
        sum += zeta_neg[static_cast<std::size_t>(k - 3)] * mk / fact;
    }
    return sum;
}

double nonnegative(PolyOrder n, double z) {
    if (z == 1.0) return zeta_of(n);
    if (z > kSeriesLimit) return near_one(n, z);
    return power_series(n, z).value;
}

}  // namespace

double polylog(PolyOrder n, double z) {
    if (n != PolyOrder::two && n != PolyOrder::three) {
        throw DomainError("polylog: only orders 2 and 3 are supported");
    }
    if (!std::isfinite(z) || std::abs(z) > 1.0) {
        throw DomainError("polylog: argument " + std::to_string(z) + " outside [-1, 1]");
    }
    if (z >= 0.0) return nonnegative(n, z);
    // Duplication: Li_n(-x) = 2^(1-n) Li_n(x^2) - Li_n(x).
    const double x = -z;
    if (x <= 0.5) return power_series(n, z).value;
    const double scale = n == PolyOrder::two ? 0.5 : 0.25;
    return scale * nonnegative(n, x * x) - nonnegative(n, x);
}

double zeta3() noexcept { return kZeta3; }

std::size_t polylog_terms(PolyOrder n, double z) {
    if (z < 0.0 || z > kSeriesLimit) return 0;
    return power_series(n, z).terms;
}

}  // namespace casimir::specfun
