#pragma once

#include <cstddef>

namespace casimir::specfun {

/// Polylogarithm orders needed by the closed-form thermal results.
enum class PolyOrder : int { two = 2, three = 3 };

/// Li_n(z) = sum_{k>=1} z^k / k^n for real |z| <= 1.
///
/// Evaluated by direct power series; z == 1 returns zeta(n) exactly.
/// Absolute accuracy is better than 1e-13 on the physical range z in [0, 0.95]
/// and for negative z. Throws DomainError for |z| > 1 or non-finite z.
double polylog(PolyOrder n, double z);

inline double li2(double z) { return polylog(PolyOrder::two, z); }
inline double li3(double z) { return polylog(PolyOrder::three, z); }

/// Riemann zeta(3) (Apery's constant).
double zeta3() noexcept;

/// Number of series terms polylog() sums for a given argument, exposed so the
/// truncation bound can be checked against the remainder estimate.
std::size_t polylog_terms(PolyOrder n, double z);

}  // namespace casimir::specfun
