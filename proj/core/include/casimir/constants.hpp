#pragma once

#include <numbers>

// CODATA 2018 exact and recommended values, SI units.
namespace casimir::constants {

inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double k_B = 1.380649e-23;              // J / K
inline constexpr double c = 299792458.0;                 // m / s
inline constexpr double e_charge = 1.602176634e-19;      // C
inline constexpr double epsilon_vac = 8.8541878128e-12;  // F / m

/// e / hbar: converts an energy in eV to an angular frequency in rad/s.
inline constexpr double ev_to_radps = 1.519267447e15;

inline constexpr double pi = std::numbers::pi;
inline constexpr double zeta3 = 1.2020569031595942854;

}  // namespace casimir::constants
