#pragma once

#include "casimir/constants.hpp"

// Dimensionless variables of the plate problem at separation a and temperature T.
namespace casimir::units {

/// omega_c = c / (2a), rad/s
inline double characteristic_frequency(double a) { return constants::c / (2.0 * a); }

/// tau = 4 pi k_B a T / (hbar c)
inline double dimensionless_temperature(double a, double T) {
    return 4.0 * constants::pi * constants::k_B * a * T / (constants::hbar * constants::c);
}

/// xi_l = 2 pi k_B T l / hbar, rad/s
inline double matsubara_frequency(double T, long l) {
    return 2.0 * constants::pi * constants::k_B * T * static_cast<double>(l) / constants::hbar;
}

/// hbar c / (32 pi^2 a^3): prefactor of the zero-temperature energy integral, J/m^2.
inline double energy_scale(double a) {
    return constants::hbar * constants::c / (32.0 * constants::pi * constants::pi * a * a * a);
}

/// k_B T / (16 pi a^2): prefactor of a single l = 0 polylog term, J/m^2.
inline double zero_mode_scale(double a, double T) {
    return constants::k_B * T / (16.0 * constants::pi * a * a);
}

}  // namespace casimir::units
