#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringfwm {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Angular frequency (rad/s) of a vacuum wavelength given in nanometers.
inline double omega_from_wavelength_nm(double lambda_nm) {
    if (lambda_nm <= 0.0) {
        throw std::invalid_argument("wavelength must be positive");
    }
    return 2.0 * std::numbers::pi * kSpeedOfLight / (lambda_nm * 1e-9);
}

inline double wavelength_nm_from_omega(double omega) {
    if (omega <= 0.0) {
        throw std::invalid_argument("angular frequency must be positive");
    }
    return 2.0 * std::numbers::pi * kSpeedOfLight / omega * 1e9;
}

/// 10^(x/10); dB values are power ratios throughout.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double linear) {
    if (linear <= 0.0) {
        throw std::invalid_argument("linear_to_db requires a positive ratio");
    }
    return 10.0 * std::log10(linear);
}

}  // namespace ringfwm
