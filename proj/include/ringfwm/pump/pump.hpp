#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ringfwm/core/grid.hpp"
#include "ringfwm/tcmt/resonance.hpp"

namespace ringfwm::pump {

/// Monochromatic pump line at omega_p0. Handled analytically downstream:
/// there is no finite spectral density to sample.
struct CwPump {
    double omega_p0 = 0.0;
};

/// Transform-limited Gaussian pulse. `fwhm` is the full width at half maximum
/// of the power spectrum |φ_p|², in rad/s; the amplitude is normalized so
/// that ∫|φ_p|² dω = 1.
struct GaussianPump {
    double omega_p0 = 0.0;
    double fwhm = 0.0;
};

/// Measured spectrum given as (ω, amplitude) samples with strictly increasing
/// frequencies. Amplitude is linearly interpolated inside the sample range and
/// zero outside; normalization to unit squared-norm is applied on construction.
struct TabulatedPump {
    std::vector<double> omega;
    std::vector<double> amplitude;
};

using PumpSpec = std::variant<CwPump, GaussianPump, TabulatedPump>;

PumpSpec make_cw_pump(double omega_p0);
PumpSpec make_gaussian_pump(double omega_p0, double fwhm);

/// Samples are (ω, amplitude) pairs; at least 8, strictly increasing, with a
/// positive amplitude somewhere. If `amplitudes_are_power` the square root is
/// taken before normalization.
PumpSpec make_tabulated_pump(std::vector<double> omega, std::vector<double> amplitude,
                             bool amplitudes_are_power = false);

/// Two-column text file `wavelength_nm amplitude`, `#` comments allowed.
PumpSpec load_tabulated_pump(const std::string& path, bool amplitudes_are_power = false);

bool is_cw(const PumpSpec& p);

/// Center frequency of the pump line or spectrum.
double pump_center(const PumpSpec& p);

/// Normalized spectral amplitude at ω. Rejects CW pumps, whose line has no
/// finite density; callers must branch on is_cw() first.
double pump_amplitude(const PumpSpec& p, double omega);

/// Gaussian pump whose power spectrum is twice as wide as the ring's
/// intensity line (fwhm = 2 · 2γ_tot), centered on the pump resonance.
PumpSpec default_pulsed_pump(const tcmt::ResonanceBand& pump_band);

/// Frequency range [lo, hi] outside which the amplitude is negligible (zero
/// for tabulated pumps). Used to size quadrature grids.
struct PumpSupport {
    double lo = 0.0;
    double hi = 0.0;
};
PumpSupport pump_support(const PumpSpec& p);

}  // namespace ringfwm::pump
