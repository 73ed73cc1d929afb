#pragma once

#include <cstddef>

#include "ringfwm/core/grid.hpp"
#include "ringfwm/tcmt/resonance.hpp"

namespace ringfwm::tcmt {

/// Drop-port intensity after n cascaded, spectrally overlapped rings:
/// |t(ω)|^(2n), sampled on `grid`. Peak value is T_d^n at ω₀ and the line
/// narrows monotonically with n.
ComplexSpectrum cascade_drop_spectrum(const ResonanceBand& b, std::size_t n,
                                      const FrequencyGrid& grid);

/// Full width at half maximum of an intensity spectrum with a single interior
/// peak. Crossings are located by linear interpolation between bracketing
/// nodes; a flat or edge-peaked spectrum is rejected.
double fwhm(const ComplexSpectrum& intensity);

/// FWHM of |t|^(2n): 2·γ_tot·sqrt(2^(1/n) - 1).
double cascade_fwhm_closed_form(double gamma_tot, std::size_t n);

}  // namespace ringfwm::tcmt
