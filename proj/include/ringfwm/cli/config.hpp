#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ringfwm/jsa/jsa.hpp"
#include "ringfwm/pump/pump.hpp"
#include "ringfwm/tcmt/resonance.hpp"

namespace ringfwm::cli {

struct BandConfig {
    double wavelength_nm = 0.0;
    double q_tot = 0.0;
    std::optional<double> q_e;
};

enum class PumpMode { cw, gaussian, tabulated };

struct PumpConfig {
    PumpMode mode = PumpMode::cw;
    double fwhm_scale = 2.0;  // gaussian: power FWHM = scale · ring intensity FWHM
    std::string file;         // tabulated
    bool amplitudes_are_power = false;
};

struct GridConfig {
    std::size_t points = 801;
    double span_halfwidths = 10.0;
    std::size_t pump_points = 1201;
    std::size_t spectrum_points = 2001;
};

/// Validated scenario parameters. Bands are built either from (q_tot, q_e)
/// or, when `drop_transmittance` is set, from (q_tot, T_d); the idler center
/// snaps to 2ω_p0 - ω_s0 unless energy matching is disabled.
struct ScenarioConfig {
    std::size_t n = 5;
    double spacing = 500e-6;
    double delta_k_bar = 0.0;
    BandConfig pump_band;
    BandConfig signal_band;
    BandConfig idler_band;
    std::optional<double> drop_transmittance;
    bool enforce_energy_match = true;
    PumpConfig pump;
    GridConfig grid;

    tcmt::ResonanceBand build_band(tcmt::BandRole role) const;
    jsa::ArraySpec build_array(std::size_t length) const;
    jsa::ArraySpec build_array() const { return build_array(n); }
    pump::PumpSpec build_pump(const jsa::ArraySpec& arr) const;
    jsa::JsaGrid build_grid(const jsa::ArraySpec& arr) const;
};

ScenarioConfig load_scenario(const std::string& path);

}  // namespace ringfwm::cli
