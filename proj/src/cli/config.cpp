#include "ringfwm/cli/config.hpp"

#include <fstream>

#include <json.hpp>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/units.hpp"

namespace ringfwm::cli {

namespace {

using nlohmann::json;

double require_positive(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number()) {
        throw ConfigError(field, "missing or not a number");
    }
    const double v = j[field].get<double>();
    if (!(v > 0.0)) throw ConfigError(field, "must be positive");
    return v;
}

BandConfig parse_band(const json& j, const std::string& name) {
    if (!j.contains(name)) throw ConfigError("bands." + name, "missing");
    const json& b = j[name];
    BandConfig out;
    out.wavelength_nm = require_positive(b, "wavelength_nm");
    out.q_tot = require_positive(b, "q_tot");
    if (b.contains("q_e")) {
        const double qe = b["q_e"].get<double>();
        if (!(qe > 0.0)) throw ConfigError("bands." + name + ".q_e", "must be positive");
        out.q_e = qe;
    }
    return out;
}

}  // namespace

tcmt::ResonanceBand ScenarioConfig::build_band(tcmt::BandRole role) const {
    const BandConfig* bc = nullptr;
    std::string name;
    switch (role) {
        case tcmt::BandRole::pump: bc = &pump_band; name = "pump"; break;
        case tcmt::BandRole::signal: bc = &signal_band; name = "signal"; break;
        case tcmt::BandRole::idler: bc = &idler_band; name = "idler"; break;
    }
    double omega0 = omega_from_wavelength_nm(bc->wavelength_nm);
    if (enforce_energy_match && role == tcmt::BandRole::idler) {
        omega0 = 2.0 * omega_from_wavelength_nm(pump_band.wavelength_nm) -
                 omega_from_wavelength_nm(signal_band.wavelength_nm);
    }
    try {
        if (drop_transmittance) {
            return tcmt::band_from_td(omega0, bc->q_tot, *drop_transmittance, role);
        }
        if (!bc->q_e) {
            throw ConfigError("bands." + name + ".q_e",
                              "required unless drop_transmittance is given");
        }
        return tcmt::band_from_q(omega0, bc->q_tot, *bc->q_e, role);
    } catch (const InconsistentQError& e) {
        throw ConfigError("bands." + name, e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError("bands." + name, e.what());
    }
}

jsa::ArraySpec ScenarioConfig::build_array(std::size_t length) const {
    try {
        return jsa::make_array(length, spacing, build_band(tcmt::BandRole::pump),
                               build_band(tcmt::BandRole::signal),
                               build_band(tcmt::BandRole::idler), delta_k_bar);
    } catch (const EnergyMismatchError& e) {
        throw ConfigError("bands", e.what());
    } catch (const CoherenceError& e) {
        throw ConfigError("array.delta_k_bar", e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError("array", e.what());
    }
}

pump::PumpSpec ScenarioConfig::build_pump(const jsa::ArraySpec& arr) const {
    switch (pump.mode) {
        case PumpMode::cw:
            return pump::make_cw_pump(arr.pump.omega0);
        case PumpMode::gaussian:
            return pump::make_gaussian_pump(
                arr.pump.omega0, pump.fwhm_scale * 2.0 * arr.pump.gamma_tot());
        case PumpMode::tabulated:
            return pump::load_tabulated_pump(pump.file, pump.amplitudes_are_power);
    }
    throw ConfigError("pump.mode", "unknown mode");
}

jsa::JsaGrid ScenarioConfig::build_grid(const jsa::ArraySpec& arr) const {
    return jsa::make_jsa_grid(arr, grid.points, grid.span_halfwidths);
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("(root)", std::string("invalid JSON: ") + e.what());
    }

    ScenarioConfig cfg;
    if (!j.contains("array")) throw ConfigError("array", "missing");
    const json& arr = j["array"];
    if (!arr.contains("n") || !arr["n"].is_number_unsigned()) {
        throw ConfigError("array.n", "missing or not a positive integer");
    }
    cfg.n = arr["n"].get<std::size_t>();
    if (cfg.n < 1) throw ConfigError("array.n", "must be at least 1");
    cfg.spacing = require_positive(arr, "spacing_m");
    if (arr.contains("delta_k_bar")) cfg.delta_k_bar = arr["delta_k_bar"].get<double>();

    if (!j.contains("bands")) throw ConfigError("bands", "missing");
    cfg.pump_band = parse_band(j["bands"], "pump");
    cfg.signal_band = parse_band(j["bands"], "signal");
    cfg.idler_band = parse_band(j["bands"], "idler");

    if (j.contains("drop_transmittance")) {
        const double td = j["drop_transmittance"].get<double>();
        if (!(td > 0.0) || td > 1.0) {
            throw ConfigError("drop_transmittance", "must lie in (0, 1]");
        }
        cfg.drop_transmittance = td;
    }
    if (j.contains("enforce_energy_match")) {
        cfg.enforce_energy_match = j["enforce_energy_match"].get<bool>();
    }

    if (j.contains("pump")) {
        const json& p = j["pump"];
        const std::string mode = p.value("mode", "cw");
        if (mode == "cw") {
            cfg.pump.mode = PumpMode::cw;
        } else if (mode == "gaussian") {
            cfg.pump.mode = PumpMode::gaussian;
            if (p.contains("fwhm_scale")) {
                cfg.pump.fwhm_scale = p["fwhm_scale"].get<double>();
                if (!(cfg.pump.fwhm_scale > 0.0)) {
                    throw ConfigError("pump.fwhm_scale", "must be positive");
                }
            }
        } else if (mode == "tabulated") {
            cfg.pump.mode = PumpMode::tabulated;
            if (!p.contains("file")) throw ConfigError("pump.file", "missing");
            cfg.pump.file = p["file"].get<std::string>();
            cfg.pump.amplitudes_are_power = p.value("amplitudes_are_power", false);
        } else {
            throw ConfigError("pump.mode", "must be cw, gaussian or tabulated");
        }
    }

    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (g.contains("points")) cfg.grid.points = g["points"].get<std::size_t>();
        if (g.contains("span_halfwidths")) {
            cfg.grid.span_halfwidths = g["span_halfwidths"].get<double>();
        }
        if (g.contains("pump_points")) {
            cfg.grid.pump_points = g["pump_points"].get<std::size_t>();
        }
        if (g.contains("spectrum_points")) {
            cfg.grid.spectrum_points = g["spectrum_points"].get<std::size_t>();
        }
        if (cfg.grid.points < 3) throw ConfigError("grid.points", "must be at least 3");
        if (!(cfg.grid.span_halfwidths > 0.0)) {
            throw ConfigError("grid.span_halfwidths", "must be positive");
        }
        if (cfg.grid.pump_points < 3) {
            throw ConfigError("grid.pump_points", "must be at least 3");
        }
        if (cfg.grid.spectrum_points < 3) {
            throw ConfigError("grid.spectrum_points", "must be at least 3");
        }
    }

    // Surface band inconsistencies now rather than at first use.
    cfg.build_array(1);
    return cfg;
}

}  // namespace ringfwm::cli
