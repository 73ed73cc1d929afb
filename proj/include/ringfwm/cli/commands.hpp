#pragma once

#include <set>
#include <string>

#include "ringfwm/cli/config.hpp"

namespace ringfwm::cli {

/// Drop spectra of the cascaded chain plus the width table:
/// spectra_drop<N>.csv for N = 1..n and fwhm_vs_N.csv.
void cmd_spectra(const ScenarioConfig& cfg, const std::string& outdir);

/// scaling.csv with one column per requested process over N = 1..n.
/// An empty set selects every process.
void cmd_scaling(const ScenarioConfig& cfg, const std::string& outdir,
                 const std::set<std::string>& processes = {});

/// Joint-spectrum artifacts for the configured chain: per-source
/// jsa_source_<q>.csv intensity matrices, jsa_axes.csv, brightness.csv,
/// indistinguishability.csv (row I_jN) and pump_evolution.csv.
void cmd_jsa(const ScenarioConfig& cfg, const std::string& outdir);

/// Drop-transmittance fit against a measured rate curve; writes
/// fit_report.json and echoes it to stdout.
void cmd_fit(const ScenarioConfig& cfg, const std::string& data_file,
             const std::string& process, const std::string& outdir);

/// asymptotic.csv: chain length, log10 of the pair-generation weight, and
/// the growth exponent fitted over the trailing decade.
void cmd_asymptotic(const ScenarioConfig& cfg, std::size_t n_max,
                    const std::string& outdir);

}  // namespace ringfwm::cli
