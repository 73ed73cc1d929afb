#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringfwm/core/grid.hpp"
#include "ringfwm/jsa/jsa.hpp"
#include "ringfwm/scaling/scaling.hpp"
#include "ringfwm/tcmt/resonance.hpp"

namespace ringfwm::incoherent {

/// Per-ring coincidence rates measured by pumping each ring individually
/// (through-port collection) with the geometric power schedule.
struct MeasuredRings {
    std::vector<double> counts;                 // events/s, ring 1..N
    std::optional<std::vector<double>> sigmas;  // same length when present
    double p1_mw = 1.0;                         // input power at ring 1
    double t_d = 1.0;                           // schedule transmittance
};

MeasuredRings make_measured_rings(std::vector<double> counts,
                                  std::optional<std::vector<double>> sigmas,
                                  double p1_mw, double t_d);

/// CSV `ring_index,counts_per_s[,sigma]` with a header row.
MeasuredRings load_counts_csv(const std::string& path, double p1_mw, double t_d);

/// Effective transmittance of a pair from ring j to the drop of ring n:
/// per-drop coupling (4γ_es γ_ei)^(n-j) times the spectral-overlap ratio
/// ∫|h_s^(n-j+1)(ω₁) h_i^(n-j+1)(2ω_p0-ω₁)|² dω₁ / ∫|h_s h_i|² dω₁,
/// with the idler frequency pinned by CW energy conservation. Equals 1 at
/// j = n and increases with j.
double pair_transmittance(std::size_t j, std::size_t n,
                          const tcmt::ResonanceBand& signal,
                          const tcmt::ResonanceBand& idler, double pump_omega0,
                          const FrequencyGrid& grid);

/// Geometric pump schedule P_j = P₁·T_d^(j-1) that emulates the j-1 drop
/// events preceding ring j.
double pump_power_schedule(double p1_mw, std::size_t j, double t_d);

/// Incoherent array rate R(n') = Σ_{j<=n'} T_{j n'}·C_j for n' = 1..n,
/// normalized to R(1). Uncertainties, when present, propagate through the
/// weighted sum with no correlation model.
scaling::ScalingSeries incoherent_rate(const MeasuredRings& meas,
                                       const jsa::ArraySpec& arr,
                                       const FrequencyGrid& grid);

}  // namespace ringfwm::incoherent
