#pragma once

#include <limits>

#include "ringfwm/core/grid.hpp"

namespace ringfwm::tcmt {

enum class BandRole { pump, signal, idler };

/// One resonance of an add-drop ring: center frequency plus the extrinsic
/// (per-coupler) and intrinsic energy decay rates. With symmetric coupling
/// the total decay rate is γ_tot = 2γ_e + γ_i.
struct ResonanceBand {
    BandRole role = BandRole::pump;
    double omega0 = 0.0;   // rad/s
    double gamma_e = 0.0;  // rad/s, per coupler
    double gamma_i = 0.0;  // rad/s

    double gamma_tot() const { return 2.0 * gamma_e + gamma_i; }
    bool lossless() const { return gamma_i == 0.0; }
};

/// Loaded/intrinsic/extrinsic quality factors at a stated center frequency.
/// Consistency: 1/q_tot = 2/q_e + 1/q_i. q_i is +inf for a lossless band.
struct QTriple {
    double omega0 = 0.0;
    double q_tot = 0.0;
    double q_i = std::numeric_limits<double>::infinity();
    double q_e = 0.0;
};

ResonanceBand make_band(BandRole role, double omega0, double gamma_e, double gamma_i);

/// Build a band from the loaded and extrinsic quality factors; γ_i is derived
/// and must come out non-negative.
ResonanceBand band_from_q(double omega0, double q_tot, double q_e,
                          BandRole role = BandRole::pump);

QTriple q_from_band(const ResonanceBand& b);

/// Build a band from the loaded Q and the on-resonance drop transmittance,
/// via Q_i = Q_tot / (1 - sqrt(T_d)).
ResonanceBand band_from_td(double omega0, double q_tot, double t_d,
                           BandRole role = BandRole::pump);

/// Energy-amplitude transfer into the ring: h(ω) = -i√(2γ_e) / (i(ω-ω₀)+γ_tot).
Complex h_transfer(double omega, const ResonanceBand& b);

/// Drop-port amplitude t(ω) = 2γ_e / (i(ω-ω₀)+γ_tot); satisfies
/// t(ω) = i√(2γ_e)·h(ω) and |t(ω₀)|² = (2γ_e/γ_tot)².
Complex drop_amplitude(double omega, const ResonanceBand& b);

/// Through-port intensity |1 - t(ω)|².
double through_transmittance(double omega, const ResonanceBand& b);

/// On-resonance drop transmittance T_d = (2γ_e/γ_tot)².
double td_on_resonance(const ResonanceBand& b);

/// Inverse of the Q_i(T_d) relation: Q_i = Q_tot / (1 - sqrt(t_d)).
/// t_d >= 1 would put Q_i at infinity and is rejected.
double q_intrinsic_from_td(double q_tot, double t_d);

}  // namespace ringfwm::tcmt
