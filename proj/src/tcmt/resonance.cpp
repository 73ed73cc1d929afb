#include "ringfwm/tcmt/resonance.hpp"

#include <cmath>
#include <stdexcept>

#include "ringfwm/core/errors.hpp"

namespace ringfwm::tcmt {

ResonanceBand make_band(BandRole role, double omega0, double gamma_e,
                        double gamma_i) {
    if (omega0 <= 0.0) throw std::invalid_argument("band center must be positive");
    if (gamma_e <= 0.0) throw std::invalid_argument("gamma_e must be positive");
    if (gamma_i < 0.0) throw std::invalid_argument("gamma_i must be non-negative");
    return ResonanceBand{role, omega0, gamma_e, gamma_i};
}

ResonanceBand band_from_q(double omega0, double q_tot, double q_e, BandRole role) {
    if (q_tot <= 0.0 || q_e <= 0.0) {
        throw std::invalid_argument("quality factors must be positive");
    }
    const double gamma_tot = omega0 / (2.0 * q_tot);
    const double gamma_e = omega0 / (2.0 * q_e);
    const double gamma_i = gamma_tot - 2.0 * gamma_e;
    if (gamma_i < -1e-12 * gamma_tot) {
        throw InconsistentQError("q_tot and q_e imply a negative intrinsic rate");
    }
    return make_band(role, omega0, gamma_e, std::max(gamma_i, 0.0));
}

QTriple q_from_band(const ResonanceBand& b) {
    QTriple q;
    q.omega0 = b.omega0;
    q.q_tot = b.omega0 / (2.0 * b.gamma_tot());
    q.q_e = b.omega0 / (2.0 * b.gamma_e);
    q.q_i = b.lossless() ? std::numeric_limits<double>::infinity()
                         : b.omega0 / (2.0 * b.gamma_i);
    return q;
}

ResonanceBand band_from_td(double omega0, double q_tot, double t_d, BandRole role) {
    if (t_d <= 0.0 || t_d > 1.0) {
        throw std::invalid_argument("drop transmittance must lie in (0, 1]");
    }
    const double gamma_tot = omega0 / (2.0 * q_tot);
    const double gamma_i = gamma_tot * (1.0 - std::sqrt(t_d));
    return make_band(role, omega0, (gamma_tot - gamma_i) / 2.0, gamma_i);
}

Complex h_transfer(double omega, const ResonanceBand& b) {
    return Complex{0.0, -1.0} * std::sqrt(2.0 * b.gamma_e) /
           Complex{b.gamma_tot(), omega - b.omega0};
}

Complex drop_amplitude(double omega, const ResonanceBand& b) {
    return 2.0 * b.gamma_e / Complex{b.gamma_tot(), omega - b.omega0};
}

double through_transmittance(double omega, const ResonanceBand& b) {
    return std::norm(1.0 - drop_amplitude(omega, b));
}

double td_on_resonance(const ResonanceBand& b) {
    const double a = 2.0 * b.gamma_e / b.gamma_tot();
    return a * a;
}

double q_intrinsic_from_td(double q_tot, double t_d) {
    if (q_tot <= 0.0) throw std::invalid_argument("q_tot must be positive");
    if (t_d <= 0.0) throw std::invalid_argument("t_d must be positive");
    if (t_d >= 1.0) {
        throw LosslessDegenerateError("t_d >= 1 corresponds to infinite Q_i");
    }
    return q_tot / (1.0 - std::sqrt(t_d));
}

}  // namespace ringfwm::tcmt
