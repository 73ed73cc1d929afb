#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringfwm/jsa/jsa.hpp"
#include "ringfwm/pump/pump.hpp"
#include "ringfwm/scaling/scaling.hpp"
#include "ringfwm/tcmt/resonance.hpp"

namespace ringfwm::fit {

/// Derivative-free bounded minimizer. Deterministic: fixed section ratio,
/// fixed iteration policy. Returns the midpoint of the final bracket.
struct GoldenResult {
    double x = 0.0;
    double f = 0.0;
    std::size_t evaluations = 0;
};
GoldenResult golden_section_minimize(const std::function<double(double)>& f,
                                     double lo, double hi, double x_tol,
                                     std::size_t max_iter = 200);

enum class RateProcess { stimulated, spontaneous_cw, spontaneous_pulsed };

struct RatePoint {
    std::size_t n = 1;
    double rate = 0.0;
    std::optional<double> sigma;
};

/// Measured rate-versus-chain-length curve, normalized to the first ring.
struct RateCurve {
    RateProcess process = RateProcess::stimulated;
    std::vector<RatePoint> points;
};

RateCurve make_rate_curve(RateProcess process, std::vector<RatePoint> points);

/// CSV `N,rate[,sigma]` with a header row.
RateCurve load_rate_curve_csv(const std::string& path, RateProcess process);

struct FitResult {
    double t_d_fit = 0.0;
    double residual = 0.0;
    std::size_t evaluations = 0;
    std::vector<RatePoint> model_curve;
};

/// Model template for the drop-transmittance fit: center frequencies and
/// loaded Q's stay fixed at their measured values while the candidate T_d
/// sets the intrinsic rate of every band.
struct TdFitConfig {
    double omega_p0 = 0.0;
    double omega_s0 = 0.0;
    double omega_i0 = 0.0;
    double q_tot_pump = 0.0;
    double q_tot_signal = 0.0;
    double q_tot_idler = 0.0;
    double spacing = 500e-6;
    double pump_fwhm_scale = 2.0;       // pulsed model: fwhm = scale · 2γ_tot
    std::size_t search_grid_points = 401;   // rate-model grid during the search
    std::size_t final_grid_points = 801;    // grid for the reported residual
    double t_d_lo = 0.3;
    double t_d_hi = 0.999;
    double t_d_tol = 1e-4;
};

/// Least-squares recovery of the drop transmittance from a normalized rate
/// curve. Golden-section search over (t_d_lo, t_d_hi); the spontaneous model
/// is evaluated on the coarse grid during the search and once more on the
/// fine grid for the reported residual and model curve.
FitResult fit_td(const RateCurve& curve, const TdFitConfig& config);

struct SpectrumSample {
    double omega = 0.0;
    double transmittance = 0.0;
};

/// CSV `wavelength_nm,transmittance` with a header row; samples are returned
/// ordered by increasing angular frequency.
std::vector<SpectrumSample> load_through_spectrum_csv(const std::string& path);

struct ThroughFitResult {
    tcmt::ResonanceBand band;
    double residual = 0.0;
    bool gamma_i_clamped = false;
};

/// Recover (ω₀, γ_e, γ_tot) from through-port transmittance samples by
/// least squares against |1 - 2γ_e/(i(ω-ω₀)+γ_tot)|². Initial values come
/// from the dip position, depth and half-depth width, refined by
/// coordinate-wise golden sections (10 passes). A slightly negative derived
/// γ_i from noise is clamped to zero and flagged.
ThroughFitResult fit_through_spectrum(const std::vector<SpectrumSample>& samples);

/// Least-squares slope of log(rate) versus log(power).
double power_law_slope(const std::vector<std::pair<double, double>>& power_rate);

}  // namespace ringfwm::fit
