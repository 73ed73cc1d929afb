#pragma once

#include <cstddef>
#include <map>
#include <string>

namespace ringfwm::scaling {

enum class Process {
    stimulated,
    spontaneous_unfiltered,
    incoherent,
    spontaneous_full_cw,
    spontaneous_full_pulsed,
    asymptotic,
};

std::string process_name(Process p);

/// Normalized intensity/rate versus chain length for one process.
struct ScalingSeries {
    Process process = Process::stimulated;
    double t_d = 1.0;
    std::map<std::size_t, double> values;
    std::map<std::size_t, double> sigmas;  // optional, may be empty
};

/// Stimulated output power ratio P(n)/P(1) = T^(n-1)·((1-T^n)/(1-T))²,
/// with the analytic n² limit at T = 1.
double xi_stim(std::size_t n, double t_d);

/// Spontaneous coincidence ratio with the pair spectrum post-filtered far
/// below the ring linewidth: T^(n-1)·n².
double xi_spont_unfiltered(std::size_t n, double t_d);

/// Incoherent per-ring sum of the stimulated contributions:
/// T^(n-1)·(1-T^(2n))/(1-T²), with the analytic limit n at T = 1.
double xi_incoherent(std::size_t n, double t_d);

enum class OracleProcess { stimulated, spontaneous, incoherent };

/// Direct amplitude bookkeeping behind the closed forms: per-ring field
/// contributions A_j summed coherently (|ΣA_j|²) or incoherently (Σ|A_j|²),
/// normalized to the n = 1 value. Must agree with the closed forms to
/// rounding; disagreements mean one side is wrong.
double amplitude_sum_oracle(std::size_t n, double t_d, OracleProcess process);

/// ∫ L^i(ω') dω' for L = γ²/(ω'² + γ²): √π·γ·Γ(i-1/2)/Γ(i).
double lorentzian_power_integral(std::size_t i, double gamma_tot);

/// Large-i form γ·√(π/i) of the same integral.
double lorentzian_power_integral_approx(std::size_t i, double gamma_tot);

/// Pair-generation weight for a chain of n with per-drop transmittance t_d:
/// T^(2n) · (Σ_{i=1..n} i/√(i+1) + Σ_{i=1..n-1} i/√(2n-i+1)), exact partial
/// sums. Underflows for large n with t_d < 1; prefer the log form there.
double asymptotic_beta2(std::size_t n, double t_d);

/// ln of asymptotic_beta2, finite for any n.
double log_asymptotic_beta2(std::size_t n, double t_d);

/// Continuous approximation of the first partial sum,
/// (2/3)√(n+1)(n-2) + 4/3 ≈ (2/3)·n^(3/2). Documentation cross-check only;
/// computations use the exact sums.
double first_sum_integral_approx(std::size_t n);

/// Least-squares slope of ln(β²(n)) - 2n·ln(t_d) versus ln(n) over
/// n ∈ [n_min, n_max]; the filtering-limited growth exponent.
double asymptotic_exponent(std::size_t n_min, std::size_t n_max, double t_d = 1.0);

/// Drop transmittance from ξ = Q_i/Q_e via (1 - 1/(2(1+ξ)))². Close to, but
/// not identical with, the transfer-function form √T_d = 2ξ/(2ξ+1) realized
/// by tcmt::td_on_resonance; both are exposed for comparison.
double td_from_xi(double xi);

/// √T_d = 2ξ/(2ξ+1) squared; the form consistent with the drop amplitude.
double td_from_xi_tcmt(double xi);

}  // namespace ringfwm::scaling
