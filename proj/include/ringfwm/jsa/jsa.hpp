#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ringfwm/core/grid.hpp"
#include "ringfwm/core/parallel.hpp"
#include "ringfwm/pump/pump.hpp"
#include "ringfwm/tcmt/resonance.hpp"

namespace ringfwm::jsa {

/// A chain of n identical, spectrally overlapped add-drop rings. Each drop
/// port feeds the next ring; pairs are collected at the drop of ring n.
struct ArraySpec {
    std::size_t n = 1;
    double spacing = 0.0;  // ring-to-ring separation, m
    tcmt::ResonanceBand pump;
    tcmt::ResonanceBand signal;
    tcmt::ResonanceBand idler;
    double delta_k_bar = 0.0;  // mean phase mismatch 2k_p - k_s - k_i, 1/m
};

/// Validates ring count, spacing, spectral alignment of the three bands
/// (|2ω_p0 - ω_s0 - ω_i0| below the narrowest linewidth) and the constructive
/// regime n·L·|Δk| < π/10.
ArraySpec make_array(std::size_t n, double spacing, tcmt::ResonanceBand pump_band,
                     tcmt::ResonanceBand signal_band, tcmt::ResonanceBand idler_band,
                     double delta_k_bar = 0.0);

/// Signal and idler axes for the joint spectra. Both axes share one absolute
/// halfspan (span_halfwidths times the wider of the two loaded linewidths) so
/// that ω₁+ω₂ falls on a uniform set of values.
struct JsaGrid {
    FrequencyGrid signal;
    FrequencyGrid idler;
};

JsaGrid make_jsa_grid(const ArraySpec& arr, std::size_t points = 801,
                      double span_halfwidths = 10.0);

/// 1-D grid used for the CW line integrals (and the pair-transmittance
/// integrals): the signal axis widened 4x at unchanged spacing, which keeps
/// the slowly decaying Lorentzian-squared tails below 1e-5.
FrequencyGrid make_line_grid(const FrequencyGrid& signal_axis);

/// Per-source generation kernel for ring q in a chain of n:
/// (-2√(γ_es γ_ei))^(n-q) · (-2γ_ep)^(q-1) · h_p^q(ω₃) h_p^q(ω₄)
///                        · h_s^(n-q+1)(ω₁) h_i^(n-q+1)(ω₂).
/// The pump prefactor and h_p powers combine into the drop chain
/// (t_p(ω₃)t_p(ω₄))^(q-1) per upstream ring.
Complex source_kernel(std::size_t q, const ArraySpec& arr,
                      const std::array<double, 4>& omegas);

struct DecomposeOptions {
    Execution exec = Execution::parallel;
    /// Skip materializing the per-source 2-D grids (rates only).
    bool keep_amplitudes = true;
    /// Pump-axis quadrature points for the pulsed convolution.
    std::size_t pump_points = 1201;
};

/// Per-source joint amplitudes and the derived overlap data. Brightness and
/// indistinguishability use the mode's natural inner product: 2-D quadrature
/// for pulsed pumps, line integrals along ω₂ = 2ω_p0 - ω₁ for CW.
struct SourceDecomposition {
    std::vector<ComplexGrid2D> phi;      // unnormalized φ_q, q = 1..n
    std::vector<double> brightness_raw;  // ⟨φ_q, φ_q⟩
    std::vector<std::vector<Complex>> indistinguishability;  // n x n, Hermitian
    double total_norm = 0.0;  // ⟨Σ_q φ_q, Σ_q φ_q⟩
    bool cw = false;
};

/// Unnormalized joint amplitude of source q on the grid. CW pumps collapse
/// the pump convolution onto evaluation at ω = ω_p0.
ComplexGrid2D phi_q(std::size_t q, const ArraySpec& arr, const pump::PumpSpec& pmp,
                    const JsaGrid& grid, Execution exec = Execution::parallel);

SourceDecomposition decompose(const ArraySpec& arr, const pump::PumpSpec& pmp,
                              const JsaGrid& grid, const DecomposeOptions& opt = {});

/// ⟨φ, φ⟩ of a single ring with the same bands, pump and grid; the
/// normalization reference for relative brightness and rates.
double single_ring_brightness(const ArraySpec& arr, const pump::PumpSpec& pmp,
                              const JsaGrid& grid, const DecomposeOptions& opt = {});

/// B_j = brightness_raw[j] / single-ring brightness.
std::vector<double> relative_brightness(const SourceDecomposition& dec,
                                        double single_ring_b);

/// R(n)/R(1) = Σ_jk √(B_j B_k) I_jk; evaluated directly as
/// ⟨Σφ, Σφ⟩ / ⟨φ⁽¹⁾, φ⁽¹⁾⟩, which is algebraically identical.
double normalized_rate(const ArraySpec& arr, const pump::PumpSpec& pmp,
                       const JsaGrid& grid, const DecomposeOptions& opt = {});

/// The same rate assembled from the decomposition's components; used to
/// cross-check the direct evaluation.
double rate_from_components(const SourceDecomposition& dec, double single_ring_b);

/// Σ_j B_j: the rate a set of mutually incoherent sources would give.
double incoherent_reference_rate(const SourceDecomposition& dec, double single_ring_b);

}  // namespace ringfwm::jsa
