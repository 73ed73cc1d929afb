#pragma once

// Test-only reference results, independent of the library's computation
// paths: Gamma-function identities for integrals of Lorentzian powers and a
// streaming high-resolution trapezoid.

#include <cmath>
#include <cstddef>
#include <numbers>

#include "ringfwm/jsa/jsa.hpp"
#include "ringfwm/tcmt/resonance.hpp"

namespace oracles {

/// Γ(i-1/2)/Γ(i); ∫L^i dω' = √π·γ·gamma_ratio(i).
inline double gamma_ratio(double i) {
    return std::exp(std::lgamma(i - 0.5) - std::lgamma(i));
}

/// Coherent rate of a lossless chain of n identical rings under a CW pump,
/// relative to one ring: Σ_{a,b=1..n} ∫L^(a+b) / ∫L².
inline double cw_lossless_rate(std::size_t n) {
    double sum = 0.0;
    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = 1; b <= n; ++b) {
            sum += gamma_ratio(static_cast<double>(a + b));
        }
    }
    return sum / gamma_ratio(2.0);
}

/// Relative brightness of source j in that chain: ∫L^(2m)/∫L², m = n-j+1.
inline double cw_lossless_brightness(std::size_t n, std::size_t j) {
    const double m = static_cast<double>(n - j + 1);
    return gamma_ratio(2.0 * m) / gamma_ratio(2.0);
}

/// Overlap of sources j and k: ∫L^(mj+mk) / √(∫L^(2mj)·∫L^(2mk)).
inline double cw_lossless_overlap(std::size_t n, std::size_t j, std::size_t k) {
    const double mj = static_cast<double>(n - j + 1);
    const double mk = static_cast<double>(n - k + 1);
    return gamma_ratio(mj + mk) /
           std::sqrt(gamma_ratio(2.0 * mj) * gamma_ratio(2.0 * mk));
}

/// Streaming trapezoid of L^i over [-span, span] in units of γ = 1; no
/// buffer, so spans of 1e6 half-widths stay cheap.
inline double lorentzian_power_quadrature(std::size_t i, double span,
                                          std::size_t points) {
    const double h = 2.0 * span / static_cast<double>(points - 1);
    double acc = 0.0;
    double comp = 0.0;  // Kahan correction
    for (std::size_t k = 0; k < points; ++k) {
        const double x = -span + h * static_cast<double>(k);
        const double u = 1.0 / (1.0 + x * x);
        double f = u;
        for (std::size_t p = 1; p < i; ++p) f *= u;
        if (k == 0 || k + 1 == points) f *= 0.5;
        const double y = f - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc * h;
}

/// Lossless, energy-matched, equal-width bands: the fixture under which the
/// Gamma-function oracles above are exact.
struct LosslessFixture {
    double omega_p0 = 1.2e15;
    double split = 2.4e12;
    double gamma_tot = 1.5e10;

    ringfwm::jsa::ArraySpec array(std::size_t n) const {
        using ringfwm::tcmt::BandRole;
        using ringfwm::tcmt::make_band;
        const double ge = gamma_tot / 2.0;
        return ringfwm::jsa::make_array(
            n, 500e-6, make_band(BandRole::pump, omega_p0, ge, 0.0),
            make_band(BandRole::signal, omega_p0 + split, ge, 0.0),
            make_band(BandRole::idler, omega_p0 - split, ge, 0.0));
    }
};

}  // namespace oracles
