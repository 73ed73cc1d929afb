#pragma once

#include <span>

#include "ringfwm/core/grid.hpp"
#include "ringfwm/core/parallel.hpp"

namespace ringfwm {

/// Fixed-order pairwise summation. The reduction tree depends only on the
/// buffer length, so results are reproducible bit-for-bit regardless of how
/// the buffer was filled.
template <typename T>
T pairwise_sum(std::span<const T> v) {
    if (v.size() <= 16) {
        T acc{};
        for (const T& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

/// Pairwise reduction of f(lo), ..., f(hi-1) without materializing a buffer.
/// Same fixed tree as pairwise_sum.
template <typename T, typename F>
T pairwise_eval(std::size_t lo, std::size_t hi, F&& f) {
    if (hi - lo <= 16) {
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_eval<T>(lo, mid, f) + pairwise_eval<T>(mid, hi, f);
}

/// Composite trapezoid over uniformly spaced samples.
template <typename T>
T trapezoid(std::span<const T> v, double spacing) {
    T sum = pairwise_sum(v);
    sum -= 0.5 * (v.front() + v.back());
    return sum * spacing;
}

/// ∫ f(ω) dω over the grid span (composite trapezoid).
Complex integrate_1d(const ComplexSpectrum& f);

/// ∬ f(ω₁, ω₂) dω₁ dω₂ (iterated trapezoid). Row integrals may be evaluated
/// concurrently; the final combination order is fixed.
Complex integrate_2d(const ComplexGrid2D& f, Execution exec = Execution::parallel);

/// z^n by repeated multiplication for small n, switching to the
/// log-magnitude/phase form once n is large enough for the direct product
/// to drift toward under/overflow.
Complex pow_n(Complex z, unsigned n);

}  // namespace ringfwm
