#include "ringfwm/core/quadrature.hpp"

#include <cmath>
#include <vector>

namespace ringfwm {

Complex integrate_1d(const ComplexSpectrum& f) {
    return trapezoid(std::span<const Complex>(f.values), f.grid.spacing());
}

namespace {

// Kept out of line so the serial and parallel orchestrators execute the same
// compiled kernel and stay bit-identical.
[[gnu::noinline]] Complex row_trapezoid(const Complex* row, std::size_t n,
                                        double spacing) {
    return trapezoid(std::span<const Complex>(row, n), spacing);
}

}  // namespace

Complex integrate_2d(const ComplexGrid2D& f, Execution exec) {
    const std::size_t rows = f.rows();
    const std::size_t cols = f.cols();
    std::vector<Complex> row_ints(rows);
    const double d2 = f.grid2.spacing();
    for_each_index(rows, exec, [&](std::size_t i) {
        row_ints[i] = row_trapezoid(f.values.data() + i * cols, cols, d2);
    });
    return trapezoid(std::span<const Complex>(row_ints), f.grid1.spacing());
}

Complex pow_n(Complex z, unsigned n) {
    if (n == 0) return Complex{1.0, 0.0};
    if (n <= 30) {
        Complex acc{1.0, 0.0};
        for (unsigned k = 0; k < n; ++k) acc *= z;
        return acc;
    }
    return std::exp(static_cast<double>(n) * std::log(z));
}

}  // namespace ringfwm
