#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ringfwm {

using Complex = std::complex<double>;

/// Uniform grid of angular frequencies, symmetric about `center`.
/// spacing = 2*halfspan/(points-1); with an odd point count the midpoint
/// lands exactly on `center`.
struct FrequencyGrid {
    double center = 0.0;    // rad/s
    double halfspan = 0.0;  // rad/s
    std::size_t points = 0;

    double spacing() const {
        return 2.0 * halfspan / static_cast<double>(points - 1);
    }
    double node(std::size_t i) const {
        return center - halfspan + spacing() * static_cast<double>(i);
    }
    double front() const { return center - halfspan; }
    double back() const { return center + halfspan; }

    std::vector<double> nodes() const {
        std::vector<double> out(points);
        for (std::size_t i = 0; i < points; ++i) out[i] = node(i);
        return out;
    }

    bool operator==(const FrequencyGrid&) const = default;
};

inline FrequencyGrid make_grid(double center, double halfspan, std::size_t points) {
    if (halfspan <= 0.0) throw std::invalid_argument("grid halfspan must be positive");
    if (points < 3) throw std::invalid_argument("grid needs at least 3 points");
    return FrequencyGrid{center, halfspan, points};
}

/// Complex samples on a FrequencyGrid.
struct ComplexSpectrum {
    FrequencyGrid grid;
    std::vector<Complex> values;

    ComplexSpectrum() = default;
    ComplexSpectrum(FrequencyGrid g, std::vector<Complex> v)
        : grid(g), values(std::move(v)) {
        if (values.size() != grid.points) {
            throw std::invalid_argument("spectrum length does not match grid");
        }
    }
};

/// Complex matrix over two frequency axes; values row-major with the first
/// axis (grid1, signal) as the row index.
struct ComplexGrid2D {
    FrequencyGrid grid1;
    FrequencyGrid grid2;
    std::vector<Complex> values;

    ComplexGrid2D() = default;
    ComplexGrid2D(FrequencyGrid g1, FrequencyGrid g2)
        : grid1(g1), grid2(g2), values(g1.points * g2.points) {}
    ComplexGrid2D(FrequencyGrid g1, FrequencyGrid g2, std::vector<Complex> v)
        : grid1(g1), grid2(g2), values(std::move(v)) {
        if (values.size() != grid1.points * grid2.points) {
            throw std::invalid_argument("matrix size does not match grids");
        }
    }

    Complex& at(std::size_t i, std::size_t j) { return values[i * grid2.points + j]; }
    const Complex& at(std::size_t i, std::size_t j) const {
        return values[i * grid2.points + j];
    }
    std::size_t rows() const { return grid1.points; }
    std::size_t cols() const { return grid2.points; }
};

}  // namespace ringfwm
