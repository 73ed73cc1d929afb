#include "ringfwm/tcmt/cascade.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/quadrature.hpp"

namespace ringfwm::tcmt {

ComplexSpectrum cascade_drop_spectrum(const ResonanceBand& b, std::size_t n,
                                      const FrequencyGrid& grid) {
    if (n < 1) throw std::invalid_argument("cascade length must be at least 1");
    std::vector<Complex> vals(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double single = std::norm(drop_amplitude(grid.node(i), b));
        vals[i] = std::pow(single, static_cast<double>(n));
    }
    return ComplexSpectrum{grid, std::move(vals)};
}

namespace {

// Interpolated abscissa where the intensity crosses `level` between nodes
// i and i+1.
double cross_point(const ComplexSpectrum& s, std::size_t i, double level) {
    const double y0 = s.values[i].real();
    const double y1 = s.values[i + 1].real();
    const double t = (level - y0) / (y1 - y0);
    return s.grid.node(i) + t * s.grid.spacing();
}

}  // namespace

double fwhm(const ComplexSpectrum& intensity) {
    const auto& v = intensity.values;
    const std::size_t n = v.size();
    double peak = v[0].real();
    for (std::size_t i = 1; i < n; ++i) peak = std::max(peak, v[i].real());

    // Nodes attaining the maximum; a plateau is fine, disjoint peaks are not.
    std::size_t first = n, last = 0;
    bool gap = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].real() == peak) {
            if (first == n) {
                first = i;
            } else if (i != last + 1) {
                gap = true;
            }
            last = i;
        }
    }
    if (gap) throw AmbiguousPeakError("intensity attains its maximum at disjoint nodes");
    if (first == 0 || last == n - 1) {
        throw SpanTooNarrowError("intensity has no interior maximum inside the grid");
    }

    const std::size_t peak_idx = (first + last) / 2;
    const double level = 0.5 * peak;

    std::size_t li = peak_idx;
    while (li > 0 && v[li].real() >= level) --li;
    if (v[li].real() >= level) {
        throw SpanTooNarrowError("left half-maximum crossing lies outside the grid");
    }
    std::size_t ri = peak_idx;
    while (ri + 1 < n && v[ri].real() >= level) ++ri;
    if (v[ri].real() >= level) {
        throw SpanTooNarrowError("right half-maximum crossing lies outside the grid");
    }

    return cross_point(intensity, ri - 1, level) - cross_point(intensity, li, level);
}

double cascade_fwhm_closed_form(double gamma_tot, std::size_t n) {
    if (n < 1) throw std::invalid_argument("cascade length must be at least 1");
    return 2.0 * gamma_tot *
           std::sqrt(std::pow(2.0, 1.0 / static_cast<double>(n)) - 1.0);
}

}  // namespace ringfwm::tcmt
