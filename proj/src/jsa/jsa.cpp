#include "ringfwm/jsa/jsa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/quadrature.hpp"

namespace ringfwm::jsa {

namespace {

using tcmt::h_transfer;

double real_pow_int(double base, std::size_t n) {
    double acc = 1.0;
    for (std::size_t k = 0; k < n; ++k) acc *= base;
    return acc;
}

double kernel_prefactor(const ArraySpec& arr, std::size_t q) {
    const double pair = -2.0 * std::sqrt(arr.signal.gamma_e * arr.idler.gamma_e);
    const double pmp = -2.0 * arr.pump.gamma_e;
    return real_pow_int(pair, arr.n - q) * real_pow_int(pmp, q - 1);
}

// (-2sqrt(γ_es γ_ei))^(n-q) (-2γ_ep)^(q-1) e^{i q Δk L}, indexed by q-1.
// The phase factor enters here, with the amplitudes, not in the raw kernel.
std::vector<Complex> source_prefactors(const ArraySpec& arr) {
    std::vector<Complex> pref(arr.n);
    for (std::size_t q = 1; q <= arr.n; ++q) {
        const double phase = arr.delta_k_bar * arr.spacing * static_cast<double>(q);
        pref[q - 1] = kernel_prefactor(arr, q) * std::polar(1.0, phase);
    }
    return pref;
}

// h_s(ω₁), h_i(2ω_p0-ω₁) raised to powers 1..n on a 1-D grid; hs_pow[m-1]
// holds the m-th power.
struct LinePowers {
    std::vector<std::vector<Complex>> hs_pow;
    std::vector<std::vector<Complex>> hi_pow;
};

LinePowers line_powers(const ArraySpec& arr, const FrequencyGrid& line) {
    const std::size_t p = line.points;
    std::vector<Complex> hs(p), hi(p);
    const double wp0 = arr.pump.omega0;
    for (std::size_t i = 0; i < p; ++i) {
        const double w1 = line.node(i);
        hs[i] = h_transfer(w1, arr.signal);
        hi[i] = h_transfer(2.0 * wp0 - w1, arr.idler);
    }
    LinePowers lp;
    lp.hs_pow.resize(arr.n);
    lp.hi_pow.resize(arr.n);
    lp.hs_pow[0] = hs;
    lp.hi_pow[0] = hi;
    for (std::size_t m = 1; m < arr.n; ++m) {
        lp.hs_pow[m].resize(p);
        lp.hi_pow[m].resize(p);
        for (std::size_t i = 0; i < p; ++i) {
            lp.hs_pow[m][i] = lp.hs_pow[m - 1][i] * hs[i];
            lp.hi_pow[m][i] = lp.hi_pow[m - 1][i] * hi[i];
        }
    }
    return lp;
}

// CW amplitudes along ω₂ = 2ω_p0 - ω₁, one vector per source.
struct LineAmplitudes {
    FrequencyGrid grid;
    std::vector<std::vector<Complex>> a;  // [q-1][node]
};

LineAmplitudes cw_line_amplitudes(const ArraySpec& arr, const FrequencyGrid& line) {
    const auto pref = source_prefactors(arr);
    const auto lp = line_powers(arr, line);
    const Complex hp0 = h_transfer(arr.pump.omega0, arr.pump);
    LineAmplitudes la;
    la.grid = line;
    la.a.resize(arr.n);
    for (std::size_t q = 1; q <= arr.n; ++q) {
        const std::size_t m = arr.n - q + 1;
        const Complex scale = pref[q - 1] * pow_n(hp0, 2 * static_cast<unsigned>(q));
        auto& out = la.a[q - 1];
        out.resize(line.points);
        for (std::size_t i = 0; i < line.points; ++i) {
            out[i] = scale * lp.hs_pow[m - 1][i] * lp.hi_pow[m - 1][i];
        }
    }
    return la;
}

Complex line_inner(const std::vector<Complex>& a, const std::vector<Complex>& b,
                   double spacing) {
    const std::size_t n = a.size();
    Complex sum = pairwise_eval<Complex>(
        0, n, [&](std::size_t i) { return a[i] * std::conj(b[i]); });
    sum -= 0.5 * (a[0] * std::conj(b[0]) + a[n - 1] * std::conj(b[n - 1]));
    return sum * spacing;
}

// Pump convolution C_q(s) = ∫ φ_p(ω) φ_p(s-ω) h_p^q(ω) h_p^q(s-ω) dω,
// evaluated at every grid sum s = ω₁+ω₂. Shared row kernel keeps the serial
// and parallel paths bit-identical.
[[gnu::noinline]] Complex pump_convolution_at(double s, unsigned q,
                                              const ArraySpec& arr,
                                              const pump::PumpSpec& pmp,
                                              const FrequencyGrid& pg,
                                              const std::vector<double>& phi_p,
                                              const std::vector<Complex>& hp) {
    const std::size_t n = pg.points;
    Complex sum = pairwise_eval<Complex>(0, n, [&](std::size_t j) {
        const double w = pg.node(j);
        const double mirror = s - w;
        const double amp2 = pump::pump_amplitude(pmp, mirror);
        if (phi_p[j] == 0.0 || amp2 == 0.0) return Complex{};
        return phi_p[j] * amp2 * pow_n(hp[j], q) *
               pow_n(h_transfer(mirror, arr.pump), q);
    });
    const auto endpoint = [&](std::size_t j) {
        const double mirror = s - pg.node(j);
        return phi_p[j] * pump::pump_amplitude(pmp, mirror) * pow_n(hp[j], q) *
               pow_n(h_transfer(mirror, arr.pump), q);
    };
    sum -= 0.5 * (endpoint(0) + endpoint(n - 1));
    return sum * pg.spacing();
}

[[gnu::noinline]] void fill_phi_row(Complex* out, const Complex* hi_m,
                                    std::size_t cols, Complex scale_k,
                                    const Complex* c_by_sum, std::size_t k) {
    for (std::size_t l = 0; l < cols; ++l) {
        out[l] = scale_k * hi_m[l] * c_by_sum[k + l];
    }
}

[[gnu::noinline]] Complex grid_row_inner(const Complex* a, const Complex* b,
                                         std::size_t n, double spacing) {
    Complex sum = pairwise_eval<Complex>(
        0, n, [&](std::size_t l) { return a[l] * std::conj(b[l]); });
    sum -= 0.5 * (a[0] * std::conj(b[0]) + a[n - 1] * std::conj(b[n - 1]));
    return sum * spacing;
}

Complex grid_inner(const ComplexGrid2D& a, const ComplexGrid2D& b, Execution exec) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<Complex> partial(rows);
    const double d2 = a.grid2.spacing();
    for_each_index(rows, exec, [&](std::size_t i) {
        partial[i] = grid_row_inner(a.values.data() + i * cols,
                                    b.values.data() + i * cols, cols, d2);
    });
    return trapezoid(std::span<const Complex>(partial), a.grid1.spacing());
}

// φ_q over the 2-D grid from the per-axis powers and the per-sum pump factor.
ComplexGrid2D assemble_phi(const ArraySpec& arr, const JsaGrid& grid,
                           std::size_t q, const std::vector<Complex>& c_by_sum,
                           const LinePowers& lp, Complex pref, Execution exec) {
    const std::size_t m = arr.n - q + 1;
    ComplexGrid2D out(grid.signal, grid.idler);
    const std::size_t cols = out.cols();
    for_each_index(out.rows(), exec, [&](std::size_t k) {
        fill_phi_row(out.values.data() + k * cols, lp.hi_pow[m - 1].data(), cols,
                     pref * lp.hs_pow[m - 1][k], c_by_sum.data(), k);
    });
    return out;
}

// Axis powers evaluated on the 2-D grid axes (signal on grid.signal nodes,
// idler on grid.idler nodes), unlike the CW line which mirrors the idler.
LinePowers axis_powers(const ArraySpec& arr, const JsaGrid& grid) {
    const std::size_t p = grid.signal.points;
    std::vector<Complex> hs(p), hi(p);
    for (std::size_t i = 0; i < p; ++i) {
        hs[i] = h_transfer(grid.signal.node(i), arr.signal);
        hi[i] = h_transfer(grid.idler.node(i), arr.idler);
    }
    LinePowers lp;
    lp.hs_pow.resize(arr.n);
    lp.hi_pow.resize(arr.n);
    lp.hs_pow[0] = std::move(hs);
    lp.hi_pow[0] = std::move(hi);
    for (std::size_t m = 1; m < arr.n; ++m) {
        lp.hs_pow[m].resize(p);
        lp.hi_pow[m].resize(p);
        for (std::size_t i = 0; i < p; ++i) {
            lp.hs_pow[m][i] = lp.hs_pow[m - 1][i] * lp.hs_pow[0][i];
            lp.hi_pow[m][i] = lp.hi_pow[m - 1][i] * lp.hi_pow[0][i];
        }
    }
    return lp;
}

// The per-sum pump factor is shared across rows via the index k+l, which
// requires both axes to advance in lockstep.
void require_aligned(const JsaGrid& grid) {
    if (grid.signal.points != grid.idler.points ||
        grid.signal.spacing() != grid.idler.spacing()) {
        throw std::invalid_argument(
            "signal and idler axes must share point count and spacing");
    }
}

std::vector<double> grid_sums(const JsaGrid& grid) {
    const std::size_t p = grid.signal.points;
    std::vector<double> s(2 * p - 1);
    const double base = grid.signal.front() + grid.idler.front();
    const double d = grid.signal.spacing();
    for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = base + d * static_cast<double>(k);
    }
    return s;
}

// Per-sum pump factor: CW pumps pin ω = ω_p0, pulsed pumps convolve.
std::vector<Complex> pump_factor_by_sum(const ArraySpec& arr,
                                        const pump::PumpSpec& pmp,
                                        const JsaGrid& grid, std::size_t q,
                                        const DecomposeOptions& opt) {
    const auto svals = grid_sums(grid);
    std::vector<Complex> c(svals.size());
    if (pump::is_cw(pmp)) {
        const double wp0 = std::get<pump::CwPump>(pmp).omega_p0;
        const Complex hp0q = pow_n(h_transfer(wp0, arr.pump), static_cast<unsigned>(q));
        for_each_index(svals.size(), opt.exec, [&](std::size_t k) {
            c[k] = hp0q * pow_n(h_transfer(svals[k] - wp0, arr.pump),
                                static_cast<unsigned>(q));
        });
        return c;
    }
    const auto sup = pump::pump_support(pmp);
    const FrequencyGrid pg = make_grid(0.5 * (sup.lo + sup.hi),
                                       0.5 * (sup.hi - sup.lo), opt.pump_points);
    std::vector<double> phi_p(pg.points);
    std::vector<Complex> hp(pg.points);
    for (std::size_t j = 0; j < pg.points; ++j) {
        phi_p[j] = pump::pump_amplitude(pmp, pg.node(j));
        hp[j] = h_transfer(pg.node(j), arr.pump);
    }
    for_each_index(svals.size(), opt.exec, [&](std::size_t k) {
        c[k] = pump_convolution_at(svals[k], static_cast<unsigned>(q), arr, pmp,
                                   pg, phi_p, hp);
    });
    return c;
}

}  // namespace

ArraySpec make_array(std::size_t n, double spacing, tcmt::ResonanceBand pump_band,
                     tcmt::ResonanceBand signal_band, tcmt::ResonanceBand idler_band,
                     double delta_k_bar) {
    if (n < 1) throw std::invalid_argument("ring count must be at least 1");
    if (spacing <= 0.0) throw std::invalid_argument("ring spacing must be positive");
    const double mismatch = std::abs(2.0 * pump_band.omega0 - signal_band.omega0 -
                                     idler_band.omega0);
    const double tol = std::min(signal_band.gamma_tot(), idler_band.gamma_tot());
    if (mismatch >= tol) {
        throw EnergyMismatchError("bands are not spectrally aligned: |2w_p - w_s - w_i| = " +
                                  std::to_string(mismatch) + " rad/s");
    }
    if (static_cast<double>(n) * spacing * std::abs(delta_k_bar) >=
        std::numbers::pi / 10.0) {
        throw CoherenceError("n*L*|dk| leaves the constructive-interference regime");
    }
    return ArraySpec{n, spacing, pump_band, signal_band, idler_band, delta_k_bar};
}

JsaGrid make_jsa_grid(const ArraySpec& arr, std::size_t points, double span_halfwidths) {
    const double half = span_halfwidths *
                        std::max(arr.signal.gamma_tot(), arr.idler.gamma_tot());
    return JsaGrid{make_grid(arr.signal.omega0, half, points),
                   make_grid(arr.idler.omega0, half, points)};
}

FrequencyGrid make_line_grid(const FrequencyGrid& signal_axis) {
    return make_grid(signal_axis.center, 4.0 * signal_axis.halfspan,
                     4 * (signal_axis.points - 1) + 1);
}

Complex source_kernel(std::size_t q, const ArraySpec& arr,
                      const std::array<double, 4>& omegas) {
    if (q < 1 || q > arr.n) throw std::invalid_argument("source index out of range");
    const double m = static_cast<double>(arr.n - q + 1);
    const Complex hs = h_transfer(omegas[0], arr.signal);
    const Complex hi = h_transfer(omegas[1], arr.idler);
    const Complex hp3 = h_transfer(omegas[2], arr.pump);
    const Complex hp4 = h_transfer(omegas[3], arr.pump);
    if (arr.n <= 30) {
        return kernel_prefactor(arr, q) *
               pow_n(hp3, static_cast<unsigned>(q)) *
               pow_n(hp4, static_cast<unsigned>(q)) *
               pow_n(hs, static_cast<unsigned>(m)) *
               pow_n(hi, static_cast<unsigned>(m));
    }
    // Long chains: the individual factors over/underflow, but their product
    // does not; accumulate log magnitudes and phases instead.
    const Complex pair{-2.0 * std::sqrt(arr.signal.gamma_e * arr.idler.gamma_e), 0.0};
    const Complex pmp{-2.0 * arr.pump.gamma_e, 0.0};
    const Complex acc = static_cast<double>(arr.n - q) * std::log(pair) +
                        static_cast<double>(q - 1) * std::log(pmp) +
                        static_cast<double>(q) * (std::log(hp3) + std::log(hp4)) +
                        m * (std::log(hs) + std::log(hi));
    return std::exp(acc);
}

ComplexGrid2D phi_q(std::size_t q, const ArraySpec& arr, const pump::PumpSpec& pmp,
                    const JsaGrid& grid, Execution exec) {
    if (q < 1 || q > arr.n) throw std::invalid_argument("source index out of range");
    require_aligned(grid);
    DecomposeOptions opt;
    opt.exec = exec;
    const auto pref = source_prefactors(arr);
    const auto lp = axis_powers(arr, grid);
    const auto c = pump_factor_by_sum(arr, pmp, grid, q, opt);
    return assemble_phi(arr, grid, q, c, lp, pref[q - 1], exec);
}

SourceDecomposition decompose(const ArraySpec& arr, const pump::PumpSpec& pmp,
                              const JsaGrid& grid, const DecomposeOptions& opt) {
    require_aligned(grid);
    const std::size_t n = arr.n;
    SourceDecomposition dec;
    dec.cw = pump::is_cw(pmp);

    if (dec.cw) {
        const FrequencyGrid line = make_line_grid(grid.signal);
        const auto la = cw_line_amplitudes(arr, line);
        const double d = line.spacing();
        dec.brightness_raw.resize(n);
        dec.indistinguishability.assign(n, std::vector<Complex>(n));
        for (std::size_t j = 0; j < n; ++j) {
            dec.brightness_raw[j] = line_inner(la.a[j], la.a[j], d).real();
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!(dec.brightness_raw[j] > 0.0) ||
                !std::isfinite(dec.brightness_raw[j])) {
                throw DegenerateSourceError("source " + std::to_string(j + 1) +
                                            " has vanishing brightness");
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                const Complex ov = line_inner(la.a[j], la.a[k], d) /
                                   std::sqrt(dec.brightness_raw[j] * dec.brightness_raw[k]);
                dec.indistinguishability[j][k] = ov;
                dec.indistinguishability[k][j] = std::conj(ov);
            }
        }
        std::vector<Complex> total(line.points);
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t i = 0; i < line.points; ++i) total[i] += la.a[q][i];
        }
        dec.total_norm = line_inner(total, total, d).real();

        if (opt.keep_amplitudes) {
            const auto pref = source_prefactors(arr);
            const auto lp = axis_powers(arr, grid);
            for (std::size_t q = 1; q <= n; ++q) {
                const auto c = pump_factor_by_sum(arr, pmp, grid, q, opt);
                dec.phi.push_back(assemble_phi(arr, grid, q, c, lp, pref[q - 1], opt.exec));
            }
        }
        return dec;
    }

    const auto pref = source_prefactors(arr);
    const auto lp = axis_powers(arr, grid);
    std::vector<ComplexGrid2D> phis;
    phis.reserve(n);
    for (std::size_t q = 1; q <= n; ++q) {
        const auto c = pump_factor_by_sum(arr, pmp, grid, q, opt);
        phis.push_back(assemble_phi(arr, grid, q, c, lp, pref[q - 1], opt.exec));
    }

    dec.brightness_raw.resize(n);
    dec.indistinguishability.assign(n, std::vector<Complex>(n));
    for (std::size_t j = 0; j < n; ++j) {
        dec.brightness_raw[j] = grid_inner(phis[j], phis[j], opt.exec).real();
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!(dec.brightness_raw[j] > 0.0) || !std::isfinite(dec.brightness_raw[j])) {
            throw DegenerateSourceError("source " + std::to_string(j + 1) +
                                        " has vanishing brightness");
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            const Complex ov = grid_inner(phis[j], phis[k], opt.exec) /
                               std::sqrt(dec.brightness_raw[j] * dec.brightness_raw[k]);
            dec.indistinguishability[j][k] = ov;
            dec.indistinguishability[k][j] = std::conj(ov);
        }
    }
    ComplexGrid2D total(grid.signal, grid.idler);
    for (std::size_t q = 0; q < n; ++q) {
        for_each_index(total.rows(), opt.exec, [&](std::size_t k) {
            const std::size_t off = k * total.cols();
            for (std::size_t l = 0; l < total.cols(); ++l) {
                total.values[off + l] += phis[q].values[off + l];
            }
        });
    }
    dec.total_norm = grid_inner(total, total, opt.exec).real();
    if (opt.keep_amplitudes) dec.phi = std::move(phis);
    return dec;
}

double single_ring_brightness(const ArraySpec& arr, const pump::PumpSpec& pmp,
                              const JsaGrid& grid, const DecomposeOptions& opt) {
    ArraySpec one = arr;
    one.n = 1;
    DecomposeOptions o = opt;
    o.keep_amplitudes = false;
    return decompose(one, pmp, grid, o).brightness_raw[0];
}

std::vector<double> relative_brightness(const SourceDecomposition& dec,
                                        double single_ring_b) {
    if (!(single_ring_b > 0.0)) {
        throw std::invalid_argument("single-ring brightness must be positive");
    }
    std::vector<double> out(dec.brightness_raw.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = dec.brightness_raw[j] / single_ring_b;
    }
    return out;
}

double normalized_rate(const ArraySpec& arr, const pump::PumpSpec& pmp,
                       const JsaGrid& grid, const DecomposeOptions& opt) {
    DecomposeOptions o = opt;
    o.keep_amplitudes = false;
    const auto dec = decompose(arr, pmp, grid, o);
    return dec.total_norm / single_ring_brightness(arr, pmp, grid, o);
}

double rate_from_components(const SourceDecomposition& dec, double single_ring_b) {
    if (!(single_ring_b > 0.0)) {
        throw std::invalid_argument("single-ring brightness must be positive");
    }
    Complex sum{};
    const std::size_t n = dec.brightness_raw.size();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            sum += std::sqrt(dec.brightness_raw[j] * dec.brightness_raw[k]) *
                   dec.indistinguishability[j][k];
        }
    }
    return sum.real() / single_ring_b;
}

double incoherent_reference_rate(const SourceDecomposition& dec, double single_ring_b) {
    if (!(single_ring_b > 0.0)) {
        throw std::invalid_argument("single-ring brightness must be positive");
    }
    double sum = 0.0;
    for (double b : dec.brightness_raw) sum += b;
    return sum / single_ring_b;
}

}  // namespace ringfwm::jsa
