#include "ringfwm/fit/fit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/units.hpp"

namespace ringfwm::fit {

GoldenResult golden_section_minimize(const std::function<double(double)>& f,
                                     double lo, double hi, double x_tol,
                                     std::size_t max_iter) {
    if (!(hi > lo)) throw std::invalid_argument("bracket must satisfy hi > lo");
    if (!(x_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    std::size_t evals = 2;
    for (std::size_t it = 0; it < max_iter && (b - a) > x_tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    GoldenResult res;
    res.x = 0.5 * (a + b);
    res.f = f(res.x);
    res.evaluations = evals + 1;
    return res;
}

RateCurve make_rate_curve(RateProcess process, std::vector<RatePoint> points) {
    if (points.size() < 3) {
        throw std::invalid_argument("a rate curve needs at least 3 points");
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i + 1].n <= points[i].n) {
            throw std::invalid_argument("chain lengths must increase strictly");
        }
    }
    if (points.front().n != 1 || std::abs(points.front().rate - 1.0) > 1e-9) {
        throw std::invalid_argument("curve must be normalized: first point (1, 1)");
    }
    return RateCurve{process, std::move(points)};
}

RateCurve load_rate_curve_csv(const std::string& path, RateProcess process) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open rate-curve file: " + path);
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError("rate-curve file is empty", 1);
    ++lineno;
    std::vector<RatePoint> pts;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 2) throw ParseError("expected N,rate[,sigma]", lineno);
        RatePoint p;
        try {
            p.n = std::stoul(cells[0]);
            p.rate = std::stod(cells[1]);
            if (cells.size() >= 3 && !cells[2].empty()) p.sigma = std::stod(cells[2]);
        } catch (const std::exception&) {
            throw ParseError("malformed number", lineno);
        }
        pts.push_back(p);
    }
    try {
        return make_rate_curve(process, std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
    }
}

namespace {

jsa::ArraySpec array_for_td(const TdFitConfig& cfg, std::size_t n, double t_d) {
    return jsa::make_array(
        n, cfg.spacing,
        tcmt::band_from_td(cfg.omega_p0, cfg.q_tot_pump, t_d, tcmt::BandRole::pump),
        tcmt::band_from_td(cfg.omega_s0, cfg.q_tot_signal, t_d, tcmt::BandRole::signal),
        tcmt::band_from_td(cfg.omega_i0, cfg.q_tot_idler, t_d, tcmt::BandRole::idler));
}

std::vector<RatePoint> model_curve_at(const RateCurve& curve, const TdFitConfig& cfg,
                                      double t_d, std::size_t grid_points) {
    std::vector<RatePoint> out;
    out.reserve(curve.points.size());
    for (const auto& pt : curve.points) {
        RatePoint mp;
        mp.n = pt.n;
        if (curve.process == RateProcess::stimulated) {
            mp.rate = scaling::xi_stim(pt.n, t_d);
        } else {
            const auto arr = array_for_td(cfg, pt.n, t_d);
            const auto grid = jsa::make_jsa_grid(arr, grid_points);
            const auto pmp = curve.process == RateProcess::spontaneous_cw
                                 ? pump::make_cw_pump(cfg.omega_p0)
                                 : pump::make_gaussian_pump(
                                       cfg.omega_p0, 2.0 * cfg.pump_fwhm_scale *
                                                         arr.pump.gamma_tot());
            mp.rate = jsa::normalized_rate(arr, pmp, grid);
        }
        out.push_back(mp);
    }
    return out;
}

double curve_sse(const RateCurve& curve, const std::vector<RatePoint>& model) {
    double sse = 0.0;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const double r = model[i].rate - curve.points[i].rate;
        sse += r * r;
    }
    return sse;
}

}  // namespace

FitResult fit_td(const RateCurve& curve, const TdFitConfig& cfg) {
    std::size_t evals = 0;
    const auto objective = [&](double t_d) {
        ++evals;
        return curve_sse(curve, model_curve_at(curve, cfg, t_d, cfg.search_grid_points));
    };
    GoldenResult g;
    try {
        g = golden_section_minimize(objective, cfg.t_d_lo, cfg.t_d_hi, cfg.t_d_tol);
    } catch (const std::invalid_argument& e) {
        throw NoMinimumError(e.what());
    }
    FitResult res;
    res.t_d_fit = g.x;
    res.model_curve = model_curve_at(curve, cfg, g.x, cfg.final_grid_points);
    res.residual = curve_sse(curve, res.model_curve);
    res.evaluations = evals;
    return res;
}

std::vector<SpectrumSample> load_through_spectrum_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open spectrum file: " + path);
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError("spectrum file is empty", 1);
    ++lineno;
    std::vector<SpectrumSample> samples;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError("expected wavelength_nm,transmittance", lineno);
        }
        try {
            SpectrumSample s;
            s.omega = omega_from_wavelength_nm(std::stod(line.substr(0, comma)));
            s.transmittance = std::stod(line.substr(comma + 1));
            samples.push_back(s);
        } catch (const std::exception&) {
            throw ParseError("malformed number", lineno);
        }
    }
    std::sort(samples.begin(), samples.end(),
              [](const SpectrumSample& a, const SpectrumSample& b) {
                  return a.omega < b.omega;
              });
    return samples;
}

namespace {

double through_model(double w, double w0, double ge, double gtot) {
    return std::norm(1.0 - 2.0 * ge / Complex{gtot, w - w0});
}

double spectrum_sse(const std::vector<SpectrumSample>& s, double w0, double ge,
                    double gtot) {
    double sse = 0.0;
    for (const auto& p : s) {
        const double r = through_model(p.omega, w0, ge, gtot) - p.transmittance;
        sse += r * r;
    }
    return sse;
}

}  // namespace

ThroughFitResult fit_through_spectrum(const std::vector<SpectrumSample>& samples) {
    if (samples.size() < 10) {
        throw std::invalid_argument("need at least 10 spectrum samples");
    }
    std::size_t dip = 0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].transmittance < samples[dip].transmittance) dip = i;
    }
    const double t_min = samples[dip].transmittance;
    if (dip == 0 || dip + 1 == samples.size() || t_min > 0.9) {
        throw NoResonanceError("no resonance dip inside the sampled span");
    }
    // Half-depth crossings sit at ±γ_tot for the through line shape.
    const double half = 0.5 * (1.0 + t_min);
    std::size_t li = dip, ri = dip;
    while (li > 0 && samples[li].transmittance < half) --li;
    while (ri + 1 < samples.size() && samples[ri].transmittance < half) ++ri;
    if (samples[li].transmittance < half || samples[ri].transmittance < half) {
        throw NoResonanceError("dip extends beyond the sampled span");
    }
    double w0 = samples[dip].omega;
    double gtot = 0.5 * (samples[ri].omega - samples[li].omega);
    double ge = 0.5 * (1.0 - std::sqrt(std::max(t_min, 0.0))) * gtot;
    if (!(gtot > 0.0)) throw NoResonanceError("dip width could not be bracketed");
    ge = std::clamp(ge, 1e-6 * gtot, 0.5 * gtot);

    const double tol = 1e-10 * gtot;
    for (int pass = 0; pass < 10; ++pass) {
        w0 = golden_section_minimize(
                 [&](double x) { return spectrum_sse(samples, x, ge, gtot); },
                 w0 - gtot, w0 + gtot, tol)
                 .x;
        gtot = golden_section_minimize(
                   [&](double x) { return spectrum_sse(samples, w0, ge, x); },
                   gtot / 4.0, gtot * 4.0, tol)
                   .x;
        // The through line shape depends on gamma_e only through
        // x(2-x), x = 2 gamma_e/gamma_tot, so the under- and overcoupled
        // branches are exactly degenerate. Search the physical branch
        // (gamma_i >= 0, x <= 1) only.
        ge = golden_section_minimize(
                 [&](double x) { return spectrum_sse(samples, w0, x, gtot); },
                 1e-6 * gtot, 0.5 * gtot, tol)
                 .x;
    }

    ThroughFitResult res;
    double gamma_i = gtot - 2.0 * ge;
    if (gamma_i < 0.0) {
        // Noise can push the dip marginally below full extinction.
        res.gamma_i_clamped = true;
        gamma_i = 0.0;
        ge = gtot / 2.0;
    }
    res.band = tcmt::make_band(tcmt::BandRole::pump, w0, ge, gamma_i);
    res.residual = spectrum_sse(samples, w0, ge, gtot);
    return res;
}

double power_law_slope(const std::vector<std::pair<double, double>>& power_rate) {
    if (power_rate.size() < 3) {
        throw std::invalid_argument("need at least 3 points for a slope");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [p, r] : power_rate) {
        if (!(p > 0.0) || !(r > 0.0)) {
            throw std::invalid_argument("power and rate must be positive");
        }
        const double x = std::log(p);
        const double y = std::log(r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(power_rate.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ringfwm::fit
