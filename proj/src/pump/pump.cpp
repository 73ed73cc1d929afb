#include "ringfwm/pump/pump.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/units.hpp"

namespace ringfwm::pump {

namespace {

double gaussian_amplitude(const GaussianPump& g, double omega) {
    // |φ|² = c2 · exp(-4 ln2 d²/fwhm²): FWHM g.fwhm, unit integral.
    const double c2 = 2.0 * std::sqrt(std::numbers::ln2 / std::numbers::pi) / g.fwhm;
    const double d = omega - g.omega_p0;
    return std::sqrt(c2) *
           std::exp(-2.0 * std::numbers::ln2 * d * d / (g.fwhm * g.fwhm));
}

double tabulated_amplitude(const TabulatedPump& t, double omega) {
    if (omega <= t.omega.front() || omega >= t.omega.back()) {
        if (omega == t.omega.front()) return t.amplitude.front();
        if (omega == t.omega.back()) return t.amplitude.back();
        return 0.0;
    }
    const auto it = std::upper_bound(t.omega.begin(), t.omega.end(), omega);
    const std::size_t i = static_cast<std::size_t>(it - t.omega.begin()) - 1;
    const double f = (omega - t.omega[i]) / (t.omega[i + 1] - t.omega[i]);
    return t.amplitude[i] + f * (t.amplitude[i + 1] - t.amplitude[i]);
}

// Exact integral of the squared piecewise-linear amplitude.
double tabulated_power_integral(const TabulatedPump& t) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < t.omega.size(); ++i) {
        const double a = t.amplitude[i];
        const double b = t.amplitude[i + 1];
        const double w = t.omega[i + 1] - t.omega[i];
        total += w * (a * a + a * b + b * b) / 3.0;
    }
    return total;
}

}  // namespace

PumpSpec make_cw_pump(double omega_p0) {
    if (omega_p0 <= 0.0) throw std::invalid_argument("pump center must be positive");
    return CwPump{omega_p0};
}

PumpSpec make_gaussian_pump(double omega_p0, double fwhm) {
    if (omega_p0 <= 0.0) throw std::invalid_argument("pump center must be positive");
    if (fwhm <= 0.0) throw std::invalid_argument("pump fwhm must be positive");
    return GaussianPump{omega_p0, fwhm};
}

PumpSpec make_tabulated_pump(std::vector<double> omega, std::vector<double> amplitude,
                             bool amplitudes_are_power) {
    if (omega.size() != amplitude.size()) {
        throw std::invalid_argument("tabulated pump arrays differ in length");
    }
    if (omega.size() < 8) {
        throw std::invalid_argument("tabulated pump needs at least 8 samples");
    }
    for (std::size_t i = 0; i + 1 < omega.size(); ++i) {
        if (omega[i + 1] <= omega[i]) {
            throw std::invalid_argument("tabulated pump frequencies must increase strictly");
        }
    }
    bool positive = false;
    for (double& a : amplitude) {
        if (a < 0.0) throw std::invalid_argument("tabulated pump amplitudes must be non-negative");
        if (amplitudes_are_power) a = std::sqrt(a);
        if (a > 0.0) positive = true;
    }
    if (!positive) throw std::invalid_argument("tabulated pump has no positive amplitude");

    TabulatedPump t{std::move(omega), std::move(amplitude)};
    const double norm = tabulated_power_integral(t);
    const double scale = 1.0 / std::sqrt(norm);
    for (double& a : t.amplitude) a *= scale;
    return t;
}

PumpSpec load_tabulated_pump(const std::string& path, bool amplitudes_are_power) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open pump file: " + path);
    std::vector<double> lambda_nm, amp;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double l, a;
        if (!(ss >> l)) continue;  // blank or comment-only line
        if (!(ss >> a)) throw ParseError("pump file row needs two columns", lineno);
        lambda_nm.push_back(l);
        amp.push_back(a);
    }
    // Wavelength order flips under conversion to angular frequency.
    std::vector<std::pair<double, double>> rows(lambda_nm.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = {omega_from_wavelength_nm(lambda_nm[i]), amp[i]};
    }
    std::sort(rows.begin(), rows.end());
    std::vector<double> omega(rows.size()), amplitude(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        omega[i] = rows[i].first;
        amplitude[i] = rows[i].second;
    }
    return make_tabulated_pump(std::move(omega), std::move(amplitude), amplitudes_are_power);
}

bool is_cw(const PumpSpec& p) { return std::holds_alternative<CwPump>(p); }

double pump_center(const PumpSpec& p) {
    if (const auto* cw = std::get_if<CwPump>(&p)) return cw->omega_p0;
    if (const auto* g = std::get_if<GaussianPump>(&p)) return g->omega_p0;
    const auto& t = std::get<TabulatedPump>(p);
    // Amplitude-weighted centroid of the tabulated spectrum.
    double wsum = 0.0, asum = 0.0;
    for (std::size_t i = 0; i < t.omega.size(); ++i) {
        const double p2 = t.amplitude[i] * t.amplitude[i];
        wsum += t.omega[i] * p2;
        asum += p2;
    }
    return wsum / asum;
}

double pump_amplitude(const PumpSpec& p, double omega) {
    if (is_cw(p)) {
        throw ModeMismatchError("a CW pump has no finite spectral density");
    }
    if (const auto* g = std::get_if<GaussianPump>(&p)) return gaussian_amplitude(*g, omega);
    return tabulated_amplitude(std::get<TabulatedPump>(p), omega);
}

PumpSpec default_pulsed_pump(const tcmt::ResonanceBand& pump_band) {
    return make_gaussian_pump(pump_band.omega0, 4.0 * pump_band.gamma_tot());
}

PumpSupport pump_support(const PumpSpec& p) {
    if (const auto* cw = std::get_if<CwPump>(&p)) return {cw->omega_p0, cw->omega_p0};
    if (const auto* g = std::get_if<GaussianPump>(&p)) {
        // Amplitude below 5e-8 of peak beyond 3.5 power-FWHMs.
        return {g->omega_p0 - 3.5 * g->fwhm, g->omega_p0 + 3.5 * g->fwhm};
    }
    const auto& t = std::get<TabulatedPump>(p);
    return {t.omega.front(), t.omega.back()};
}

}  // namespace ringfwm::pump
