#include "ringfwm/incoherent/incoherent.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/quadrature.hpp"

namespace ringfwm::incoherent {

MeasuredRings make_measured_rings(std::vector<double> counts,
                                  std::optional<std::vector<double>> sigmas,
                                  double p1_mw, double t_d) {
    if (counts.empty()) throw std::invalid_argument("counts must not be empty");
    for (double c : counts) {
        if (c < 0.0) throw std::invalid_argument("counts must be non-negative");
    }
    if (sigmas && sigmas->size() != counts.size()) {
        throw std::invalid_argument("sigma list length must match counts");
    }
    if (!(t_d > 0.0) || t_d > 1.0) {
        throw std::invalid_argument("schedule transmittance must lie in (0, 1]");
    }
    if (p1_mw <= 0.0) throw std::invalid_argument("input power must be positive");
    return MeasuredRings{std::move(counts), std::move(sigmas), p1_mw, t_d};
}

MeasuredRings load_counts_csv(const std::string& path, double p1_mw, double t_d) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open counts file: " + path);
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError("counts file is empty", 1);
    ++lineno;  // header row consumed
    std::vector<double> counts;
    std::vector<double> sigmas;
    bool any_sigma = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 2) throw ParseError("expected ring_index,counts_per_s[,sigma]", lineno);
        try {
            const std::size_t idx = std::stoul(cells[0]);
            if (idx != counts.size() + 1) {
                throw ParseError("ring indices must run 1,2,...", lineno);
            }
            counts.push_back(std::stod(cells[1]));
            if (cells.size() >= 3 && !cells[2].empty()) {
                sigmas.push_back(std::stod(cells[2]));
                any_sigma = true;
            } else {
                sigmas.push_back(0.0);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("malformed number", lineno);
        }
    }
    return make_measured_rings(std::move(counts),
                               any_sigma ? std::optional(std::move(sigmas))
                                         : std::nullopt,
                               p1_mw, t_d);
}

namespace {

// ∫ |h_s^m(ω₁) h_i^m(2ω_p0-ω₁)|² dω₁ over the grid.
double filtered_pair_norm(std::size_t m, const tcmt::ResonanceBand& bs,
                          const tcmt::ResonanceBand& bi, double wp0,
                          const FrequencyGrid& grid) {
    const std::size_t p = grid.points;
    const auto term = [&](std::size_t i) {
        const double w1 = grid.node(i);
        const Complex prod = pow_n(tcmt::h_transfer(w1, bs), static_cast<unsigned>(m)) *
                             pow_n(tcmt::h_transfer(2.0 * wp0 - w1, bi),
                                   static_cast<unsigned>(m));
        return std::norm(prod);
    };
    double sum = pairwise_eval<double>(0, p, term);
    sum -= 0.5 * (term(0) + term(p - 1));
    return sum * grid.spacing();
}

}  // namespace

double pair_transmittance(std::size_t j, std::size_t n,
                          const tcmt::ResonanceBand& signal,
                          const tcmt::ResonanceBand& idler, double pump_omega0,
                          const FrequencyGrid& grid) {
    if (j < 1 || j > n) throw std::invalid_argument("ring index out of range");
    const std::size_t m = n - j + 1;
    const double coupling = std::pow(4.0 * signal.gamma_e * idler.gamma_e,
                                     static_cast<double>(n - j));
    return coupling * filtered_pair_norm(m, signal, idler, pump_omega0, grid) /
           filtered_pair_norm(1, signal, idler, pump_omega0, grid);
}

double pump_power_schedule(double p1_mw, std::size_t j, double t_d) {
    if (p1_mw <= 0.0) throw std::invalid_argument("input power must be positive");
    if (j < 1) throw std::invalid_argument("ring index must be at least 1");
    return p1_mw * std::pow(t_d, static_cast<double>(j - 1));
}

scaling::ScalingSeries incoherent_rate(const MeasuredRings& meas,
                                       const jsa::ArraySpec& arr,
                                       const FrequencyGrid& grid) {
    if (meas.counts.size() < arr.n) {
        throw std::invalid_argument("need counts for every ring in the chain");
    }
    if (!(meas.counts[0] > 0.0)) {
        throw std::invalid_argument("ring 1 counts must be positive for normalization");
    }
    scaling::ScalingSeries series;
    series.process = scaling::Process::incoherent;
    series.t_d = meas.t_d;
    const double r1 = meas.counts[0];
    for (std::size_t len = 1; len <= arr.n; ++len) {
        double total = 0.0;
        double var = 0.0;
        for (std::size_t j = 1; j <= len; ++j) {
            const double tjn = pair_transmittance(j, len, arr.signal, arr.idler,
                                                  arr.pump.omega0, grid);
            total += tjn * meas.counts[j - 1];
            if (meas.sigmas) {
                const double s = tjn * (*meas.sigmas)[j - 1];
                var += s * s;
            }
        }
        series.values[len] = total / r1;
        if (meas.sigmas) series.sigmas[len] = std::sqrt(var) / r1;
    }
    return series;
}

}  // namespace ringfwm::incoherent
