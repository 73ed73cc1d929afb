#include "ringfwm/scaling/scaling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ringfwm::scaling {

namespace {

void check_td(double t_d) {
    if (!(t_d > 0.0) || t_d > 1.0) {
        throw std::invalid_argument("drop transmittance must lie in (0, 1]");
    }
}

void check_n(std::size_t n) {
    if (n < 1) throw std::invalid_argument("chain length must be at least 1");
}

double nd(std::size_t n) { return static_cast<double>(n); }

}  // namespace

std::string process_name(Process p) {
    switch (p) {
        case Process::stimulated: return "stimulated";
        case Process::spontaneous_unfiltered: return "spontaneous_unfiltered";
        case Process::incoherent: return "incoherent";
        case Process::spontaneous_full_cw: return "spontaneous_cw";
        case Process::spontaneous_full_pulsed: return "spontaneous_pulsed";
        case Process::asymptotic: return "asymptotic";
    }
    return "unknown";
}

double xi_stim(std::size_t n, double t_d) {
    check_n(n);
    check_td(t_d);
    if (t_d == 1.0) return nd(n) * nd(n);
    const double geo = (1.0 - std::pow(t_d, nd(n))) / (1.0 - t_d);
    return std::pow(t_d, nd(n) - 1.0) * geo * geo;
}

double xi_spont_unfiltered(std::size_t n, double t_d) {
    check_n(n);
    check_td(t_d);
    return std::pow(t_d, nd(n) - 1.0) * nd(n) * nd(n);
}

double xi_incoherent(std::size_t n, double t_d) {
    check_n(n);
    check_td(t_d);
    if (t_d == 1.0) return nd(n);
    return std::pow(t_d, nd(n) - 1.0) * (1.0 - std::pow(t_d, 2.0 * nd(n))) /
           (1.0 - t_d * t_d);
}

double amplitude_sum_oracle(std::size_t n, double t_d, OracleProcess process) {
    check_n(n);
    check_td(t_d);
    // Ring j's contribution to the field at the last drop port. Stimulated:
    // the seed and pump attenuate up to ring j, the generated signal
    // attenuates over the remaining n-j drops. Spontaneous: pump attenuation
    // up to ring j exactly cancels the pair attenuation after it, leaving a
    // j-independent amplitude.
    std::vector<double> amps(n);
    switch (process) {
        case OracleProcess::stimulated:
            for (std::size_t j = 1; j <= n; ++j) {
                amps[j - 1] = std::pow(t_d, (nd(n) - 3.0) / 2.0 + nd(j));
            }
            break;
        case OracleProcess::spontaneous:
            for (std::size_t j = 1; j <= n; ++j) {
                amps[j - 1] = std::pow(t_d, (nd(n) - 1.0) / 2.0);
            }
            break;
        case OracleProcess::incoherent:
            for (std::size_t j = 1; j <= n; ++j) {
                amps[j - 1] = std::pow(t_d, (nd(n) - 3.0) / 2.0 + nd(j));
            }
            break;
        default:
            throw std::invalid_argument("unknown oracle process");
    }
    double value;
    if (process == OracleProcess::incoherent) {
        value = 0.0;
        for (double a : amps) value += a * a;
    } else {
        double field = 0.0;
        for (double a : amps) field += a;
        value = field * field;
    }
    // n = 1 reference has a single unit amplitude for every process.
    return value;
}

double lorentzian_power_integral(std::size_t i, double gamma_tot) {
    if (i < 1) throw std::invalid_argument("power must be at least 1");
    if (gamma_tot <= 0.0) throw std::invalid_argument("gamma_tot must be positive");
    return std::sqrt(std::numbers::pi) * gamma_tot *
           std::exp(std::lgamma(nd(i) - 0.5) - std::lgamma(nd(i)));
}

double lorentzian_power_integral_approx(std::size_t i, double gamma_tot) {
    if (i < 1) throw std::invalid_argument("power must be at least 1");
    return gamma_tot * std::sqrt(std::numbers::pi / nd(i));
}

namespace {

double filter_sum(std::size_t n) {
    double first = 0.0;
    for (std::size_t i = 1; i <= n; ++i) first += nd(i) / std::sqrt(nd(i) + 1.0);
    double second = 0.0;
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        second += nd(i) / std::sqrt(2.0 * nd(n) - nd(i) + 1.0);
    }
    return first + second;
}

}  // namespace

double asymptotic_beta2(std::size_t n, double t_d) {
    return std::exp(log_asymptotic_beta2(n, t_d));
}

double log_asymptotic_beta2(std::size_t n, double t_d) {
    check_n(n);
    check_td(t_d);
    return 2.0 * nd(n) * std::log(t_d) + std::log(filter_sum(n));
}

double first_sum_integral_approx(std::size_t n) {
    check_n(n);
    return (2.0 / 3.0) * std::sqrt(nd(n) + 1.0) * (nd(n) - 2.0) + 4.0 / 3.0;
}

double asymptotic_exponent(std::size_t n_min, std::size_t n_max, double t_d) {
    if (n_min < 10 || n_max <= n_min) {
        throw std::invalid_argument("need n_max > n_min >= 10");
    }
    if (n_max - n_min < 2) throw std::invalid_argument("need at least 3 points");
    check_td(t_d);
    // Slope of the de-lossed log rate against log n.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double count = nd(n_max - n_min + 1);
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const double x = std::log(nd(n));
        const double y = log_asymptotic_beta2(n, t_d) - 2.0 * nd(n) * std::log(t_d);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

double td_from_xi(double xi) {
    if (xi <= 0.0) throw std::invalid_argument("xi must be positive");
    const double root = 1.0 - 1.0 / (2.0 * (1.0 + xi));
    return root * root;
}

double td_from_xi_tcmt(double xi) {
    if (xi <= 0.0) throw std::invalid_argument("xi must be positive");
    const double root = 2.0 * xi / (2.0 * xi + 1.0);
    return root * root;
}

}  // namespace ringfwm::scaling
