#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/units.hpp"
#include "ringfwm/fit/fit.hpp"

using namespace ringfwm;
using namespace ringfwm::fit;

namespace {

TdFitConfig device_fit_config() {
    TdFitConfig fc;
    fc.omega_p0 = omega_from_wavelength_nm(1561.25);
    fc.omega_s0 = omega_from_wavelength_nm(1571.2);
    fc.omega_i0 = 2.0 * fc.omega_p0 - fc.omega_s0;
    fc.q_tot_pump = 3.9e4;
    fc.q_tot_signal = 3.7e4;
    fc.q_tot_idler = 4.2e4;
    return fc;
}

RateCurve synthetic_curve(RateProcess proc, double td, const TdFitConfig& fc,
                          std::size_t grid_points) {
    std::vector<RatePoint> pts;
    for (std::size_t n = 1; n <= 5; ++n) {
        RatePoint p;
        p.n = n;
        if (proc == RateProcess::stimulated) {
            p.rate = scaling::xi_stim(n, td);
        } else {
            const auto arr = jsa::make_array(
                n, fc.spacing,
                tcmt::band_from_td(fc.omega_p0, fc.q_tot_pump, td, tcmt::BandRole::pump),
                tcmt::band_from_td(fc.omega_s0, fc.q_tot_signal, td,
                                   tcmt::BandRole::signal),
                tcmt::band_from_td(fc.omega_i0, fc.q_tot_idler, td,
                                   tcmt::BandRole::idler));
            const auto grid = jsa::make_jsa_grid(arr, grid_points);
            const auto pmp = proc == RateProcess::spontaneous_cw
                                 ? pump::make_cw_pump(fc.omega_p0)
                                 : pump::make_gaussian_pump(
                                       fc.omega_p0, 4.0 * arr.pump.gamma_tot());
            p.rate = jsa::normalized_rate(arr, pmp, grid);
        }
        pts.push_back(p);
    }
    pts[0].rate = 1.0;
    return make_rate_curve(proc, std::move(pts));
}

}  // namespace

TEST_CASE("golden section finds a quadratic minimum") {
    const auto res = golden_section_minimize(
        [](double x) { return (x - 0.3) * (x - 0.3) + 2.0; }, -1.0, 1.0, 1e-10);
    CHECK(res.x == doctest::Approx(0.3).epsilon(1e-7));
    CHECK(res.f == doctest::Approx(2.0));
    CHECK_THROWS_AS(golden_section_minimize([](double x) { return x; }, 1.0, 0.0, 1e-6),
                    std::invalid_argument);
}

TEST_CASE("rate curve validation") {
    CHECK_THROWS_AS(make_rate_curve(RateProcess::stimulated,
                                    {{1, 1.0, {}}, {2, 2.0, {}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_rate_curve(RateProcess::stimulated,
                                    {{1, 1.2, {}}, {2, 2.0, {}}, {3, 2.5, {}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_rate_curve(RateProcess::stimulated,
                                    {{1, 1.0, {}}, {3, 2.0, {}}, {3, 2.5, {}}}),
                    std::invalid_argument);
}

TEST_CASE("stimulated recovery at several ground truths") {
    const auto fc = device_fit_config();
    for (double td : {0.7, 0.75, 0.8}) {
        const auto curve = synthetic_curve(RateProcess::stimulated, td, fc, 0);
        const auto res = fit_td(curve, fc);
        CHECK(res.t_d_fit == doctest::Approx(td).epsilon(1e-3));
        CHECK(res.residual < 1e-7);
    }
}

TEST_CASE("fitting is deterministic run to run") {
    const auto fc = device_fit_config();
    const auto curve = synthetic_curve(RateProcess::stimulated, 0.75, fc, 0);
    const auto a = fit_td(curve, fc);
    const auto b = fit_td(curve, fc);
    CHECK(a.t_d_fit == b.t_d_fit);
    CHECK(a.residual == b.residual);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("stimulated objective is unimodal over the search bracket") {
    const auto fc = device_fit_config();
    const auto curve = synthetic_curve(RateProcess::stimulated, 0.75, fc, 0);
    const auto sse = [&](double td) {
        double s = 0.0;
        for (const auto& p : curve.points) {
            const double r = scaling::xi_stim(p.n, td) - p.rate;
            s += r * r;
        }
        return s;
    };
    // Dense scan: direction changes sign exactly once.
    int sign_changes = 0;
    double prev = sse(0.3);
    bool falling = true;
    for (int i = 1; i <= 51; ++i) {
        const double td = 0.3 + (0.999 - 0.3) * i / 51.0;
        const double cur = sse(td);
        if (falling && cur > prev) {
            falling = false;
            ++sign_changes;
        } else if (!falling && cur < prev) {
            ++sign_changes;
        }
        prev = cur;
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("spontaneous CW recovery") {
    auto fc = device_fit_config();
    fc.search_grid_points = 401;
    fc.final_grid_points = 801;
    const auto curve = synthetic_curve(RateProcess::spontaneous_cw, 0.8, fc, 801);
    const auto res = fit_td(curve, fc);
    CHECK(res.t_d_fit == doctest::Approx(0.8).epsilon(1e-2));
}

TEST_CASE("spontaneous pulsed recovery") {
    auto fc = device_fit_config();
    fc.search_grid_points = 201;
    fc.final_grid_points = 201;
    const auto curve = synthetic_curve(RateProcess::spontaneous_pulsed, 0.75, fc, 201);
    const auto res = fit_td(curve, fc);
    CHECK(res.t_d_fit == doctest::Approx(0.75).epsilon(1e-2));
}

TEST_CASE("rate curve CSV round trip and errors") {
    const char* path = "curve_test.csv";
    {
        std::ofstream out(path);
        out << "N,rate\n1,1\n2,2.296875\n3,3.00805664\n";
    }
    const auto curve = load_rate_curve_csv(path, RateProcess::stimulated);
    CHECK(curve.points.size() == 3);
    CHECK(curve.points[1].rate == doctest::Approx(2.296875));
    std::remove(path);

    {
        std::ofstream out(path);
        out << "N,rate\n1,1\nbad,2\n3,3\n";
    }
    CHECK_THROWS_AS(load_rate_curve_csv(path, RateProcess::stimulated), ParseError);
    std::remove(path);
}

TEST_CASE("through-port fit: noiseless recovery off the node grid") {
    const double w0 = omega_from_wavelength_nm(1551.4) + 0.137e10;  // off-grid center
    const double gtot = 1.4454e10;
    const double ge = 0.4321 * gtot;
    std::vector<SpectrumSample> samples;
    for (int i = 0; i <= 240; ++i) {
        const double w = w0 - 6.0 * gtot + (12.0 * gtot) * i / 240.0 + 0.3e9;
        samples.push_back({w, std::norm(1.0 - 2.0 * ge / Complex{gtot, w - w0})});
    }
    const auto res = fit_through_spectrum(samples);
    CHECK(res.band.omega0 == doctest::Approx(w0).epsilon(1e-9));
    CHECK(res.band.gamma_e == doctest::Approx(ge).epsilon(1e-6));
    CHECK(res.band.gamma_tot() == doctest::Approx(gtot).epsilon(1e-6));
    CHECK_FALSE(res.gamma_i_clamped);
}

TEST_CASE("through-port fit: fully coupled dip recovers zero intrinsic loss") {
    const double w0 = 1.2e15;
    const double gtot = 1.5e10;
    std::vector<SpectrumSample> samples;
    for (int i = 0; i <= 200; ++i) {
        const double w = w0 - 5.0 * gtot + (10.0 * gtot) * i / 200.0;
        samples.push_back({w, std::norm(1.0 - gtot / Complex{gtot, w - w0})});
    }
    const auto res = fit_through_spectrum(samples);
    CHECK(res.band.gamma_i <= 1e-4 * gtot);
}

TEST_CASE("through-port fit: 2% loaded-Q recovery under 1% noise") {
    const double w0 = 1.2e15;
    const double gtot = 1.5e10;
    const double ge = 0.44 * gtot;
    std::mt19937 rng(20240817);
    std::normal_distribution<double> noise(0.0, 0.01);
    int ok = 0;
    const int draws = 100;
    for (int d = 0; d < draws; ++d) {
        std::vector<SpectrumSample> samples;
        for (int i = 0; i <= 160; ++i) {
            const double w = w0 - 5.0 * gtot + (10.0 * gtot) * i / 160.0;
            const double t = std::norm(1.0 - 2.0 * ge / Complex{gtot, w - w0});
            samples.push_back({w, t + noise(rng)});
        }
        const auto res = fit_through_spectrum(samples);
        if (std::abs(res.band.gamma_tot() - gtot) <= 0.02 * gtot) ++ok;
    }
    CHECK(ok >= 95);
}

TEST_CASE("through-port fit rejects featureless data") {
    std::vector<SpectrumSample> flat;
    for (int i = 0; i < 50; ++i) flat.push_back({1e15 + i * 1e9, 0.995});
    CHECK_THROWS_AS(fit_through_spectrum(flat), NoResonanceError);
    CHECK_THROWS_AS(fit_through_spectrum({{1e15, 0.5}}), std::invalid_argument);
}

TEST_CASE("power-law slope") {
    std::vector<std::pair<double, double>> quad, lin, noisy;
    std::mt19937 rng(99);
    std::lognormal_distribution<double> jitter(0.0, 0.05);
    for (double p : {0.2, 0.4, 0.8, 1.6, 3.2}) {
        quad.push_back({p, 7.0 * p * p});
        lin.push_back({p, 3.0 * p});
        noisy.push_back({p, 7.0 * p * p * jitter(rng)});
    }
    CHECK(power_law_slope(quad) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(power_law_slope(lin) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(power_law_slope(noisy) - 2.0) < 0.1);
    CHECK_THROWS_AS(power_law_slope({{1.0, 1.0}, {2.0, 4.0}}), std::invalid_argument);
    CHECK_THROWS_AS(power_law_slope({{1.0, 1.0}, {2.0, -4.0}, {3.0, 9.0}}),
                    std::invalid_argument);
}

TEST_CASE("through-spectrum CSV loads, sorts by frequency, and fits") {
    const double w0 = omega_from_wavelength_nm(1551.4);
    const double gtot = 1.4e10;
    const double ge = 0.43 * gtot;
    const char* path = "spectrum_test.csv";
    {
        std::ofstream out(path);
        out.precision(12);
        out << "wavelength_nm,transmittance\n";
        for (int i = 0; i <= 120; ++i) {
            const double w = w0 - 5.0 * gtot + (10.0 * gtot) * i / 120.0;
            out << wavelength_nm_from_omega(w) << ','
                << std::norm(1.0 - 2.0 * ge / Complex{gtot, w - w0}) << "\n";
        }
    }
    const auto samples = load_through_spectrum_csv(path);
    REQUIRE(samples.size() == 121);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        CHECK(samples[i].omega < samples[i + 1].omega);
    }
    const auto res = fit_through_spectrum(samples);
    CHECK(res.band.gamma_tot() == doctest::Approx(gtot).epsilon(1e-4));
    std::remove(path);

    {
        std::ofstream out(path);
        out << "wavelength_nm,transmittance\n1551.4;0.5\n";
    }
    CHECK_THROWS_AS(load_through_spectrum_csv(path), ParseError);
    std::remove(path);
}
