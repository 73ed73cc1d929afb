#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/units.hpp"
#include "ringfwm/incoherent/incoherent.hpp"
#include "support/oracles.hpp"

using namespace ringfwm;
using namespace ringfwm::incoherent;
using oracles::LosslessFixture;

namespace {

jsa::ArraySpec device_array(std::size_t n, double td = 0.8) {
    const double wp = omega_from_wavelength_nm(1561.25);
    const double ws = omega_from_wavelength_nm(1571.2);
    return jsa::make_array(n, 500e-6,
                           tcmt::band_from_td(wp, 3.9e4, td, tcmt::BandRole::pump),
                           tcmt::band_from_td(ws, 3.7e4, td, tcmt::BandRole::signal),
                           tcmt::band_from_td(2.0 * wp - ws, 4.2e4, td,
                                              tcmt::BandRole::idler));
}

FrequencyGrid line_for(const jsa::ArraySpec& arr) {
    return jsa::make_line_grid(jsa::make_jsa_grid(arr, 801).signal);
}

}  // namespace

TEST_CASE("pair transmittance: boundary value, range, monotonicity") {
    const auto arr = device_array(5);
    const auto line = line_for(arr);
    double prev = 0.0;
    for (std::size_t j = 1; j <= 5; ++j) {
        const double t = pair_transmittance(j, 5, arr.signal, arr.idler,
                                            arr.pump.omega0, line);
        CHECK(t > 0.0);
        CHECK(t <= 1.0 + 1e-12);
        CHECK(t > prev);
        prev = t;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(pair_transmittance(0, 5, arr.signal, arr.idler,
                                       arr.pump.omega0, line),
                    std::invalid_argument);
    CHECK_THROWS_AS(pair_transmittance(6, 5, arr.signal, arr.idler,
                                       arr.pump.omega0, line),
                    std::invalid_argument);
}

TEST_CASE("lossless pair transmittance reduces to the Gamma ratio") {
    const LosslessFixture fx;
    const auto arr = fx.array(2);
    const auto line = line_for(arr);
    CHECK(pair_transmittance(1, 2, arr.signal, arr.idler, arr.pump.omega0, line) ==
          doctest::Approx(oracles::cw_lossless_brightness(2, 1)).epsilon(1e-5));
}

TEST_CASE("lossless pair transmittance equals the CW relative brightness") {
    const LosslessFixture fx;
    const auto arr = fx.array(4);
    const auto grid = jsa::make_jsa_grid(arr, 801);
    const auto line = jsa::make_line_grid(grid.signal);
    const auto pmp = pump::make_cw_pump(arr.pump.omega0);
    jsa::DecomposeOptions opt;
    opt.keep_amplitudes = false;
    const auto dec = jsa::decompose(arr, pmp, grid, opt);
    const auto bj = jsa::relative_brightness(
        dec, jsa::single_ring_brightness(arr, pmp, grid, opt));
    for (std::size_t j = 1; j <= 4; ++j) {
        CHECK(pair_transmittance(j, 4, arr.signal, arr.idler, arr.pump.omega0, line) ==
              doctest::Approx(bj[j - 1]).epsilon(1e-6));
    }
}

TEST_CASE("pump power schedule") {
    CHECK(pump_power_schedule(2.5, 1, 0.7) == doctest::Approx(2.5));
    CHECK(pump_power_schedule(1.0, 5, 1.0) == doctest::Approx(1.0));
    const double td = db_to_linear(-0.88);
    CHECK(pump_power_schedule(1.0, 5, td) == doctest::Approx(0.4444).epsilon(1e-3));
    // dB form: P_j[dB] = P_1[dB] - (j-1) * T_d[dB]
    for (std::size_t j = 1; j <= 6; ++j) {
        CHECK(linear_to_db(pump_power_schedule(1.0, j, td)) ==
              doctest::Approx(-(double(j) - 1.0) * 0.88).epsilon(1e-9));
    }
}

TEST_CASE("incoherent rate: first point and equal-counts lossless chain") {
    const LosslessFixture fx;
    const auto arr = fx.array(3);
    const auto line = line_for(arr);
    const auto meas = make_measured_rings({100.0, 100.0, 100.0}, std::nullopt, 1.0, 1.0);
    const auto series = incoherent_rate(meas, arr, line);
    CHECK(series.values.at(1) == doctest::Approx(1.0));
    CHECK(series.values.at(2) ==
          doctest::Approx(1.0 + oracles::cw_lossless_brightness(2, 1)).epsilon(1e-5));
    CHECK(series.values.at(3) ==
          doctest::Approx(1.0 + oracles::cw_lossless_brightness(3, 2) +
                          oracles::cw_lossless_brightness(3, 1))
              .epsilon(1e-5));
}

TEST_CASE("synthetic counts reproduce the coherent model's incoherent reference") {
    // Counts generated with the scheduled pump mimic per-ring brightness up to
    // the pair filtering that pair_transmittance reinstates.
    const auto arr = device_array(5);
    const auto grid = jsa::make_jsa_grid(arr, 801);
    const auto line = jsa::make_line_grid(grid.signal);
    const auto pmp = pump::make_cw_pump(arr.pump.omega0);
    jsa::DecomposeOptions opt;
    opt.keep_amplitudes = false;
    const auto dec = jsa::decompose(arr, pmp, grid, opt);
    const double b1 = jsa::single_ring_brightness(arr, pmp, grid, opt);

    const double td = tcmt::td_on_resonance(arr.pump);
    std::vector<double> counts(5);
    for (std::size_t j = 1; j <= 5; ++j) {
        const double pj = pump_power_schedule(1.0, j, td);
        counts[j - 1] = pj * pj;  // pair rate scales with squared pump power
    }
    const auto series = incoherent_rate(make_measured_rings(counts, std::nullopt, 1.0, td),
                                        arr, line);
    CHECK(series.values.at(5) ==
          doctest::Approx(jsa::incoherent_reference_rate(dec, b1)).epsilon(1e-4));

    // Paper-style shape: roughly flat through N=3, then falling.
    CHECK(series.values.at(2) == doctest::Approx(1.0).epsilon(0.12));
    CHECK(series.values.at(3) < series.values.at(2));
    CHECK(series.values.at(4) < series.values.at(3));
    CHECK(series.values.at(5) < series.values.at(4));
}

TEST_CASE("uncertainty propagation through the weighted sum") {
    const LosslessFixture fx;
    const auto arr = fx.array(2);
    const auto line = line_for(arr);
    const auto meas = make_measured_rings({100.0, 50.0}, std::vector<double>{3.0, 4.0},
                                          1.0, 1.0);
    const auto series = incoherent_rate(meas, arr, line);
    const double t12 = pair_transmittance(1, 2, arr.signal, arr.idler,
                                          arr.pump.omega0, line);
    const double expect =
        std::sqrt(t12 * t12 * 9.0 + 16.0) / 100.0;
    CHECK(series.sigmas.at(2) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("measured-ring validation and CSV loading") {
    CHECK_THROWS_AS(make_measured_rings({}, std::nullopt, 1.0, 0.8),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_measured_rings({1.0, -2.0}, std::nullopt, 1.0, 0.8),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_measured_rings({1.0}, std::nullopt, 1.0, 1.5),
                    std::invalid_argument);

    const char* path = "counts_test.csv";
    {
        std::ofstream out(path);
        out << "ring_index,counts_per_s,sigma\n";
        out << "1,100.0,3\n2,81.0,2.5\n3,66.0,2\n";
    }
    const auto meas = load_counts_csv(path, 1.0, 0.8);
    CHECK(meas.counts.size() == 3);
    CHECK(meas.counts[1] == doctest::Approx(81.0));
    REQUIRE(meas.sigmas.has_value());
    CHECK((*meas.sigmas)[2] == doctest::Approx(2.0));
    std::remove(path);

    {
        std::ofstream out(path);
        out << "ring_index,counts_per_s\n1,100.0\nbogus,5\n";
    }
    CHECK_THROWS_AS(load_counts_csv(path, 1.0, 0.8), ParseError);
    std::remove(path);
}
