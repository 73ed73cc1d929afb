// Times the grid kernels with the serial reference against the OpenMP path
// and verifies that the two produce bit-identical results.

#include <chrono>
#include <functional>
#include <cstring>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ringfwm/core/quadrature.hpp"
#include "ringfwm/core/units.hpp"
#include "ringfwm/jsa/jsa.hpp"

using namespace ringfwm;

namespace {

double time_s(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() /
           reps;
}

jsa::ArraySpec device_array(std::size_t n) {
    const double wp = omega_from_wavelength_nm(1561.25);
    const double ws = omega_from_wavelength_nm(1571.2);
    return jsa::make_array(n, 500e-6,
                           tcmt::band_from_td(wp, 3.9e4, 0.8, tcmt::BandRole::pump),
                           tcmt::band_from_td(ws, 3.7e4, 0.8, tcmt::BandRole::signal),
                           tcmt::band_from_td(2.0 * wp - ws, 4.2e4, 0.8,
                                              tcmt::BandRole::idler));
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both paths run serially\n";
#endif

    const auto arr = device_array(5);
    const auto grid = jsa::make_jsa_grid(arr, 801);
    const auto pmp = pump::default_pulsed_pump(arr.pump);

    jsa::DecomposeOptions serial;
    serial.exec = Execution::serial;
    jsa::DecomposeOptions parallel;
    parallel.exec = Execution::parallel;

    const auto ds = jsa::decompose(arr, pmp, grid, serial);
    const auto dp = jsa::decompose(arr, pmp, grid, parallel);
    bool identical = std::memcmp(&ds.total_norm, &dp.total_norm, sizeof(double)) == 0;
    for (std::size_t q = 0; q < arr.n && identical; ++q) {
        identical = ds.phi[q].values.size() == dp.phi[q].values.size() &&
                    std::memcmp(ds.phi[q].values.data(), dp.phi[q].values.data(),
                                ds.phi[q].values.size() * sizeof(Complex)) == 0;
    }
    std::cout << "serial vs parallel results: "
              << (identical ? "bit-identical" : "MISMATCH") << "\n";
    if (!identical) return 1;

    const double t_serial = time_s([&] { jsa::decompose(arr, pmp, grid, serial); }, 3);
    const double t_parallel = time_s([&] { jsa::decompose(arr, pmp, grid, parallel); }, 3);
    std::cout << "decompose (pulsed, N=5, 801x801):\n"
              << "  serial   " << t_serial << " s\n"
              << "  parallel " << t_parallel << " s\n"
              << "  speedup  " << t_serial / t_parallel << "x\n";

    ComplexGrid2D field(grid.signal, grid.idler);
    for (std::size_t i = 0; i < field.rows(); ++i) {
        for (std::size_t j = 0; j < field.cols(); ++j) {
            field.at(i, j) = Complex{1.0 / (1.0 + double(i + j)), 1e-3 * double(i)};
        }
    }
    const double q_serial =
        time_s([&] { (void)integrate_2d(field, Execution::serial); }, 20);
    const double q_parallel =
        time_s([&] { (void)integrate_2d(field, Execution::parallel); }, 20);
    std::cout << "integrate_2d (801x801):\n"
              << "  serial   " << q_serial << " s\n"
              << "  parallel " << q_parallel << " s\n"
              << "  speedup  " << q_serial / q_parallel << "x\n";
    return 0;
}
