#include "ringfwm/cli/commands.hpp"

#include <cmath>
#include <numbers>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "ringfwm/core/errors.hpp"
#include "ringfwm/core/quadrature.hpp"
#include "ringfwm/core/units.hpp"
#include "ringfwm/fit/fit.hpp"
#include "ringfwm/incoherent/incoherent.hpp"
#include "ringfwm/io/csv.hpp"
#include "ringfwm/scaling/scaling.hpp"
#include "ringfwm/tcmt/cascade.hpp"

namespace ringfwm::cli {

namespace {

namespace fs = std::filesystem;

std::string ensure_outdir(const std::string& outdir) {
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec || !fs::is_directory(outdir)) {
        throw IoError("cannot create output directory: " + outdir);
    }
    return (fs::path(outdir) / "").string();
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

}  // namespace

void cmd_spectra(const ScenarioConfig& cfg, const std::string& outdir) {
    const std::string dir = ensure_outdir(outdir);
    const auto band = cfg.build_band(tcmt::BandRole::pump);
    const auto grid = make_grid(band.omega0,
                                cfg.grid.span_halfwidths * band.gamma_tot(),
                                cfg.grid.spectrum_points);

    io::CsvWriter widths(join(dir, "fwhm_vs_N.csv"));
    widths.header({"N", "fwhm_rad_s", "fwhm_closed_form_rad_s"});
    for (std::size_t n = 1; n <= cfg.n; ++n) {
        const auto spec = tcmt::cascade_drop_spectrum(band, n, grid);
        io::CsvWriter w(join(dir, "spectra_drop" + std::to_string(n) + ".csv"));
        w.header({"omega_rad_s", "intensity"});
        for (std::size_t i = 0; i < grid.points; ++i) {
            w.row({grid.node(i), spec.values[i].real()});
        }
        w.commit();
        widths.row({static_cast<double>(n), tcmt::fwhm(spec),
                    tcmt::cascade_fwhm_closed_form(band.gamma_tot(), n)});
    }
    widths.commit();
}

void cmd_scaling(const ScenarioConfig& cfg, const std::string& outdir,
                 const std::set<std::string>& processes) {
    for (const auto& p : processes) {
        if (p != "spontaneous_cw" && p != "spontaneous_pulsed" && p != "stimulated" &&
            p != "incoherent") {
            throw ConfigError("processes", "unknown process '" + p + "'");
        }
    }
    const std::string dir = ensure_outdir(outdir);
    const auto want = [&](const std::string& p) {
        return processes.empty() || processes.count(p) > 0;
    };
    const bool cw_needed = want("spontaneous_cw") || want("incoherent");
    const bool pulsed_needed = want("spontaneous_pulsed");

    std::vector<std::string> cols = {"N"};
    if (want("spontaneous_cw")) cols.push_back("spontaneous_cw");
    if (want("spontaneous_pulsed")) cols.push_back("spontaneous_pulsed");
    if (want("stimulated")) cols.push_back("stimulated");
    if (want("incoherent")) cols.push_back("incoherent");
    if (cols.size() == 1) throw ConfigError("processes", "no known process selected");

    io::CsvWriter w(join(dir, "scaling.csv"));
    w.header(cols);

    const double td = tcmt::td_on_resonance(cfg.build_band(tcmt::BandRole::pump));
    for (std::size_t n = 1; n <= cfg.n; ++n) {
        const auto arr = cfg.build_array(n);
        const auto grid = cfg.build_grid(arr);
        std::vector<double> row = {static_cast<double>(n)};
        double cw_rate = 0.0, incoh = 0.0;
        if (cw_needed) {
            jsa::DecomposeOptions opt;
            opt.keep_amplitudes = false;
            const auto pmp = pump::make_cw_pump(arr.pump.omega0);
            const auto dec = jsa::decompose(arr, pmp, grid, opt);
            const double b1 = jsa::single_ring_brightness(arr, pmp, grid, opt);
            cw_rate = dec.total_norm / b1;
            incoh = jsa::incoherent_reference_rate(dec, b1);
        }
        if (want("spontaneous_cw")) row.push_back(cw_rate);
        if (pulsed_needed) {
            jsa::DecomposeOptions opt;
            opt.keep_amplitudes = false;
            opt.pump_points = cfg.grid.pump_points;
            const auto pmp = cfg.pump.mode == PumpMode::cw
                                 ? pump::default_pulsed_pump(arr.pump)
                                 : cfg.build_pump(arr);
            row.push_back(jsa::normalized_rate(arr, pmp, grid, opt));
        }
        if (want("stimulated")) row.push_back(scaling::xi_stim(n, td));
        if (want("incoherent")) row.push_back(incoh);
        w.row(row);
    }
    w.commit();
}

void cmd_jsa(const ScenarioConfig& cfg, const std::string& outdir) {
    const std::string dir = ensure_outdir(outdir);
    const auto arr = cfg.build_array();
    const auto grid = cfg.build_grid(arr);
    const auto pmp = cfg.build_pump(arr);

    jsa::DecomposeOptions opt;
    opt.pump_points = cfg.grid.pump_points;
    const auto dec = jsa::decompose(arr, pmp, grid, opt);
    const double b1 = jsa::single_ring_brightness(arr, pmp, grid, opt);

    io::CsvWriter axes(join(dir, "jsa_axes.csv"));
    axes.header({"omega1_rad_s", "omega2_rad_s"});
    for (std::size_t i = 0; i < grid.signal.points; ++i) {
        axes.row({grid.signal.node(i), grid.idler.node(i)});
    }
    axes.commit();

    for (std::size_t q = 1; q <= arr.n; ++q) {
        io::CsvWriter w(join(dir, "jsa_source_" + std::to_string(q) + ".csv"));
        const auto& phi = dec.phi[q - 1];
        std::vector<double> row(phi.cols());
        for (std::size_t i = 0; i < phi.rows(); ++i) {
            for (std::size_t l = 0; l < phi.cols(); ++l) {
                row[l] = std::norm(phi.at(i, l));
            }
            w.row(row);
        }
        w.commit();
    }

    const auto brightness = jsa::relative_brightness(dec, b1);
    io::CsvWriter bw(join(dir, "brightness.csv"));
    bw.header({"j", "relative_brightness"});
    for (std::size_t j = 1; j <= arr.n; ++j) {
        bw.row({static_cast<double>(j), brightness[j - 1]});
    }
    bw.commit();

    io::CsvWriter iw(join(dir, "indistinguishability.csv"));
    iw.header({"j", "re_I_jN", "im_I_jN", "abs_I_jN"});
    for (std::size_t j = 1; j <= arr.n; ++j) {
        const Complex v = dec.indistinguishability[j - 1][arr.n - 1];
        iw.row({static_cast<double>(j), v.real(), v.imag(), std::abs(v)});
    }
    iw.commit();

    // Pump spectrum arriving at each source: filtered j-1 times by the drop
    // line. The CW line collapses to the on-resonance power factor.
    io::CsvWriter pw(join(dir, "pump_evolution.csv"));
    std::vector<std::string> head = {"omega_rad_s"};
    for (std::size_t j = 1; j <= arr.n; ++j) head.push_back("s" + std::to_string(j));
    pw.header(head);
    if (pump::is_cw(pmp)) {
        const double td = tcmt::td_on_resonance(arr.pump);
        std::vector<double> row = {arr.pump.omega0};
        for (std::size_t j = 1; j <= arr.n; ++j) {
            row.push_back(std::pow(td, static_cast<double>(j - 1)));
        }
        pw.row(row);
    } else {
        const auto sup = pump::pump_support(pmp);
        const auto pgrid = make_grid(0.5 * (sup.lo + sup.hi), 0.5 * (sup.hi - sup.lo), 501);
        for (std::size_t i = 0; i < pgrid.points; ++i) {
            const double w0 = pgrid.node(i);
            std::vector<double> row = {w0};
            const double amp = pump::pump_amplitude(pmp, w0);
            for (std::size_t j = 1; j <= arr.n; ++j) {
                const Complex t = pow_n(tcmt::drop_amplitude(w0, arr.pump),
                                        static_cast<unsigned>(j - 1));
                row.push_back(std::norm(amp * t));
            }
            pw.row(row);
        }
    }
    pw.commit();
}

void cmd_fit(const ScenarioConfig& cfg, const std::string& data_file,
             const std::string& process, const std::string& outdir) {
    const std::string dir = ensure_outdir(outdir);
    fit::RateProcess proc;
    if (process == "stimulated") {
        proc = fit::RateProcess::stimulated;
    } else if (process == "spontaneous_cw") {
        proc = fit::RateProcess::spontaneous_cw;
    } else if (process == "spontaneous_pulsed") {
        proc = fit::RateProcess::spontaneous_pulsed;
    } else {
        throw ConfigError("process",
                          "must be stimulated, spontaneous_cw or spontaneous_pulsed");
    }
    const auto curve = fit::load_rate_curve_csv(data_file, proc);

    fit::TdFitConfig fc;
    const auto arr = cfg.build_array(1);
    fc.omega_p0 = arr.pump.omega0;
    fc.omega_s0 = arr.signal.omega0;
    fc.omega_i0 = arr.idler.omega0;
    fc.q_tot_pump = cfg.pump_band.q_tot;
    fc.q_tot_signal = cfg.signal_band.q_tot;
    fc.q_tot_idler = cfg.idler_band.q_tot;
    fc.spacing = cfg.spacing;
    fc.pump_fwhm_scale = cfg.pump.fwhm_scale;
    const auto res = fit::fit_td(curve, fc);

    nlohmann::json report;
    report["process"] = process;
    report["t_d_fit"] = res.t_d_fit;
    report["t_d_fit_db"] = linear_to_db(res.t_d_fit);
    report["residual"] = res.residual;
    report["evaluations"] = res.evaluations;
    auto& mc = report["model_curve"];
    mc = nlohmann::json::array();
    for (const auto& p : res.model_curve) {
        mc.push_back({{"n", p.n}, {"rate", p.rate}});
    }
    const std::string text = report.dump(2) + "\n";
    const std::string path = join(dir, "fit_report.json");
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw IoError("cannot rename " + tmp + " to " + path);
    }
    std::cout << text;
}

void cmd_asymptotic(const ScenarioConfig& cfg, std::size_t n_max,
                    const std::string& outdir) {
    if (n_max < 20) throw ConfigError("nmax", "must be at least 20");
    const std::string dir = ensure_outdir(outdir);
    const double td = tcmt::td_on_resonance(cfg.build_band(tcmt::BandRole::pump));

    io::CsvWriter w(join(dir, "asymptotic.csv"));
    w.header({"N", "log10_pair_weight", "trailing_decade_exponent"});
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double lg = scaling::log_asymptotic_beta2(n, td) / std::numbers::ln10;
        std::vector<std::string> cells = {std::to_string(n), io::format_g9(lg)};
        if (n >= 12) {
            const std::size_t lo = std::max<std::size_t>(10, n / 10);
            cells.push_back(io::format_g9(scaling::asymptotic_exponent(lo, n, td)));
        } else {
            cells.push_back("");
        }
        w.raw_row(cells);
    }
    w.commit();
}

}  // namespace ringfwm::cli
