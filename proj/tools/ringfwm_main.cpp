#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringfwm/cli/commands.hpp"
#include "ringfwm/core/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitIo = 4;

int run(int argc, char** argv) {
    CLI::App app{"Cooperative four-wave mixing in a chain of add-drop microrings"};
    app.require_subcommand(1);

    std::string config_path;
    std::string outdir = "out";
    std::string data_file;
    std::string process;
    std::vector<std::string> processes;
    std::size_t n_max = 2000;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "scenario JSON file")->required();
        sub->add_option("--out", outdir, "output directory");
    };

    auto* spectra = app.add_subcommand("spectra", "cascaded drop spectra and widths");
    add_common(spectra);

    auto* scaling = app.add_subcommand("scaling", "rate scaling versus chain length");
    add_common(scaling);
    scaling->add_option("--process", processes,
                        "subset of spontaneous_cw, spontaneous_pulsed, stimulated, "
                        "incoherent (default: all)");

    auto* jsa = app.add_subcommand("jsa", "joint spectra, brightness, overlap");
    add_common(jsa);

    auto* fit = app.add_subcommand("fit", "drop-transmittance fit to a rate curve");
    add_common(fit);
    fit->add_option("--data", data_file, "CSV N,rate[,sigma]")->required();
    fit->add_option("--process", process, "stimulated|spontaneous_cw|spontaneous_pulsed")
        ->required();

    auto* asym = app.add_subcommand("asymptotic", "long-chain pair-weight growth");
    add_common(asym);
    asym->add_option("--nmax", n_max, "largest chain length (>= 20)");

    CLI11_PARSE(app, argc, argv);

    const auto cfg = ringfwm::cli::load_scenario(config_path);
    if (spectra->parsed()) {
        ringfwm::cli::cmd_spectra(cfg, outdir);
    } else if (scaling->parsed()) {
        ringfwm::cli::cmd_scaling(
            cfg, outdir, std::set<std::string>(processes.begin(), processes.end()));
    } else if (jsa->parsed()) {
        ringfwm::cli::cmd_jsa(cfg, outdir);
    } else if (fit->parsed()) {
        ringfwm::cli::cmd_fit(cfg, data_file, process, outdir);
    } else if (asym->parsed()) {
        ringfwm::cli::cmd_asymptotic(cfg, n_max, outdir);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ringfwm::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ringfwm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const ringfwm::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ringfwm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
