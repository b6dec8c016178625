#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revival/runner.hpp"

namespace {

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad numeric value: " + item);
        out.push_back(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-mode field-atom dynamics: entanglement entropies, revivals, squeezing"};
    app.require_subcommand(1);

    std::string config_file;
    std::string out_dir;
    int samples = -1;
    double tmax = -1.0;

    auto* run_cmd = app.add_subcommand("run", "evolve one initial state and write CSV + report");
    run_cmd->add_option("--config", config_file, "JSON config file")->required();
    run_cmd->add_option("--out", out_dir, "output directory (overrides config)");
    run_cmd->add_option("--samples", samples, "number of time samples (overrides config)");
    run_cmd->add_option("--tmax", tmax, "end of the time span (overrides config)");

    std::string axis = "g";
    std::string values_csv;
    auto* sweep_cmd = app.add_subcommand("sweep", "overlap-fidelity sweep along g, nu or m");
    sweep_cmd->add_option("--config", config_file, "JSON config file (base run)")->required();
    sweep_cmd->add_option("--axis", axis, "sweep axis: g, nu or m")->required();
    sweep_cmd->add_option("--values", values_csv, "comma-separated axis values")->required();
    sweep_cmd->add_option("--out", out_dir, "output directory (overrides config)");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the small-cutoff oracle battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (selftest_cmd->parsed()) {
            return revival::selftest(std::cout) ? 0 : 2;
        }
        revival::RunConfig config = revival::load_run_config(config_file);
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (samples >= 0) config.n_samples = samples;
        if (tmax >= 0.0) config.t_max = tmax;

        if (run_cmd->parsed()) {
            revival::run_simulation(config);
        } else {
            revival::SweepConfig sweep;
            sweep.base = config;
            sweep.axis = revival::parse_sweep_axis(axis);
            sweep.values = parse_values(values_csv);
            revival::run_sweep(sweep);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
