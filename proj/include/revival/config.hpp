#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "revival/model.hpp"
#include "revival/states.hpp"

namespace revival {

enum class OutputKind { Entropy, Overlap, Moments, Squeezing, Photon };

// One simulation run. The CSV schema is fixed (all columns are always
// computed and written); the outputs set selects which analysis sections
// appear in report.json. A config file may omit t_max and n_samples: the
// parser then spans 1.1 revival times with 20000 samples, which resolves
// the g-scale oscillations at the reference parameters. Programmatic
// construction must set t_max explicitly.
struct RunConfig {
    ModelParams params;
    InitialState initial = InitialState::fock(0);
    double t_max = 0.0;
    int n_samples = 20000;
    double eps_trunc = 1e-12;
    std::set<OutputKind> outputs = {OutputKind::Entropy, OutputKind::Overlap, OutputKind::Moments,
                                    OutputKind::Squeezing, OutputKind::Photon};
    std::filesystem::path out_dir = "out";

    bool wants(OutputKind k) const { return outputs.count(k) > 0; }
};

enum class SweepAxis { G, Nu, M };

struct SweepConfig {
    RunConfig base;
    SweepAxis axis = SweepAxis::G;
    std::vector<double> values;
};

// Throws std::invalid_argument with a readable message on any violation.
void validate(const RunConfig& config);
void validate(const SweepConfig& config);

// JSON round trip. parse_run_config accepts the documented schema (see
// README); flags are applied by the CLI on top of the parsed file.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& file);
std::string resolved_config_json(const RunConfig& config, int n_max);

SweepAxis parse_sweep_axis(const std::string& name);
std::string axis_name(SweepAxis axis);

} // namespace revival
