#pragma once

#include <iosfwd>

#include "revival/config.hpp"

namespace revival {

// Executes one run: writes timeseries.csv and report.json into out_dir.
// Throws std::invalid_argument on config problems and std::runtime_error
// on numerical failures (truncation, consistency checks).
void run_simulation(const RunConfig& config);

// Fidelity sweep along one axis; writes sweep.csv into out_dir.
void run_sweep(const SweepConfig& config);

// Small-cutoff oracle battery (dense full-space cross-checks, closed-form
// limits); prints one line per check. Returns true when everything passes.
bool selftest(std::ostream& out);

} // namespace revival
