#pragma once

#include <span>
#include <utility>
#include <vector>

#include "revival/entanglement.hpp"
#include "revival/observables.hpp"

namespace revival {

struct TimePoint {
    double t = 0.0;
    double value = 0.0;
};

struct RevivalReport {
    double t_est = 0.0;  // predicted near-revival time
    double t_peak = 0.0; // located overlap maximum
    double fidelity = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

struct DipReport {
    double fraction = 1.0; // of the revival time: 1/4, 1/3, 1/2, 2/3 or 1
    double t_min = 0.0;
    double entropy_min = 0.0;
    double baseline = 0.0; // median entropy over the full series
};

// 2 pi / gamma for an initial Fock state, 4 pi / gamma for coherent and
// photon-added coherent states. gamma = 0 has no nonlinearity and hence no
// revivals; that case throws.
double predict_revival_time(const InitialState& s, const ModelParams& p);

struct FidelityScanOptions {
    double omega = 1.0;
    double omega0 = 1.0;
    double eps_trunc = 1e-12;
    double window_frac = 0.2;
    int grid = 20001;
};

// Coarse scan of the overlap over [t_est (1-window_frac), t_est (1+window_frac)]
// followed by golden-section refinement of the best bracket down to a time
// resolution of 1e-4/g.
RevivalReport overlap_fidelity(const EigenbasisCoefficients& c0, const BlockTable& table,
                               double t_est, double window_frac = 0.2, int grid = 20001);

// One revival report per coupling value (ascending), table rebuilt per g.
std::vector<std::pair<double, double>> fidelity_vs_g(const InitialState& s, double gamma,
                                                     std::span<const double> g_values,
                                                     const FidelityScanOptions& opt = {});

// For each fraction, the entropy minimum within +-5% of fraction * t_rev,
// reported against the series median. The series must cover every window.
std::vector<DipReport> entropy_dips(std::span<const TimePoint> series, double t_rev,
                                    std::span<const double> fractions);

// Maximal sample runs with value < threshold, as (t_start, t_end) pairs.
std::vector<std::pair<double, double>> squeezing_intervals(std::span<const TimePoint> series,
                                                           double threshold = 0.5);

} // namespace revival
