#include "revival/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "revival/parallel.hpp"

namespace revival {

namespace {

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of empty series");
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid) - 1, v.end());
    return 0.5 * (hi + v[mid - 1]);
}

// Golden-section maximization of f on [a, b] down to width tol.
template <typename F>
double golden_max(F f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 > f2 ? x1 : x2;
}

} // namespace

double predict_revival_time(const InitialState& s, const ModelParams& p) {
    if (!(p.gamma > 0.0))
        throw std::invalid_argument(
            "predict_revival_time: gamma = 0 gives periodic dynamics, no revivals");
    const double base = 2.0 * std::numbers::pi / p.gamma;
    return s.kind() == InitialState::Kind::Fock ? base : 2.0 * base;
}

RevivalReport overlap_fidelity(const EigenbasisCoefficients& c0, const BlockTable& table,
                               double t_est, double window_frac, int grid) {
    if (!(window_frac > 0.0 && window_frac <= 0.5))
        throw std::invalid_argument("overlap_fidelity: window_frac must lie in (0, 0.5]");
    if (grid < 64) throw std::invalid_argument("overlap_fidelity: grid must be >= 64");
    if (!(t_est > 0.0)) throw std::invalid_argument("overlap_fidelity: t_est must be positive");

    const double lo = t_est * (1.0 - window_frac);
    const double hi = t_est * (1.0 + window_frac);
    std::vector<double> vals(static_cast<std::size_t>(grid));
    const auto at = [&](double t) { return overlap(c0, evolve(c0, table, t)); };
    parallel_for(vals.size(), [&](std::size_t i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
        vals[i] = at(t);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] > vals[best]) best = i;

    const double step = (hi - lo) / (grid - 1);
    const double bl = std::max(lo, lo + step * (static_cast<double>(best) - 1));
    const double bh = std::min(hi, lo + step * (static_cast<double>(best) + 1));
    const double tol = 1e-4 / std::max(table.params().g, 1.0);
    const double t_peak = golden_max(at, bl, bh, tol);

    RevivalReport rep;
    rep.t_est = t_est;
    rep.t_peak = t_peak;
    rep.fidelity = at(t_peak);
    rep.window_lo = lo;
    rep.window_hi = hi;
    return rep;
}

std::vector<std::pair<double, double>> fidelity_vs_g(const InitialState& s, double gamma,
                                                     std::span<const double> g_values,
                                                     const FidelityScanOptions& opt) {
    if (g_values.empty()) throw std::invalid_argument("fidelity_vs_g: empty g list");
    for (std::size_t i = 0; i < g_values.size(); ++i) {
        if (!(g_values[i] > 0.0)) throw std::invalid_argument("fidelity_vs_g: g must be positive");
        if (i > 0 && !(g_values[i] > g_values[i - 1]))
            throw std::invalid_argument("fidelity_vs_g: g values must be ascending");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(g_values.size());
    const auto amps = field_amplitudes(s, opt.eps_trunc);
    for (double g : g_values) {
        const ModelParams p{opt.omega, opt.omega0, gamma, g};
        const auto table = build_table(p, amps.n_max);
        const auto c0 = project(amps, table);
        const double t_rev = predict_revival_time(s, p);
        const auto rep = overlap_fidelity(c0, table, t_rev, opt.window_frac, opt.grid);
        out.emplace_back(g, rep.fidelity);
    }
    return out;
}

std::vector<DipReport> entropy_dips(std::span<const TimePoint> series, double t_rev,
                                    std::span<const double> fractions) {
    if (series.empty()) throw std::invalid_argument("entropy_dips: empty series");
    if (!(t_rev > 0.0)) throw std::invalid_argument("entropy_dips: t_rev must be positive");
    std::vector<double> values;
    values.reserve(series.size());
    for (const auto& pt : series) values.push_back(pt.value);
    const double baseline = median(std::move(values));

    std::vector<DipReport> out;
    for (double frac : fractions) {
        const double target = frac * t_rev;
        const double wlo = target * 0.95;
        const double whi = target * 1.05;
        if (wlo < series.front().t - 1e-12 || whi > series.back().t + 1e-12)
            throw std::invalid_argument("entropy_dips: dip window not covered by the series");
        bool found = false;
        DipReport rep;
        rep.fraction = frac;
        rep.baseline = baseline;
        for (const auto& pt : series) {
            if (pt.t < wlo || pt.t > whi) continue;
            if (!found || pt.value < rep.entropy_min) {
                rep.entropy_min = pt.value;
                rep.t_min = pt.t;
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("entropy_dips: no samples inside dip window");
        out.push_back(rep);
    }
    return out;
}

std::vector<std::pair<double, double>> squeezing_intervals(std::span<const TimePoint> series,
                                                           double threshold) {
    for (std::size_t i = 0; i + 1 < series.size(); ++i)
        if (!(series[i].t <= series[i + 1].t))
            throw std::invalid_argument("squeezing_intervals: series must be sorted by t");
    std::vector<std::pair<double, double>> out;
    std::size_t i = 0;
    while (i < series.size()) {
        if (series[i].value < threshold) {
            const double start = series[i].t;
            std::size_t j = i;
            while (j + 1 < series.size() && series[j + 1].value < threshold) ++j;
            out.emplace_back(start, series[j].t);
            i = j + 1;
        } else {
            ++i;
        }
    }
    return out;
}

} // namespace revival
