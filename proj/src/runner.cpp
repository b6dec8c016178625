#include "revival/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "revival/analysis.hpp"
#include "revival/entanglement.hpp"
#include "revival/evolution.hpp"
#include "revival/observables.hpp"
#include "revival/parallel.hpp"

namespace revival {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kEntropyIdentityTol = 1e-8;
constexpr double kSqueezeThreshold = 0.5;
const double kDipFractions[] = {0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0};

// 17 significant digits round-trip doubles exactly; regression tests rely
// on byte-identical CSV output.
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Row {
    double t, gt;
    double svne, sle;
    double overlap;
    double mean_n_field, mean_n_atom;
    double mean_xi, mean_eta;
    double var_xi, var_eta;
    double skew_xi, kurt_xi;
};

Row compute_row(double t, const EigenbasisCoefficients& c0, const BlockTable& table) {
    const auto st = evolve(c0, table, t);
    const auto grid = to_fock_grid(st, table);

    const auto field = entropies(reduce(grid, Subsystem::Field));
    const auto atom = entropies(reduce(grid, Subsystem::Atom));
    if (std::abs(field.svne - atom.svne) > kEntropyIdentityTol ||
        std::abs(field.sle - atom.sle) > kEntropyIdentityTol)
        throw std::runtime_error("run: field/atom entropy identity violated beyond 1e-8");
    if (field.svne < field.sle - kEntropyIdentityTol)
        throw std::runtime_error("run: SVNE < SLE, numerical failure");

    Row row{};
    row.t = t;
    row.gt = table.params().g * t;
    row.svne = field.svne;
    row.sle = field.sle;
    row.overlap = overlap(c0, st);

    double nf = 0, na = 0;
    for (std::size_t f = 0; f < grid.a.rows(); ++f)
        for (std::size_t n = 0; n < grid.a.cols(); ++n) {
            const double p = std::norm(grid.a(f, n));
            nf += static_cast<double>(f) * p;
            na += static_cast<double>(n) * p;
        }
    row.mean_n_field = nf;
    row.mean_n_atom = na;

    const double xi1 = moment_on_grid(grid, QuadratureKind::Xi, 1);
    const double xi2 = moment_on_grid(grid, QuadratureKind::Xi, 2);
    const double xi3 = moment_on_grid(grid, QuadratureKind::Xi, 3);
    const double xi4 = moment_on_grid(grid, QuadratureKind::Xi, 4);
    const double eta1 = moment_on_grid(grid, QuadratureKind::Eta, 1);
    const double eta2 = moment_on_grid(grid, QuadratureKind::Eta, 2);

    row.mean_xi = xi1;
    row.mean_eta = eta1;
    row.var_xi = xi2 - xi1 * xi1;
    row.var_eta = eta2 - eta1 * eta1;
    const double c3 = xi3 - 3.0 * xi1 * xi2 + 2.0 * xi1 * xi1 * xi1;
    const double c4 = xi4 - 4.0 * xi1 * xi3 + 6.0 * xi1 * xi1 * xi2 - 3.0 * std::pow(xi1, 4);
    const double sigma = std::sqrt(std::max(row.var_xi, 0.0));
    row.skew_xi = sigma > 0 ? c3 / std::pow(sigma, 3) : 0.0;
    row.kurt_xi = sigma > 0 ? c4 / std::pow(sigma, 4) : 0.0;
    return row;
}

void write_csv(const std::filesystem::path& path, const std::vector<Row>& rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("run: cannot write " + path.string());
    out << "t,gt,svne,sle,overlap,mean_n_field,mean_n_atom,mean_xi,mean_eta,"
           "var_xi,var_eta,skew_xi,kurt_xi\n";
    for (const Row& r : rows) {
        out << fmt17(r.t) << ',' << fmt17(r.gt) << ',' << fmt17(r.svne) << ',' << fmt17(r.sle)
            << ',' << fmt17(r.overlap) << ',' << fmt17(r.mean_n_field) << ','
            << fmt17(r.mean_n_atom) << ',' << fmt17(r.mean_xi) << ',' << fmt17(r.mean_eta) << ','
            << fmt17(r.var_xi) << ',' << fmt17(r.var_eta) << ',' << fmt17(r.skew_xi) << ','
            << fmt17(r.kurt_xi) << '\n';
    }
    if (!out) throw std::runtime_error("run: write failed for " + path.string());
}

} // namespace

void run_simulation(const RunConfig& config) {
    validate(config);

    const auto amps = field_amplitudes(config.initial, config.eps_trunc);
    const auto table = build_table(config.params, amps.n_max);
    const auto c0 = project(amps, table);

    const std::size_t n = static_cast<std::size_t>(config.n_samples);
    std::vector<double> times(n);
    for (std::size_t i = 0; i < n; ++i)
        times[i] = config.t_max * static_cast<double>(i) / static_cast<double>(n - 1);

    std::vector<Row> rows(n);
    parallel_for(n, [&](std::size_t i) { rows[i] = compute_row(times[i], c0, table); });

    std::filesystem::create_directories(config.out_dir);
    write_csv(config.out_dir / "timeseries.csv", rows);

    ordered_json report;
    report["config"] = ordered_json::parse(resolved_config_json(config, amps.n_max));

    if (config.wants(OutputKind::Overlap) && config.params.gamma > 0.0) {
        const double t_rev = predict_revival_time(config.initial, config.params);
        const auto rev = overlap_fidelity(c0, table, t_rev);
        report["revival"] = {{"t_est", rev.t_est},
                             {"t_peak", rev.t_peak},
                             {"fidelity", rev.fidelity},
                             {"window", {rev.window_lo, rev.window_hi}}};
    }

    if (config.wants(OutputKind::Entropy) && config.params.gamma > 0.0) {
        const double t_rev = predict_revival_time(config.initial, config.params);
        std::vector<TimePoint> svne_series(n);
        for (std::size_t i = 0; i < n; ++i) svne_series[i] = {rows[i].t, rows[i].svne};
        std::vector<double> fractions;
        for (double f : kDipFractions)
            if (1.05 * f * t_rev <= config.t_max) fractions.push_back(f);
        if (!fractions.empty()) {
            ordered_json dips = ordered_json::array();
            for (const auto& dip : entropy_dips(svne_series, t_rev, fractions))
                dips.push_back({{"fraction", dip.fraction},
                                {"t_min", dip.t_min},
                                {"entropy_min", dip.entropy_min},
                                {"baseline", dip.baseline}});
            report["dips"] = dips;
        }
    }

    if (config.wants(OutputKind::Squeezing)) {
        std::vector<TimePoint> dxi_series(n);
        for (std::size_t i = 0; i < n; ++i)
            dxi_series[i] = {rows[i].t, std::sqrt(std::max(rows[i].var_xi, 0.0))};
        ordered_json intervals = ordered_json::array();
        for (const auto& [lo, hi] : squeezing_intervals(dxi_series, kSqueezeThreshold))
            intervals.push_back({lo, hi});
        report["squeezing"] = {{"threshold", kSqueezeThreshold}, {"intervals", intervals}};
    }

    std::ofstream out(config.out_dir / "report.json", std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("run: cannot write report.json");
    out << report.dump(2) << '\n';
}

void run_sweep(const SweepConfig& config) {
    validate(config);
    const auto& base = config.base;

    std::vector<std::pair<double, double>> points;
    points.reserve(config.values.size());
    for (double v : config.values) {
        ModelParams p = base.params;
        InitialState s = base.initial;
        switch (config.axis) {
        case SweepAxis::G:
            p.g = v;
            break;
        case SweepAxis::Nu: {
            // keep the phase of alpha, rescale the modulus to sqrt(nu)
            const double phase = std::arg(base.initial.alpha());
            const cplx alpha = std::sqrt(v) * cplx{std::cos(phase), std::sin(phase)};
            s = base.initial.kind() == InitialState::Kind::Coherent
                    ? InitialState::coherent(alpha)
                    : InitialState::photon_added(alpha, base.initial.added_photons());
            break;
        }
        case SweepAxis::M:
            s = InitialState::photon_added(base.initial.alpha(), static_cast<int>(v));
            break;
        }
        const auto amps = field_amplitudes(s, base.eps_trunc);
        const auto table = build_table(p, amps.n_max);
        const auto c0 = project(amps, table);
        const double t_rev = predict_revival_time(s, p);
        const auto rep = overlap_fidelity(c0, table, t_rev);
        points.emplace_back(v, rep.fidelity);
    }

    std::filesystem::create_directories(base.out_dir);
    const auto path = base.out_dir / "sweep.csv";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("sweep: cannot write " + path.string());
    out << axis_name(config.axis) << ",fidelity\n";
    for (const auto& [v, fid] : points) out << fmt17(v) << ',' << fmt17(fid) << '\n';
    if (!out) throw std::runtime_error("sweep: write failed for " + path.string());
}

} // namespace revival
