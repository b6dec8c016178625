// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Exit code 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "revival/analysis.hpp"
#include "revival/entanglement.hpp"
#include "revival/evolution.hpp"
#include "revival/observables.hpp"
#include "revival/parallel.hpp"
#include "revival/runner.hpp"

using namespace revival;

namespace {

const ModelParams kReference{1.0, 1.0, 1.0, 100.0};
constexpr double kPi = std::numbers::pi;
constexpr int kSamples = 20000;

int g_failures = 0;

void report(int id, bool pass, const std::string& label, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double elapsed_s(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Series {
    std::vector<double> times;
    std::vector<EntropyRow> rows;
};

Series entropy_run(const InitialState& initial, const ModelParams& params, double t_max) {
    const auto amps = field_amplitudes(initial, 1e-12);
    const auto table = build_table(params, amps.n_max);
    const auto c0 = project(amps, table);
    Series out;
    out.times.resize(kSamples);
    for (int i = 0; i < kSamples; ++i)
        out.times[static_cast<std::size_t>(i)] = t_max * i / (kSamples - 1);
    out.rows = entropy_timeseries(c0, table, out.times);
    return out;
}

double svne_min_in(const Series& s, double lo, double hi) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& row : s.rows)
        if (row.t >= lo && row.t <= hi) best = std::min(best, row.svne_field);
    return best;
}

double svne_median_in(const Series& s, double lo, double hi) {
    std::vector<double> vals;
    for (const auto& row : s.rows)
        if (row.t >= lo && row.t <= hi) vals.push_back(row.svne_field);
    std::sort(vals.begin(), vals.end());
    return vals[vals.size() / 2];
}

// ---------------------------------------------------------------------------

void criterion_1_evolution_oracle() {
    const auto start = std::chrono::steady_clock::now();
    const int n_cut = 6;
    const auto h = full_space_hamiltonian(kReference, n_cut);
    const auto table = build_table(kReference, n_cut);

    std::mt19937 rng(90210);
    std::normal_distribution<double> gauss;
    double worst = 0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<cplx> psi0(oracle_dimension(n_cut));
        double norm2 = 0;
        for (auto& v : psi0) {
            v = {gauss(rng), gauss(rng)};
            norm2 += std::norm(v);
        }
        for (auto& v : psi0) v /= std::sqrt(norm2);

        const auto c0 = from_fock_grid(oracles::oracle_vector_to_grid(psi0, n_cut), table);
        for (double t : {0.1, 1.0, 10.0}) {
            const auto expected = oracles::dense_propagate(h, psi0, t);
            const auto got =
                oracles::grid_to_oracle_vector(to_fock_grid(evolve(c0, table, t), table), n_cut);
            for (std::size_t i = 0; i < expected.size(); ++i)
                worst = std::max(worst, std::abs(expected[i] - got[i]));
        }
    }
    const double dt = elapsed_s(start);
    report(1, worst <= 1e-10 && dt < 1.0, "blockwise evolution matches dense propagation",
           "max amplitude dev " + fmt(worst) + ", " + fmt(dt) + " s");
}

void criterion_2_block_spectrum() {
    const int n_cut = 6;
    const auto h = full_space_hamiltonian(kReference, n_cut);

    linalg::HermitianMatrix hm;
    hm.entries = Matrix<cplx>(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) hm.entries(i, j) = h(i, j);
    const auto dense = linalg::eig_hermitian(hm);

    std::vector<double> block_values;
    for (int N = 0; N <= n_cut; ++N) {
        const auto blk = diagonalize_block(kReference, N);
        block_values.insert(block_values.end(), blk.lambdas.begin(), blk.lambdas.end());
    }
    std::sort(block_values.begin(), block_values.end());
    double worst = 0;
    for (std::size_t i = 0; i < block_values.size(); ++i)
        worst = std::max(worst, std::abs(block_values[i] - dense.values[i]));

    double comm = 0; // ||[N_tot, H]||_max with N_tot diagonal on the oracle basis
    for (int N = 0; N <= n_cut; ++N)
        for (int n = 0; n <= N; ++n)
            for (int Np = 0; Np <= n_cut; ++Np)
                for (int np = 0; np <= Np; ++np)
                    comm = std::max(comm, std::abs(h(oracle_index(N, n), oracle_index(Np, np)) *
                                                   static_cast<double>(N - Np)));

    report(2, worst <= 1e-8 && comm == 0.0, "block spectra equal the dense spectrum",
           "multiset dev " + fmt(worst) + ", commutator " + fmt(comm));
}

bool entropy_identities_ok(const Series& s, double* worst_out) {
    double worst = 0;
    bool ok = true;
    for (const auto& row : s.rows) {
        worst = std::max({worst, std::abs(row.svne_field - row.svne_atom),
                          std::abs(row.sle_field - row.sle_atom)});
        if (row.svne_field < row.sle_field - 1e-8) ok = false;
        if (row.sle_field >= 1.0) ok = false;
    }
    if (worst_out) *worst_out = std::max(*worst_out, worst);
    return ok && worst <= 1e-8;
}

void criterion_3_entropy_identities(const std::vector<const Series*>& runs) {
    double worst_pair = 0;
    bool ok = true;
    for (const Series* s : runs) {
        ok = ok && entropy_identities_ok(*s, &worst_pair);
        if (!s->rows.empty() && s->rows.front().t == 0.0)
            ok = ok && s->rows.front().svne_field <= 1e-8 && s->rows.front().svne_atom <= 1e-8;
    }

    // full-state purity on an oracle-scale state
    const auto amps = field_amplitudes(InitialState::coherent(1.0), 1e-12);
    const auto table = build_table(kReference, amps.n_max);
    const auto c0 = project(amps, table);
    double worst_purity = 0;
    for (double t : {0.0, 1.1, 5.3}) {
        const auto rho = density_matrix_eigenbasis(evolve(c0, table, t));
        const auto rho2 = matmul(rho, rho);
        for (std::size_t i = 0; i < rho.rows(); ++i)
            for (std::size_t j = 0; j < rho.cols(); ++j)
                worst_purity = std::max(worst_purity, std::abs(rho2(i, j) - rho(i, j)));
    }
    ok = ok && worst_purity <= 1e-8;

    report(3, ok, "entropy identities and purity",
           "S_a vs S_b dev " + fmt(worst_pair) + ", purity dev " + fmt(worst_purity));
}

void criterion_4_revival_dips(const Series& fock, const Series& coherent, bool* coherent_passes) {
    const double t_fock = 2.0 * kPi;
    const double min_f = svne_min_in(fock, 0.8 * t_fock, 1.2 * t_fock);
    const double med_f = svne_median_in(fock, 0.5, t_fock);
    const bool pass_f = min_f < 0.1 * med_f;

    const double t_cs = 4.0 * kPi;
    const double min_c = svne_min_in(coherent, 0.8 * t_cs, 1.2 * t_cs);
    const double med_c = svne_median_in(coherent, 0.5, t_cs);
    const bool pass_c = min_c < 0.1 * med_c;
    *coherent_passes = pass_c;

    report(4, pass_f && pass_c, "entropy dips at the predicted revival times",
           "Fock min/median " + fmt(min_f) + "/" + fmt(med_f) + ", CS min/median " + fmt(min_c) +
               "/" + fmt(med_c));
}

void criterion_5_pacs_degradation(const Series& pacs, bool coherent_passed) {
    const double t_rev = 4.0 * kPi;
    const double min_p = svne_min_in(pacs, 0.8 * t_rev, 1.2 * t_rev);
    const double med_p = svne_median_in(pacs, 0.5, t_rev);
    const bool saturated = min_p > 0.5 * med_p;
    report(5, saturated && coherent_passed, "photon-added nu=5 state loses the revival dip",
           "PACS min/median " + fmt(min_p) + "/" + fmt(med_p) + ", CS dip " +
               (coherent_passed ? "present" : "missing"));
}

void criterion_6_fidelity_ordering() {
    const std::vector<double> gs{25.0, 50.0, 100.0, 200.0};
    const std::vector<int> ms{0, 1, 5};
    const double tol = 0.02;

    double fid[3][4];
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        const auto initial = InitialState::photon_added(1.0, ms[mi]);
        const auto pts = fidelity_vs_g(initial, 1.0, gs);
        for (std::size_t gi = 0; gi < gs.size(); ++gi) fid[mi][gi] = pts[gi].second;
    }

    bool ok = true;
    std::string detail;
    for (std::size_t mi = 0; mi < ms.size(); ++mi)
        for (std::size_t gi = 0; gi + 1 < gs.size(); ++gi)
            if (fid[mi][gi] > fid[mi][gi + 1] + tol) ok = false;
    for (std::size_t gi = 0; gi < gs.size(); ++gi)
        for (std::size_t mi = 0; mi + 1 < ms.size(); ++mi)
            if (fid[mi + 1][gi] > fid[mi][gi] + tol) ok = false;
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        detail += "m=" + std::to_string(ms[mi]) + ":";
        for (std::size_t gi = 0; gi < gs.size(); ++gi) detail += " " + fmt(fid[mi][gi]);
        if (mi + 1 < ms.size()) detail += "; ";
    }
    report(6, ok, "overlap fidelity ordered in g and m", detail);
}

void criterion_7_quadrature_signatures() {
    // (a) Fock initial: odd xi/eta moments vanish
    bool odd_ok = true;
    {
        const auto amps = field_amplitudes(InitialState::fock(10), 1e-12);
        const auto table = build_table(kReference, amps.n_max);
        const auto c0 = project(amps, table);
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> ut(0.0, 4.0 * kPi);
        for (int i = 0; i < 100; ++i) {
            const auto st = evolve(c0, table, ut(rng));
            if (std::abs(moment(st, table, {QuadratureKind::Xi, 1})) > 1e-10 ||
                std::abs(moment(st, table, {QuadratureKind::Eta, 1})) > 1e-10 ||
                std::abs(moment(st, table, {QuadratureKind::Xi, 3})) > 1e-10)
                odd_ok = false;
        }
    }

    // (b) squeezing of xi near t = 2 pi for the coherent start only
    const auto min_dxi = [](const InitialState& initial) {
        const auto amps = field_amplitudes(initial, 1e-12);
        const auto table = build_table(kReference, amps.n_max);
        const auto c0 = project(amps, table);
        const int n = 6001;
        std::vector<double> vals(n);
        parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
            const double t = 2.0 * kPi - 0.3 + 0.6 * static_cast<double>(i) / (n - 1);
            vals[i] = std_dev_xi(evolve(c0, table, t), table);
        });
        return *std::min_element(vals.begin(), vals.end());
    };
    const double dxi_cs = min_dxi(InitialState::coherent(1.0));
    const double dxi_m1 = min_dxi(InitialState::photon_added(1.0, 1));
    const double dxi_m5 = min_dxi(InitialState::photon_added(1.0, 5));
    const bool squeeze_ok = dxi_cs < 0.5 && dxi_m1 >= 0.5 && dxi_m5 >= 0.5;

    // (c) no amplitude-squared squeezing at half the revival time
    const auto q2_squeezed = [](const InitialState& initial, double t_half) {
        const auto amps = field_amplitudes(initial, 1e-12);
        const auto table = build_table(kReference, amps.n_max);
        const auto st = evolve(project(amps, table), table, t_half);
        const auto z1 = higher_quadrature_variance(st, table, {HigherQuadrature::Z1, 2});
        const auto z2 = higher_quadrature_variance(st, table, {HigherQuadrature::Z2, 2});
        return z1.squeezed() || z2.squeezed();
    };
    const bool q2_ok = !q2_squeezed(InitialState::fock(10), kPi) &&
                       !q2_squeezed(InitialState::coherent(1.0), 2.0 * kPi) &&
                       !q2_squeezed(InitialState::photon_added(1.0, 1), 2.0 * kPi) &&
                       !q2_squeezed(InitialState::photon_added(1.0, 5), 2.0 * kPi);

    report(7, odd_ok && squeeze_ok && q2_ok, "quadrature signatures",
           std::string("odd moments ") + (odd_ok ? "zero" : "NONZERO") + "; min dxi cs/m1/m5 " +
               fmt(dxi_cs) + "/" + fmt(dxi_m1) + "/" + fmt(dxi_m5) + "; q=2 squeezing " +
               (q2_ok ? "absent" : "PRESENT"));
}

void criterion_8_closed_forms() {
    const auto start = std::chrono::steady_clock::now();

    const ModelParams rot{1.0, 1.0, 0.0, 2.0};
    const int nf = 7;
    const auto amps = field_amplitudes(InitialState::fock(nf), 1e-12);
    const auto table = build_table(rot, nf);
    const auto c0 = project(amps, table);
    double worst = 0;
    for (int i = 0; i <= 40; ++i) {
        const double t = 2.5 * i / 40.0;
        const auto st = evolve(c0, table, t);
        const double c = std::cos(rot.g * t);
        worst = std::max(worst, std::abs(mean_photon(st, table, Mode::Field) - nf * c * c));
        worst = std::max(worst, std::abs(overlap(c0, st) - std::pow(c, 2 * nf)));
    }

    const ModelParams uncoupled{1.0, 1.0, 1.0, 0.0};
    const auto amps2 = field_amplitudes(InitialState::coherent(1.0), 1e-12);
    const auto table2 = build_table(uncoupled, amps2.n_max);
    const auto c02 = project(amps2, table2);
    double worst_ent = 0;
    for (double t : {0.4, 2.0, 7.7}) {
        const auto grid = to_fock_grid(evolve(c02, table2, t), table2);
        worst_ent = std::max(worst_ent, entropies(reduce(grid, Subsystem::Field)).svne);
        worst_ent = std::max(worst_ent, entropies(reduce(grid, Subsystem::Atom)).svne);
    }

    const double dt = elapsed_s(start);
    report(8, worst <= 1e-8 && worst_ent <= 1e-10 && dt < 1.0, "closed-form limits",
           "rotation dev " + fmt(worst) + ", g=0 entropy " + fmt(worst_ent) + ", " + fmt(dt) +
               " s");
}

void criterion_9_determinism() {
    namespace fs = std::filesystem;
    RunConfig config;
    config.params = kReference;
    config.initial = InitialState::coherent(1.0);
    config.t_max = 0.5;
    config.n_samples = 64;

    const auto read = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    // identical config both times, including out_dir (echoed into the report)
    const auto dir = fs::temp_directory_path() / "revival_acc_det";
    fs::remove_all(dir);
    config.out_dir = dir;
    run_simulation(config);
    const auto csv_first = read(dir / "timeseries.csv");
    const auto report_first = read(dir / "report.json");
    fs::remove_all(dir);
    run_simulation(config);

    const bool csv_same = read(dir / "timeseries.csv") == csv_first;
    const bool report_same = read(dir / "report.json") == report_first;
    fs::remove_all(dir);
    report(9, csv_same && report_same, "byte-identical repeated runs",
           std::string("csv ") + (csv_same ? "identical" : "DIFFERS") + ", report " +
               (report_same ? "identical" : "DIFFERS"));
}

} // namespace

int main() {
    std::printf("acceptance suite: reference parameters omega=omega0=1, gamma=1, g=100\n");

    criterion_1_evolution_oracle();
    criterion_2_block_spectrum();

    const auto series_fock = entropy_run(InitialState::fock(10), kReference, 1.2 * 2.0 * kPi);
    const auto series_cs = entropy_run(InitialState::coherent(1.0), kReference, 1.2 * 4.0 * kPi);
    const auto series_pacs =
        entropy_run(InitialState::photon_added(std::sqrt(5.0), 5), kReference, 1.2 * 4.0 * kPi);

    criterion_3_entropy_identities({&series_fock, &series_cs, &series_pacs});
    bool coherent_dip = false;
    criterion_4_revival_dips(series_fock, series_cs, &coherent_dip);
    criterion_5_pacs_degradation(series_pacs, coherent_dip);
    criterion_6_fidelity_ordering();
    criterion_7_quadrature_signatures();
    criterion_8_closed_forms();
    criterion_9_determinism();

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
