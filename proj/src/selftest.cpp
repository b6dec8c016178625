#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include "revival/analysis.hpp"
#include "revival/entanglement.hpp"
#include "revival/evolution.hpp"
#include "revival/linalg.hpp"
#include "revival/observables.hpp"
#include "revival/runner.hpp"

namespace revival {

namespace {

constexpr int kCut = 6;
const ModelParams kReferenceParams{1.0, 1.0, 1.0, 100.0};

std::vector<cplx> dense_propagate(const linalg::EigenDecompositionComplex& eig,
                                  const std::vector<cplx>& psi0, double t) {
    const std::size_t dim = psi0.size();
    std::vector<cplx> modal(dim), out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        cplx acc = 0;
        for (std::size_t i = 0; i < dim; ++i) acc += std::conj(eig.vectors(i, k)) * psi0[i];
        modal[k] = acc * std::exp(cplx{0.0, -eig.values[k] * t});
    }
    for (std::size_t i = 0; i < dim; ++i) {
        cplx acc = 0;
        for (std::size_t k = 0; k < dim; ++k) acc += eig.vectors(i, k) * modal[k];
        out[i] = acc;
    }
    return out;
}

linalg::EigenDecompositionComplex dense_eig(const Matrix<double>& h) {
    linalg::HermitianMatrix hm;
    hm.entries = Matrix<cplx>(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) hm.entries(i, j) = h(i, j);
    return linalg::eig_hermitian(hm);
}

bool check_block_spectrum(std::ostream& out) {
    const auto h = full_space_hamiltonian(kReferenceParams, kCut);
    const auto dense = dense_eig(h);

    std::vector<double> block_values;
    for (int N = 0; N <= kCut; ++N) {
        const auto blk = diagonalize_block(kReferenceParams, N);
        block_values.insert(block_values.end(), blk.lambdas.begin(), blk.lambdas.end());
    }
    std::sort(block_values.begin(), block_values.end());
    double worst = 0;
    for (std::size_t i = 0; i < block_values.size(); ++i)
        worst = std::max(worst, std::abs(block_values[i] - dense.values[i]));

    // [N_tot, H] = 0 exactly: H carries no matrix element between blocks.
    double comm = 0;
    for (int N = 0; N <= kCut; ++N)
        for (int n = 0; n <= N; ++n)
            for (int Np = 0; Np <= kCut; ++Np)
                for (int np = 0; np <= Np; ++np) {
                    const double hij = h(oracle_index(N, n), oracle_index(Np, np));
                    comm = std::max(comm, std::abs(hij * (N - Np)));
                }

    const bool ok = worst <= 1e-8 && comm == 0.0;
    out << (ok ? "[ok]  " : "[FAIL] ") << "block spectra match dense spectrum (max dev "
        << worst << "), commutator " << comm << "\n";
    return ok;
}

bool check_evolution_oracle(std::ostream& out) {
    const auto h = full_space_hamiltonian(kReferenceParams, kCut);
    const auto dense = dense_eig(h);
    const auto table = build_table(kReferenceParams, kCut);

    std::mt19937 rng(12345);
    std::normal_distribution<double> gauss;
    double worst = 0;
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<cplx> psi0(oracle_dimension(kCut));
        double norm2 = 0;
        for (auto& v : psi0) {
            v = {gauss(rng), gauss(rng)};
            norm2 += std::norm(v);
        }
        for (auto& v : psi0) v /= std::sqrt(norm2);

        FockGridAmplitudes grid;
        grid.a = Matrix<cplx>(kCut + 1, kCut + 1);
        for (int N = 0; N <= kCut; ++N)
            for (int n = 0; n <= N; ++n)
                grid.a(static_cast<std::size_t>(N - n), static_cast<std::size_t>(n)) =
                    psi0[oracle_index(N, n)];
        const auto c0 = from_fock_grid(grid, table);

        for (double t : {0.1, 1.0, 10.0}) {
            const auto expected = dense_propagate(dense, psi0, t);
            const auto got = to_fock_grid(evolve(c0, table, t), table);
            for (int N = 0; N <= kCut; ++N)
                for (int n = 0; n <= N; ++n)
                    worst = std::max(worst, std::abs(got.a(static_cast<std::size_t>(N - n),
                                                           static_cast<std::size_t>(n)) -
                                                     expected[oracle_index(N, n)]));
        }
    }
    const bool ok = worst <= 1e-10;
    out << (ok ? "[ok]  " : "[FAIL] ") << "blockwise evolution matches dense propagation (max dev "
        << worst << ")\n";
    return ok;
}

bool check_entropy_identities(std::ostream& out) {
    const auto amps = field_amplitudes(InitialState::coherent(1.0), 1e-12);
    const auto table = build_table(kReferenceParams, amps.n_max);
    const auto c0 = project(amps, table);

    double worst_pair = 0, worst_purity = 0, t0_entropy = 0;
    bool svne_ge_sle = true;
    for (double t : {0.0, 0.3, 1.7, 6.0}) {
        const auto st = evolve(c0, table, t);
        const auto grid = to_fock_grid(st, table);
        const auto f = entropies(reduce(grid, Subsystem::Field));
        const auto a = entropies(reduce(grid, Subsystem::Atom));
        worst_pair = std::max({worst_pair, std::abs(f.svne - a.svne), std::abs(f.sle - a.sle)});
        // exact for a unit-trace spectrum; the truncation tail relaxes it by O(eps)
        if (f.svne < f.sle - 1e-8) svne_ge_sle = false;
        if (t == 0.0) t0_entropy = std::max(f.svne, a.svne);

        const auto rho = density_matrix_eigenbasis(st);
        const auto rho2 = matmul(rho, rho);
        for (std::size_t i = 0; i < rho.rows(); ++i)
            for (std::size_t j = 0; j < rho.cols(); ++j)
                worst_purity = std::max(worst_purity, std::abs(rho2(i, j) - rho(i, j)));
    }
    const bool ok = worst_pair <= 1e-8 && worst_purity <= 1e-8 && t0_entropy <= 1e-8 && svne_ge_sle;
    out << (ok ? "[ok]  " : "[FAIL] ") << "entropy identities (S_a = S_b dev " << worst_pair
        << ", purity dev " << worst_purity << ", t=0 entropy " << t0_entropy << ")\n";
    return ok;
}

bool check_closed_forms(std::ostream& out) {
    // gamma = 0, omega = omega0: rotation limit
    const ModelParams rot{1.0, 1.0, 0.0, 2.0};
    const int N = 6;
    const auto amps = field_amplitudes(InitialState::fock(N), 1e-12);
    const auto table = build_table(rot, N);
    const auto c0 = project(amps, table);
    double worst = 0;
    for (double t : {0.0, 0.2, 0.7, 1.9}) {
        const auto st = evolve(c0, table, t);
        const double c = std::cos(rot.g * t);
        worst = std::max(worst, std::abs(mean_photon(st, table, Mode::Field) - N * c * c));
        worst = std::max(worst, std::abs(overlap(c0, st) - std::pow(c, 2 * N)));
    }

    // g = 0: modes never couple, entropies stay zero
    const ModelParams decoupled{1.0, 1.0, 1.0, 0.0};
    const auto amps2 = field_amplitudes(InitialState::coherent(1.0), 1e-12);
    const auto table2 = build_table(decoupled, amps2.n_max);
    const auto c02 = project(amps2, table2);
    double worst_ent = 0;
    for (double t : {0.5, 3.0}) {
        const auto grid = to_fock_grid(evolve(c02, table2, t), table2);
        worst_ent = std::max(worst_ent, entropies(reduce(grid, Subsystem::Field)).svne);
    }

    const bool ok = worst <= 1e-8 && worst_ent <= 1e-10;
    out << (ok ? "[ok]  " : "[FAIL] ") << "closed-form limits (rotation dev " << worst
        << ", g=0 entropy " << worst_ent << ")\n";
    return ok;
}

bool check_angular_momentum_form(std::ostream& out) {
    bool ok = true;
    for (int N : {0, 3, 7}) ok = ok && angular_momentum_check(kReferenceParams, N);
    ok = ok && angular_momentum_check({0.7, 2.1, 0.4, 5.0}, 5);
    out << (ok ? "[ok]  " : "[FAIL] ") << "angular-momentum form rebuilds the blocks\n";
    return ok;
}

} // namespace

bool selftest(std::ostream& out) {
    bool ok = true;
    ok &= check_block_spectrum(out);
    ok &= check_evolution_oracle(out);
    ok &= check_entropy_identities(out);
    ok &= check_closed_forms(out);
    ok &= check_angular_momentum_form(out);
    out << (ok ? "selftest passed\n" : "selftest FAILED\n");
    return ok;
}

} // namespace revival
