#include "revival/model.hpp"

#include <cmath>
#include <stdexcept>

#include "revival/parallel.hpp"

namespace revival {

namespace {

void check_params(const ModelParams& p) {
    if (!(std::isfinite(p.omega) && std::isfinite(p.omega0) && std::isfinite(p.gamma) &&
          std::isfinite(p.g)))
        throw std::invalid_argument("ModelParams: non-finite parameter");
    if (p.omega < 0 || p.omega0 < 0 || p.gamma < 0 || p.g < 0)
        throw std::invalid_argument("ModelParams: negative parameter");
}

} // namespace

linalg::SymTridiag block_matrix(const ModelParams& p, int N) {
    check_params(p);
    if (N < 0) throw std::invalid_argument("block_matrix: N must be nonnegative");
    linalg::SymTridiag t;
    t.diag.resize(static_cast<std::size_t>(N) + 1);
    t.offdiag.resize(static_cast<std::size_t>(N));
    for (int n = 0; n <= N; ++n)
        t.diag[static_cast<std::size_t>(n)] =
            p.omega * (N - n) + p.omega0 * n + p.gamma * n * (n - 1.0);
    for (int n = 0; n < N; ++n)
        t.offdiag[static_cast<std::size_t>(n)] =
            p.g * std::sqrt(static_cast<double>(N - n) * (n + 1.0));
    return t;
}

BlockEigensystem diagonalize_block(const ModelParams& p, int N) {
    auto decomp = linalg::eig_sym_tridiag(block_matrix(p, N));
    return {N, std::move(decomp.values), std::move(decomp.vectors)};
}

BlockTable build_table(const ModelParams& p, int n_max) {
    check_params(p);
    if (n_max < 0) throw std::invalid_argument("build_table: n_max must be nonnegative");
    std::vector<BlockEigensystem> blocks(static_cast<std::size_t>(n_max) + 1);
    parallel_for(blocks.size(),
                 [&](std::size_t N) { blocks[N] = diagonalize_block(p, static_cast<int>(N)); });
    return BlockTable(p, std::move(blocks));
}

std::size_t oracle_index(int N, int n) {
    return static_cast<std::size_t>(N) * (static_cast<std::size_t>(N) + 1) / 2 +
           static_cast<std::size_t>(n);
}

std::size_t oracle_dimension(int n_cut) {
    return oracle_index(n_cut + 1, 0);
}

Matrix<double> full_space_hamiltonian(const ModelParams& p, int n_cut) {
    check_params(p);
    if (n_cut < 0) throw std::invalid_argument("full_space_hamiltonian: n_cut must be nonnegative");
    const std::size_t dim = oracle_dimension(n_cut);
    Matrix<double> h(dim, dim);
    for (int N = 0; N <= n_cut; ++N) {
        for (int n = 0; n <= N; ++n) {
            const int fld = N - n;
            const std::size_t row = oracle_index(N, n);
            // number operators and the anharmonic term
            h(row, row) += p.omega * fld + p.omega0 * n + p.gamma * n * (n - 1.0);
            // g a^dag b : |fld; n> -> sqrt(n (fld+1)) |fld+1; n-1>
            if (n >= 1) {
                const std::size_t col = oracle_index(N, n - 1);
                h(col, row) += p.g * std::sqrt(static_cast<double>(n) * (fld + 1.0));
            }
            // g b^dag a : |fld; n> -> sqrt(fld (n+1)) |fld-1; n+1>
            if (fld >= 1) {
                const std::size_t col = oracle_index(N, n + 1);
                h(col, row) += p.g * std::sqrt(static_cast<double>(fld) * (n + 1.0));
            }
        }
    }
    return h;
}

bool angular_momentum_check(const ModelParams& p, int N) {
    if (N < 0) throw std::invalid_argument("angular_momentum_check: N must be nonnegative");
    const auto direct = block_matrix(p, N);
    const double j = 0.5 * N;
    for (int n = 0; n <= N; ++n) {
        const double jz = j - n; // Jz eigenvalue of |N-n; n>
        const double diag = 0.5 * (p.omega + p.omega0 - p.gamma) * N +
                            (p.omega - p.omega0 + p.gamma) * jz +
                            0.25 * p.gamma * (N - 2.0 * jz) * (N - 2.0 * jz);
        if (std::abs(diag - direct.diag[static_cast<std::size_t>(n)]) > 1e-12) return false;
    }
    for (int n = 0; n < N; ++n) {
        // 2g Jx = g (J+ + J-); <n+1| g J- |n> with m = j - n:
        // g sqrt((j+m)(j-m+1)) = g sqrt((N-n)(n+1))
        const double m = j - n;
        const double off = p.g * std::sqrt((j + m) * (j - m + 1.0));
        if (std::abs(off - direct.offdiag[static_cast<std::size_t>(n)]) > 1e-12) return false;
    }
    return true;
}

} // namespace revival
