#pragma once

#include <vector>

#include "revival/linalg.hpp"
#include "revival/matrix.hpp"

namespace revival {

// H = omega a^dag a + omega0 b^dag b + gamma b^dag^2 b^2 + g (a^dag b + b^dag a),
// hbar = 1. Mode a is the field, mode b the atom (anharmonic oscillator).
struct ModelParams {
    double omega = 1.0;
    double omega0 = 1.0;
    double gamma = 1.0;
    double g = 100.0;
};

// Eigensystem of one conserved-total-number block: H restricted to the
// span of |N-n; n>, n = 0..N. d(n, s) is the n-th component of the s-th
// eigenvector; lambdas are ascending.
struct BlockEigensystem {
    int N = 0;
    std::vector<double> lambdas;
    Matrix<double> d;
};

// All blocks N = 0..n_max for fixed parameters. Immutable once built;
// concurrent reads are safe.
class BlockTable {
public:
    BlockTable(ModelParams params, std::vector<BlockEigensystem> blocks)
        : params_(params), blocks_(std::move(blocks)) {}

    const ModelParams& params() const { return params_; }
    int n_max() const { return static_cast<int>(blocks_.size()) - 1; }
    const BlockEigensystem& block(int N) const { return blocks_.at(static_cast<std::size_t>(N)); }

private:
    ModelParams params_;
    std::vector<BlockEigensystem> blocks_;
};

// Tridiagonal matrix of H on block N, basis ordered by atom occupancy n:
//   diag[n]    = omega (N-n) + omega0 n + gamma n (n-1)
//   offdiag[n] = g sqrt((N-n)(n+1))
linalg::SymTridiag block_matrix(const ModelParams& p, int N);

BlockEigensystem diagonalize_block(const ModelParams& p, int N);

// Diagonalizes blocks 0..n_max (in parallel across N).
BlockTable build_table(const ModelParams& p, int n_max);

// Dense H on the truncated product space {|n'>_a x |n>_b : n' + n <= n_cut},
// built by direct ladder-operator action; basis index is
// oracle_index(N, n) = N(N+1)/2 + n with N = n' + n. Test / cross-check use
// only; dimension grows as n_cut^2 / 2.
Matrix<double> full_space_hamiltonian(const ModelParams& p, int n_cut);

std::size_t oracle_index(int N, int n);
std::size_t oracle_dimension(int n_cut);

// Rebuilds block N from the Schwinger angular-momentum form
// H = (omega+omega0-gamma)/2 Ntot + (omega-omega0+gamma) Jz
//     + gamma/4 (Ntot - 2 Jz)^2 + 2 g Jx
// and compares elementwise with block_matrix within 1e-12.
bool angular_momentum_check(const ModelParams& p, int N);

} // namespace revival
