#pragma once

#include "revival/model.hpp"
#include "revival/states.hpp"

namespace revival {

// |psi(t)> in the block eigenbasis: c_t[N][s] = exp(-i lambda_Ns t) c[N][s].
struct EvolvedState {
    double t = 0.0;
    std::vector<std::vector<cplx>> c_t;

    int n_max() const { return static_cast<int>(c_t.size()) - 1; }
};

// Amplitudes on the two-mode Fock grid: a(fld, n) multiplies |fld>_a x |n>_b.
// Square storage; entries outside the fld + n <= n_max triangle are zero for
// states coming out of to_fock_grid, but ladder operators may grow the grid.
struct FockGridAmplitudes {
    Matrix<cplx> a;

    int field_dim() const { return static_cast<int>(a.rows()); }
    int atom_dim() const { return static_cast<int>(a.cols()); }
    double norm2() const;
    // Largest fld + n carrying a nonzero amplitude; -1 for the zero grid.
    int max_total_number() const;
};

// Spectral evolution: exact at any t, no integrator. Phase arguments
// lambda * t are reduced modulo 2 pi in extended precision before the
// trig evaluation so large times do not lose phase accuracy.
EvolvedState evolve(const EigenbasisCoefficients& c0, const BlockTable& table, double t);

// Change of basis eigenbasis -> Fock grid: a(N-n, n) = sum_s c_t[N][s] d_n^{Ns}.
FockGridAmplitudes to_fock_grid(const EvolvedState& st, const BlockTable& table);

// Inverse change of basis (grid must be covered by the table).
EigenbasisCoefficients from_fock_grid(const FockGridAmplitudes& grid, const BlockTable& table);

// |<psi(0)|psi(t)>|^2.
double overlap(const EigenbasisCoefficients& c0, const EvolvedState& st);

// Full pure-state density matrix in the block eigenbasis, flattened with
// rho(flat(M,l), flat(M',l')) = c_t[M][l] conj(c_t[M'][l']) and
// flat(N, s) = N(N+1)/2 + s. Diagnostics / tests only: the dimension is
// quadratic in the state size, production paths never materialize it.
Matrix<cplx> density_matrix_eigenbasis(const EvolvedState& st);

// <H> = sum lambda_Ns |c|^2 and <N_tot> = sum N |c|^2; both conserved.
double mean_energy(const EvolvedState& st, const BlockTable& table);
double mean_total_number(const EvolvedState& st);

} // namespace revival
