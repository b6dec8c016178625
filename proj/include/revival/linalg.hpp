#pragma once

#include <vector>

#include "revival/matrix.hpp"

namespace revival::linalg {

// Real symmetric tridiagonal matrix: diag has length n, offdiag length n-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }
};

// Hermitian matrix wrapper; hermiticity is validated by the solver.
struct HermitianMatrix {
    Matrix<cplx> entries;

    std::size_t size() const { return entries.rows(); }
};

// Spectrum in ascending order; column k of `vectors` is the eigenvector of
// values[k]. Columns are orthonormal; the first component of each column
// larger than 1e-12 in magnitude is made positive (real case) or real
// positive (complex case) so decompositions are reproducible run to run.
struct EigenDecompositionReal {
    std::vector<double> values;
    Matrix<double> vectors;
};

struct EigenDecompositionComplex {
    std::vector<double> values;
    Matrix<cplx> vectors;
};

// Implicit-shift QL iteration with eigenvector accumulation.
// Throws std::runtime_error if any eigenvalue fails to converge within the
// iteration cap (50 sweeps per eigenvalue), std::invalid_argument on
// malformed input.
EigenDecompositionReal eig_sym_tridiag(const SymTridiag& m);

// Householder reduction of the complex Hermitian matrix to a real symmetric
// tridiagonal one, QL on the reduced problem, then back-transformation.
// Input must be Hermitian within 1e-12 (max elementwise deviation).
EigenDecompositionComplex eig_hermitian(const HermitianMatrix& m);

bool is_hermitian(const Matrix<cplx>& m, double tol);

} // namespace revival::linalg
