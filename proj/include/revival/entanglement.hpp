#pragma once

#include <span>

#include "revival/evolution.hpp"
#include "revival/linalg.hpp"

namespace revival {

enum class Subsystem { Field, Atom };

// Reduced density matrix of one mode in the Fock basis, with its spectrum.
struct ReducedDensity {
    Subsystem subsystem = Subsystem::Field;
    linalg::HermitianMatrix rho;
    std::vector<double> spectrum; // ascending

    double trace() const;
};

struct EntropyPair {
    double svne = 0.0; // -sum lambda ln lambda, nats
    double sle = 0.0;  // 1 - sum lambda^2
};

struct EntropyRow {
    double t = 0.0;
    double svne_field = 0.0;
    double sle_field = 0.0;
    double svne_atom = 0.0;
    double sle_atom = 0.0;
};

// Partial trace of the pure state on the grid. Field: rho[f,f'] =
// sum_n a(f,n) conj(a(f',n)); atom: rho[n,n'] = sum_f a(f,n) conj(a(f,n')).
// The spectrum is filled by diagonalizing the result.
ReducedDensity reduce(const FockGridAmplitudes& grid, Subsystem which);

// Entropies from the spectrum. Eigenvalues in [-1e-12, 0) are clamped to 0
// and values above 1 clamped to 1; anything below -1e-12 or a trace off 1
// by more than 1e-6 signals a bug upstream and throws.
EntropyPair entropies(const ReducedDensity& r);

// Per-sample entropies of both subsystems, parallel over time samples.
std::vector<EntropyRow> entropy_timeseries(const EigenbasisCoefficients& c0,
                                           const BlockTable& table,
                                           std::span<const double> times);

} // namespace revival
