#pragma once

#include <span>
#include <variant>

#include "revival/evolution.hpp"

namespace revival {

enum class Mode { Field, Atom };

enum class QuadratureKind { Xi, Eta, Xa, Pa, Xb, Pb };

// xi = (x_a + x_b)/2, eta = (p_a + p_b)/2 with x = (a + a^dag)/sqrt(2),
// p = (a - a^dag)/(i sqrt(2)); moments up to order 4.
struct QuadratureSpec {
    QuadratureKind kind = QuadratureKind::Xi;
    int order = 1;
};

enum class HigherQuadrature { Z1, Z2 };

// Z1 = (a^q + a^dag^q + b^q + b^dag^q)/(2 sqrt(2)),
// Z2 = (a^q - a^dag^q + b^q - b^dag^q)/(2 i sqrt(2)); q <= 3.
struct HigherQuadratureSpec {
    HigherQuadrature which = HigherQuadrature::Z1;
    int q = 2;
};

// Two reference levels are in circulation for q-th power squeezing and they
// only coincide at q = 1 (where [Z1, Z2] is a c-number):
//   threshold        -- the two-mode vacuum variance q!/4, the level that
//                       generalizes the Delta xi = 1/2 line; this is the
//                       operative squeezing criterion here
//   commutator_bound -- the Hillery-style bound 1/2 |<[Z1, Z2]>| evaluated
//                       on the same state, reported for comparison; it grows
//                       with the photon number for q >= 2
struct SqueezeCheck {
    double variance = 0.0;
    double threshold = 0.0;
    double commutator_bound = 0.0;

    // strictly below the vacuum level; the guard keeps boundary states
    // (vacuum, coherent) from flipping on round-off
    bool squeezed() const { return variance < threshold - 1e-12 * std::max(1.0, threshold); }
};

// Annihilation operator of one mode on the grid (unnormalized output,
// same grid dimensions). Creation grows the grid by one level.
FockGridAmplitudes apply_annihilation(Mode mode, const FockGridAmplitudes& grid);
FockGridAmplitudes apply_creation(Mode mode, const FockGridAmplitudes& grid);

// One application of the chosen quadrature operator; output grid is one
// level larger in each mode the operator touches.
FockGridAmplitudes apply_quadrature(QuadratureKind kind, const FockGridAmplitudes& grid);

// <u|v>, grids zero-padded to common dimensions.
cplx grid_inner(const FockGridAmplitudes& u, const FockGridAmplitudes& v);

// Raw moment <(operator)^order>, order <= 4, evaluated by repeated operator
// application on the Fock grid. Throws if the imaginary residue of the
// Hermitian expectation exceeds 1e-10.
double moment(const EvolvedState& st, const BlockTable& table, const QuadratureSpec& spec);

// Same, on a prebuilt grid; lets callers share one grid across moments.
double moment_on_grid(const FockGridAmplitudes& grid, QuadratureKind kind, int order);

double std_dev_xi(const EvolvedState& st, const BlockTable& table);

double mean_photon(const EvolvedState& st, const BlockTable& table, Mode mode);

// Variance of Z1 or Z2 against the commutator-based squeezing threshold.
SqueezeCheck higher_quadrature_variance(const EvolvedState& st, const BlockTable& table,
                                        const HigherQuadratureSpec& spec);

// Appendix-form ladder matrix element <psi_Ns| op |psi_N's'> in the block
// eigenbasis; zero unless N = N' - 1. Cross-check companion to the grid
// route used by moment().
double ladder_matrix_element(Mode mode, const BlockTable& table, int N, int s, int Np, int sp);

// Figure-class output: one moment sampled over a time grid. `central`
// distinguishes raw <O^k> from central <(O - <O>)^k> values.
struct MomentSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::variant<QuadratureSpec, HigherQuadratureSpec> spec;
    bool central = false;
};

// Parallel over time samples. Central moments are assembled from the raw
// ones; order 1 central is identically zero.
MomentSeries moment_timeseries(const EigenbasisCoefficients& c0, const BlockTable& table,
                               std::span<const double> times, const QuadratureSpec& spec,
                               bool central = false);

// Variance of Z1 or Z2 over a time grid (always central).
MomentSeries higher_variance_timeseries(const EigenbasisCoefficients& c0, const BlockTable& table,
                                        std::span<const double> times,
                                        const HigherQuadratureSpec& spec);

} // namespace revival
