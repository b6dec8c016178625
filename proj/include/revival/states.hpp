#pragma once

#include <complex>
#include <vector>

#include "revival/model.hpp"

namespace revival {

// Product initial state: a field mode (Fock / coherent / m-photon-added
// coherent) tensored with the atom ground state. A photon-added state with
// m = 0 is stored as Coherent.
class InitialState {
public:
    enum class Kind { Fock, Coherent, PhotonAdded };

    static InitialState fock(int nprime);
    static InitialState coherent(cplx alpha);
    static InitialState photon_added(cplx alpha, int m);

    Kind kind() const { return kind_; }
    int fock_level() const { return nprime_; }
    cplx alpha() const { return alpha_; }
    int added_photons() const { return m_; }
    double nu() const { return std::norm(alpha_); }

private:
    InitialState(Kind k, int nprime, cplx alpha, int m)
        : kind_(k), nprime_(nprime), alpha_(alpha), m_(m) {}

    Kind kind_;
    int nprime_;
    cplx alpha_;
    int m_;
};

// Fock expansion of the field mode, truncated so the dropped tail weight
// is at most the eps passed to field_amplitudes.
struct FieldAmplitudes {
    std::vector<cplx> f; // f[l] multiplies |l>_a; size n_max + 1
    int n_max = 0;
    double tail_weight = 0.0;
};

// Initial-state coefficients in the block eigenbasis: c[N][s] = <psi_Ns|psi(0)>.
struct EigenbasisCoefficients {
    std::vector<std::vector<cplx>> c;

    int n_max() const { return static_cast<int>(c.size()) - 1; }
    double norm2() const;
};

// Laguerre polynomial at a nonpositive argument, log scale: ln L_m(-nu).
// Upward recurrence; every term is positive for nu >= 0 so the recurrence
// is stable.
double log_laguerre_neg(int m, double nu);

// Smallest n_max whose dropped tail weight is <= eps. eps must lie in
// (0, 1e-6].
int required_cutoff(const InitialState& s, double eps);

FieldAmplitudes field_amplitudes(const InitialState& s, double eps);

// Projects field (x) atom-ground onto the block eigenbasis:
// c[N][s] = f[N] d_0^{Ns}. Throws if the table does not cover n_max.
EigenbasisCoefficients project(const FieldAmplitudes& s, const BlockTable& table);

} // namespace revival
