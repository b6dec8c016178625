#include "revival/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace revival {

namespace {

void check_built_from(const std::vector<std::vector<cplx>>& c, const BlockTable& table,
                      const char* who) {
    if (static_cast<int>(c.size()) - 1 > table.n_max())
        throw std::invalid_argument(std::string(who) + ": table does not cover the state");
    for (std::size_t N = 0; N < c.size(); ++N)
        if (c[N].size() != N + 1)
            throw std::invalid_argument(std::string(who) + ": malformed block coefficients");
}

// exp(-i lambda t) with the argument reduced mod 2 pi in extended precision.
cplx spectral_phase(double lambda, double t) {
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    const long double arg = std::remainderl(static_cast<long double>(lambda) *
                                            static_cast<long double>(t), two_pi);
    const double a = static_cast<double>(arg);
    return {std::cos(a), -std::sin(a)};
}

} // namespace

double FockGridAmplitudes::norm2() const {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
    return s;
}

int FockGridAmplitudes::max_total_number() const {
    int best = -1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != cplx{0.0, 0.0}) best = std::max(best, static_cast<int>(i + j));
    return best;
}

EvolvedState evolve(const EigenbasisCoefficients& c0, const BlockTable& table, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("evolve: non-finite time");
    check_built_from(c0.c, table, "evolve");
    EvolvedState out;
    out.t = t;
    out.c_t.resize(c0.c.size());
    for (std::size_t N = 0; N < c0.c.size(); ++N) {
        const auto& lambdas = table.block(static_cast<int>(N)).lambdas;
        auto& row = out.c_t[N];
        row.resize(N + 1);
        for (std::size_t s = 0; s <= N; ++s)
            row[s] = (t == 0.0) ? c0.c[N][s] : spectral_phase(lambdas[s], t) * c0.c[N][s];
    }
    return out;
}

FockGridAmplitudes to_fock_grid(const EvolvedState& st, const BlockTable& table) {
    check_built_from(st.c_t, table, "to_fock_grid");
    const int n_max = st.n_max();
    FockGridAmplitudes grid;
    grid.a = Matrix<cplx>(static_cast<std::size_t>(n_max) + 1, static_cast<std::size_t>(n_max) + 1);
    for (int N = 0; N <= n_max; ++N) {
        const auto& d = table.block(N).d;
        const auto& row = st.c_t[static_cast<std::size_t>(N)];
        for (int n = 0; n <= N; ++n) {
            cplx amp = 0;
            for (int s = 0; s <= N; ++s)
                amp += row[static_cast<std::size_t>(s)] *
                       d(static_cast<std::size_t>(n), static_cast<std::size_t>(s));
            grid.a(static_cast<std::size_t>(N - n), static_cast<std::size_t>(n)) = amp;
        }
    }
    return grid;
}

EigenbasisCoefficients from_fock_grid(const FockGridAmplitudes& grid, const BlockTable& table) {
    const int top = grid.max_total_number();
    if (top > table.n_max())
        throw std::invalid_argument("from_fock_grid: table does not cover the grid support");
    EigenbasisCoefficients out;
    out.c.resize(static_cast<std::size_t>(std::max(top, 0)) + 1);
    for (int N = 0; N < static_cast<int>(out.c.size()); ++N) {
        const auto& d = table.block(N).d;
        auto& row = out.c[static_cast<std::size_t>(N)];
        row.assign(static_cast<std::size_t>(N) + 1, cplx{0.0, 0.0});
        if (N > top) continue;
        for (int s = 0; s <= N; ++s) {
            cplx amp = 0;
            for (int n = 0; n <= N; ++n) {
                const int fld = N - n;
                if (fld < grid.field_dim() && n < grid.atom_dim())
                    amp += grid.a(static_cast<std::size_t>(fld), static_cast<std::size_t>(n)) *
                           d(static_cast<std::size_t>(n), static_cast<std::size_t>(s));
            }
            row[static_cast<std::size_t>(s)] = amp;
        }
    }
    return out;
}

double overlap(const EigenbasisCoefficients& c0, const EvolvedState& st) {
    if (c0.c.size() != st.c_t.size())
        throw std::invalid_argument("overlap: states built from different truncations");
    cplx acc = 0;
    for (std::size_t N = 0; N < c0.c.size(); ++N)
        for (std::size_t s = 0; s < c0.c[N].size(); ++s)
            acc += std::conj(c0.c[N][s]) * st.c_t[N][s];
    return std::norm(acc);
}

Matrix<cplx> density_matrix_eigenbasis(const EvolvedState& st) {
    const int n_max = st.n_max();
    const std::size_t dim = oracle_dimension(n_max);
    Matrix<cplx> rho(dim, dim);
    for (int M = 0; M <= n_max; ++M)
        for (int l = 0; l <= M; ++l) {
            const cplx left = st.c_t[static_cast<std::size_t>(M)][static_cast<std::size_t>(l)];
            for (int Mp = 0; Mp <= n_max; ++Mp)
                for (int lp = 0; lp <= Mp; ++lp)
                    rho(oracle_index(M, l), oracle_index(Mp, lp)) =
                        left *
                        std::conj(st.c_t[static_cast<std::size_t>(Mp)][static_cast<std::size_t>(lp)]);
        }
    return rho;
}

double mean_energy(const EvolvedState& st, const BlockTable& table) {
    check_built_from(st.c_t, table, "mean_energy");
    double acc = 0;
    for (std::size_t N = 0; N < st.c_t.size(); ++N) {
        const auto& lambdas = table.block(static_cast<int>(N)).lambdas;
        for (std::size_t s = 0; s < st.c_t[N].size(); ++s)
            acc += lambdas[s] * std::norm(st.c_t[N][s]);
    }
    return acc;
}

double mean_total_number(const EvolvedState& st) {
    double acc = 0;
    for (std::size_t N = 0; N < st.c_t.size(); ++N)
        for (const cplx& v : st.c_t[N]) acc += static_cast<double>(N) * std::norm(v);
    return acc;
}

} // namespace revival
