#include "revival/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "revival/parallel.hpp"

namespace revival {

double ReducedDensity::trace() const {
    double t = 0;
    for (std::size_t i = 0; i < rho.size(); ++i) t += rho.entries(i, i).real();
    return t;
}

ReducedDensity reduce(const FockGridAmplitudes& grid, Subsystem which) {
    const std::size_t fdim = grid.a.rows();
    const std::size_t adim = grid.a.cols();
    ReducedDensity out;
    out.subsystem = which;
    if (which == Subsystem::Field) {
        out.rho.entries = Matrix<cplx>(fdim, fdim);
        for (std::size_t f = 0; f < fdim; ++f)
            for (std::size_t fp = f; fp < fdim; ++fp) {
                cplx acc = 0;
                for (std::size_t n = 0; n < adim; ++n)
                    acc += grid.a(f, n) * std::conj(grid.a(fp, n));
                out.rho.entries(f, fp) = acc;
                out.rho.entries(fp, f) = std::conj(acc);
            }
    } else {
        out.rho.entries = Matrix<cplx>(adim, adim);
        for (std::size_t n = 0; n < adim; ++n)
            for (std::size_t np = n; np < adim; ++np) {
                cplx acc = 0;
                for (std::size_t f = 0; f < fdim; ++f)
                    acc += grid.a(f, n) * std::conj(grid.a(f, np));
                out.rho.entries(n, np) = acc;
                out.rho.entries(np, n) = std::conj(acc);
            }
    }
    out.spectrum = linalg::eig_hermitian(out.rho).values;
    return out;
}

EntropyPair entropies(const ReducedDensity& r) {
    if (r.spectrum.empty())
        throw std::invalid_argument("entropies: reduced density has no spectrum attached");
    if (std::abs(r.trace() - 1.0) > 1e-6)
        throw std::runtime_error("entropies: reduced density trace deviates from 1 beyond 1e-6");
    double spectrum_sum = 0;
    for (double lambda : r.spectrum) spectrum_sum += lambda;
    if (std::abs(spectrum_sum - r.trace()) > 1e-6)
        throw std::runtime_error("entropies: spectrum inconsistent with the matrix trace");
    EntropyPair out;
    double sum_sq = 0;
    for (double lambda : r.spectrum) {
        if (lambda < -1e-12)
            throw std::runtime_error("entropies: eigenvalue below -1e-12 in reduced density");
        const double clamped = std::clamp(lambda, 0.0, 1.0);
        if (clamped > 0.0) out.svne -= clamped * std::log(clamped);
        sum_sq += clamped * clamped;
    }
    out.sle = 1.0 - sum_sq;
    return out;
}

std::vector<EntropyRow> entropy_timeseries(const EigenbasisCoefficients& c0,
                                           const BlockTable& table,
                                           std::span<const double> times) {
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (!(times[i] <= times[i + 1]))
            throw std::invalid_argument("entropy_timeseries: times must be sorted");
    std::vector<EntropyRow> rows(times.size());
    parallel_for(times.size(), [&](std::size_t i) {
        const auto st = evolve(c0, table, times[i]);
        const auto grid = to_fock_grid(st, table);
        const auto field = entropies(reduce(grid, Subsystem::Field));
        const auto atom = entropies(reduce(grid, Subsystem::Atom));
        rows[i] = {times[i], field.svne, field.sle, atom.svne, atom.sle};
    });
    return rows;
}

} // namespace revival
