#include "revival/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "revival/parallel.hpp"

namespace revival {

namespace {

constexpr double kImagTol = 1e-10;

FockGridAmplitudes zero_grid(std::size_t fdim, std::size_t adim) {
    FockGridAmplitudes g;
    g.a = Matrix<cplx>(fdim, adim);
    return g;
}

void accumulate(FockGridAmplitudes& acc, const FockGridAmplitudes& term, cplx coeff) {
    for (std::size_t f = 0; f < term.a.rows(); ++f)
        for (std::size_t n = 0; n < term.a.cols(); ++n) acc.a(f, n) += coeff * term.a(f, n);
}

FockGridAmplitudes apply_power(Mode mode, bool creation, int q, FockGridAmplitudes g) {
    for (int i = 0; i < q; ++i) g = creation ? apply_creation(mode, g) : apply_annihilation(mode, g);
    return g;
}

} // namespace

FockGridAmplitudes apply_annihilation(Mode mode, const FockGridAmplitudes& grid) {
    FockGridAmplitudes out = zero_grid(grid.a.rows(), grid.a.cols());
    if (mode == Mode::Field) {
        for (std::size_t f = 0; f + 1 < grid.a.rows(); ++f)
            for (std::size_t n = 0; n < grid.a.cols(); ++n)
                out.a(f, n) = std::sqrt(static_cast<double>(f + 1)) * grid.a(f + 1, n);
    } else {
        for (std::size_t f = 0; f < grid.a.rows(); ++f)
            for (std::size_t n = 0; n + 1 < grid.a.cols(); ++n)
                out.a(f, n) = std::sqrt(static_cast<double>(n + 1)) * grid.a(f, n + 1);
    }
    return out;
}

FockGridAmplitudes apply_creation(Mode mode, const FockGridAmplitudes& grid) {
    const std::size_t fgrow = mode == Mode::Field ? 1 : 0;
    const std::size_t agrow = mode == Mode::Atom ? 1 : 0;
    FockGridAmplitudes out = zero_grid(grid.a.rows() + fgrow, grid.a.cols() + agrow);
    if (mode == Mode::Field) {
        for (std::size_t f = 0; f < grid.a.rows(); ++f)
            for (std::size_t n = 0; n < grid.a.cols(); ++n)
                out.a(f + 1, n) = std::sqrt(static_cast<double>(f + 1)) * grid.a(f, n);
    } else {
        for (std::size_t f = 0; f < grid.a.rows(); ++f)
            for (std::size_t n = 0; n < grid.a.cols(); ++n)
                out.a(f, n + 1) = std::sqrt(static_cast<double>(n + 1)) * grid.a(f, n);
    }
    return out;
}

FockGridAmplitudes apply_quadrature(QuadratureKind kind, const FockGridAmplitudes& grid) {
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    const cplx i_unit{0.0, 1.0};
    // coefficients of (a, a^dag, b, b^dag)
    cplx ca = 0, cad = 0, cb = 0, cbd = 0;
    switch (kind) {
    case QuadratureKind::Xi:
        ca = cad = cb = cbd = 0.5 * inv_rt2;
        break;
    case QuadratureKind::Eta:
        ca = cb = -0.5 * inv_rt2 * i_unit;
        cad = cbd = 0.5 * inv_rt2 * i_unit;
        break;
    case QuadratureKind::Xa:
        ca = cad = inv_rt2;
        break;
    case QuadratureKind::Pa:
        ca = -inv_rt2 * i_unit;
        cad = inv_rt2 * i_unit;
        break;
    case QuadratureKind::Xb:
        cb = cbd = inv_rt2;
        break;
    case QuadratureKind::Pb:
        cb = -inv_rt2 * i_unit;
        cbd = inv_rt2 * i_unit;
        break;
    }
    const bool field = ca != cplx{} || cad != cplx{};
    const bool atom = cb != cplx{} || cbd != cplx{};
    FockGridAmplitudes out =
        zero_grid(grid.a.rows() + (field ? 1 : 0), grid.a.cols() + (atom ? 1 : 0));
    if (ca != cplx{}) accumulate(out, apply_annihilation(Mode::Field, grid), ca);
    if (cad != cplx{}) accumulate(out, apply_creation(Mode::Field, grid), cad);
    if (cb != cplx{}) accumulate(out, apply_annihilation(Mode::Atom, grid), cb);
    if (cbd != cplx{}) accumulate(out, apply_creation(Mode::Atom, grid), cbd);
    return out;
}

cplx grid_inner(const FockGridAmplitudes& u, const FockGridAmplitudes& v) {
    const std::size_t fdim = std::min(u.a.rows(), v.a.rows());
    const std::size_t adim = std::min(u.a.cols(), v.a.cols());
    cplx acc = 0;
    for (std::size_t f = 0; f < fdim; ++f)
        for (std::size_t n = 0; n < adim; ++n) acc += std::conj(u.a(f, n)) * v.a(f, n);
    return acc;
}

double moment_on_grid(const FockGridAmplitudes& grid, QuadratureKind kind, int order) {
    if (order < 1 || order > 4) throw std::invalid_argument("moment: order must be in 1..4");
    FockGridAmplitudes half = grid;
    for (int i = 0; i < order / 2; ++i) half = apply_quadrature(kind, half);
    cplx value;
    if (order % 2 == 0) {
        value = grid_inner(half, half);
    } else {
        value = grid_inner(half, apply_quadrature(kind, half));
    }
    if (std::abs(value.imag()) > kImagTol)
        throw std::runtime_error("moment: imaginary residue above 1e-10 for Hermitian observable");
    return value.real();
}

double moment(const EvolvedState& st, const BlockTable& table, const QuadratureSpec& spec) {
    return moment_on_grid(to_fock_grid(st, table), spec.kind, spec.order);
}

double std_dev_xi(const EvolvedState& st, const BlockTable& table) {
    const double m1 = moment(st, table, {QuadratureKind::Xi, 1});
    const double m2 = moment(st, table, {QuadratureKind::Xi, 2});
    return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

double mean_photon(const EvolvedState& st, const BlockTable& table, Mode mode) {
    const auto grid = to_fock_grid(st, table);
    double acc = 0;
    for (std::size_t f = 0; f < grid.a.rows(); ++f)
        for (std::size_t n = 0; n < grid.a.cols(); ++n)
            acc += static_cast<double>(mode == Mode::Field ? f : n) * std::norm(grid.a(f, n));
    return acc;
}

SqueezeCheck higher_quadrature_variance(const EvolvedState& st, const BlockTable& table,
                                        const HigherQuadratureSpec& spec) {
    if (spec.q < 1 || spec.q > 3) throw std::invalid_argument("higher quadrature: q must be in 1..3");
    const FockGridAmplitudes psi = to_fock_grid(st, table);
    const auto aq = apply_power(Mode::Field, false, spec.q, psi);
    const auto adq = apply_power(Mode::Field, true, spec.q, psi);
    const auto bq = apply_power(Mode::Atom, false, spec.q, psi);
    const auto bdq = apply_power(Mode::Atom, true, spec.q, psi);

    const double inv = 1.0 / (2.0 * std::sqrt(2.0));
    FockGridAmplitudes z = zero_grid(psi.a.rows() + spec.q, psi.a.cols() + spec.q);
    if (spec.which == HigherQuadrature::Z1) {
        accumulate(z, aq, inv);
        accumulate(z, adq, inv);
        accumulate(z, bq, inv);
        accumulate(z, bdq, inv);
    } else {
        const cplx c{0.0, -inv}; // 1/(2 i sqrt(2))
        accumulate(z, aq, c);
        accumulate(z, adq, -c);
        accumulate(z, bq, c);
        accumulate(z, bdq, -c);
    }

    const cplx mean = grid_inner(psi, z);
    if (std::abs(mean.imag()) > kImagTol)
        throw std::runtime_error("higher quadrature: imaginary residue above 1e-10");
    SqueezeCheck out;
    out.variance = grid_inner(z, z).real() - mean.real() * mean.real();
    double qfact = 1.0;
    for (int i = 2; i <= spec.q; ++i) qfact *= i;
    out.threshold = 0.25 * qfact; // two-mode vacuum variance of Z1 (or Z2)
    // <[Z1, Z2]> = (i/4)(<[a^q, a^dag^q]> + <[b^q, b^dag^q]>)
    const double comm = adq.norm2() - aq.norm2() + bdq.norm2() - bq.norm2();
    out.commutator_bound = 0.125 * std::abs(comm);
    return out;
}

MomentSeries moment_timeseries(const EigenbasisCoefficients& c0, const BlockTable& table,
                               std::span<const double> times, const QuadratureSpec& spec,
                               bool central) {
    if (spec.order < 1 || spec.order > 4)
        throw std::invalid_argument("moment_timeseries: order must be in 1..4");
    MomentSeries out;
    out.times.assign(times.begin(), times.end());
    out.values.resize(times.size());
    out.spec = spec;
    out.central = central;
    parallel_for(times.size(), [&](std::size_t i) {
        const auto grid = to_fock_grid(evolve(c0, table, times[i]), table);
        if (!central) {
            out.values[i] = moment_on_grid(grid, spec.kind, spec.order);
            return;
        }
        double m[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
        for (int k = 1; k <= spec.order; ++k) m[k] = moment_on_grid(grid, spec.kind, k);
        switch (spec.order) {
        case 1: out.values[i] = 0.0; break;
        case 2: out.values[i] = m[2] - m[1] * m[1]; break;
        case 3: out.values[i] = m[3] - 3.0 * m[1] * m[2] + 2.0 * m[1] * m[1] * m[1]; break;
        case 4:
            out.values[i] = m[4] - 4.0 * m[1] * m[3] + 6.0 * m[1] * m[1] * m[2] -
                            3.0 * m[1] * m[1] * m[1] * m[1];
            break;
        }
    });
    return out;
}

MomentSeries higher_variance_timeseries(const EigenbasisCoefficients& c0, const BlockTable& table,
                                        std::span<const double> times,
                                        const HigherQuadratureSpec& spec) {
    if (spec.q < 1 || spec.q > 3)
        throw std::invalid_argument("higher_variance_timeseries: q must be in 1..3");
    MomentSeries out;
    out.times.assign(times.begin(), times.end());
    out.values.resize(times.size());
    out.spec = spec;
    out.central = true;
    parallel_for(times.size(), [&](std::size_t i) {
        out.values[i] = higher_quadrature_variance(evolve(c0, table, times[i]), table, spec).variance;
    });
    return out;
}

double ladder_matrix_element(Mode mode, const BlockTable& table, int N, int s, int Np, int sp) {
    if (N < 0 || Np < 0 || N > table.n_max() || Np > table.n_max())
        throw std::invalid_argument("ladder_matrix_element: block out of range");
    if (s < 0 || s > N || sp < 0 || sp > Np)
        throw std::invalid_argument("ladder_matrix_element: eigenstate index out of range");
    if (N != Np - 1) return 0.0; // selection rule
    const auto& dl = table.block(N).d;
    const auto& dr = table.block(Np).d;
    double acc = 0;
    if (mode == Mode::Field) {
        for (int n = 0; n <= N; ++n)
            acc += std::sqrt(static_cast<double>(Np - n)) *
                   dl(static_cast<std::size_t>(n), static_cast<std::size_t>(s)) *
                   dr(static_cast<std::size_t>(n), static_cast<std::size_t>(sp));
    } else {
        for (int n = 1; n <= Np; ++n)
            acc += std::sqrt(static_cast<double>(n)) *
                   dl(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(s)) *
                   dr(static_cast<std::size_t>(n), static_cast<std::size_t>(sp));
    }
    return acc;
}

} // namespace revival
