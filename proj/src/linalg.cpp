#include "revival/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace revival::linalg {

namespace {

constexpr int kMaxSweeps = 50; // per eigenvalue

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

// Ascending sort of (values, columns of z) pairs.
void sort_ascending(std::vector<double>& d, Matrix<double>& z) {
    const std::size_t n = d.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    Matrix<double> zs(z.rows(), n);
    for (std::size_t k = 0; k < n; ++k) {
        ds[k] = d[order[k]];
        for (std::size_t i = 0; i < z.rows(); ++i) zs(i, k) = z(i, order[k]);
    }
    d = std::move(ds);
    z = std::move(zs);
}

void fix_column_signs(Matrix<double>& z) {
    for (std::size_t k = 0; k < z.cols(); ++k) {
        double lead = 0;
        for (std::size_t i = 0; i < z.rows(); ++i) {
            if (std::abs(z(i, k)) > 1e-12) {
                lead = z(i, k);
                break;
            }
        }
        if (lead < 0)
            for (std::size_t i = 0; i < z.rows(); ++i) z(i, k) = -z(i, k);
    }
}

// Rotate each column so its leading significant component is real positive.
void fix_column_phases(Matrix<cplx>& z) {
    for (std::size_t k = 0; k < z.cols(); ++k) {
        cplx lead = 0;
        for (std::size_t i = 0; i < z.rows(); ++i) {
            if (std::abs(z(i, k)) > 1e-12) {
                lead = z(i, k);
                break;
            }
        }
        const double mag = std::abs(lead);
        if (mag == 0.0) continue;
        const cplx phase = std::conj(lead) / mag;
        for (std::size_t i = 0; i < z.rows(); ++i) z(i, k) *= phase;
    }
}

} // namespace

EigenDecompositionReal eig_sym_tridiag(const SymTridiag& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("eig_sym_tridiag: empty matrix");
    if (m.offdiag.size() + 1 != n)
        throw std::invalid_argument("eig_sym_tridiag: offdiag length must be diag length - 1");
    check_finite(m.diag, "eig_sym_tridiag");
    check_finite(m.offdiag, "eig_sym_tridiag");

    std::vector<double> d = m.diag;
    std::vector<double> e(n, 0.0); // e[i] couples rows i and i+1, e[n-1] unused
    std::copy(m.offdiag.begin(), m.offdiag.end(), e.begin());
    Matrix<double> z = Matrix<double>::identity(n);

    const double eps = std::numeric_limits<double>::epsilon();

    // Implicit-shift QL, EISPACK tql2 lineage.
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t mm;
        do {
            for (mm = l; mm + 1 < n; ++mm) {
                const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
                if (std::abs(e[mm]) <= eps * dd) break;
            }
            if (mm != l) {
                if (++iter > kMaxSweeps)
                    throw std::runtime_error("eig_sym_tridiag: QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool restart = false;
                for (std::size_t i = mm; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) { // recoverable underflow: deflate and restart
                        d[i + 1] -= p;
                        e[mm] = 0.0;
                        restart = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (std::size_t k = 0; k < n; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (restart) continue;
                d[l] -= p;
                e[l] = g;
                e[mm] = 0.0;
            }
        } while (mm != l);
    }

    sort_ascending(d, z);
    fix_column_signs(z);
    return {std::move(d), std::move(z)};
}

bool is_hermitian(const Matrix<cplx>& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

EigenDecompositionComplex eig_hermitian(const HermitianMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("eig_hermitian: empty matrix");
    if (m.entries.cols() != n) throw std::invalid_argument("eig_hermitian: matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!std::isfinite(m.entries(i, j).real()) || !std::isfinite(m.entries(i, j).imag()))
                throw std::invalid_argument("eig_hermitian: non-finite entry");
    if (!is_hermitian(m.entries, 1e-12))
        throw std::invalid_argument("eig_hermitian: input not Hermitian within 1e-12");

    // Exact symmetrization kills the sub-tolerance asymmetry.
    Matrix<cplx> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m.entries(i, j) + std::conj(m.entries(j, i)));

    Matrix<cplx> q = Matrix<cplx>::identity(n);

    // Householder reduction to Hermitian tridiagonal form, reflectors
    // accumulated into q (a = q T q^dagger afterwards).
    std::vector<cplx> v(n), p(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t lo = k + 1;
        double xnorm2 = 0;
        for (std::size_t i = lo; i < n; ++i) xnorm2 += std::norm(a(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;

        const cplx alpha = a(lo, k);
        const double amag = std::abs(alpha);
        const cplx phase = (amag > 0.0) ? alpha / amag : cplx{1.0, 0.0};
        const cplx sigma = phase * xnorm;

        double vnorm2 = 0;
        for (std::size_t i = lo; i < n; ++i) v[i] = a(i, k);
        v[lo] += sigma;
        for (std::size_t i = lo; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;
        const double tau = 2.0 / vnorm2;

        // Hermitian rank-2 update of the trailing submatrix:
        // p = tau A v, w = p - (tau/2)(v^H p) v, A -= v w^H + w v^H.
        cplx vhp = 0;
        for (std::size_t i = lo; i < n; ++i) {
            cplx s = 0;
            for (std::size_t j = lo; j < n; ++j) s += a(i, j) * v[j];
            p[i] = tau * s;
        }
        for (std::size_t i = lo; i < n; ++i) vhp += std::conj(v[i]) * p[i];
        const cplx kk = 0.5 * tau * vhp;
        for (std::size_t i = lo; i < n; ++i) p[i] -= kk * v[i];
        for (std::size_t i = lo; i < n; ++i)
            for (std::size_t j = lo; j < n; ++j)
                a(i, j) -= v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]);

        a(lo, k) = -sigma;
        a(k, lo) = -std::conj(sigma);
        for (std::size_t i = lo + 1; i < n; ++i) {
            a(i, k) = 0;
            a(k, i) = 0;
        }

        // q <- q (I - tau v v^H)
        for (std::size_t i = 0; i < n; ++i) {
            cplx s = 0;
            for (std::size_t j = lo; j < n; ++j) s += q(i, j) * v[j];
            s *= tau;
            for (std::size_t j = lo; j < n; ++j) q(i, j) -= s * std::conj(v[j]);
        }
    }

    // Phase-scale the basis so the subdiagonal becomes real nonnegative:
    // with s_{k+1} = s_k beta_k / |beta_k|, S^H T S has subdiagonal |beta_k|
    // and A = (Q S) T_real (Q S)^H.
    SymTridiag t;
    t.diag.resize(n);
    t.offdiag.resize(n - 1);
    std::vector<cplx> scale(n, cplx{1.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) t.diag[i] = a(i, i).real();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const cplx beta = a(i + 1, i);
        const double bmag = std::abs(beta);
        t.offdiag[i] = bmag;
        scale[i + 1] = (bmag > 0.0) ? scale[i] * (beta / bmag) : scale[i];
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) q(i, j) *= scale[j];

    EigenDecompositionReal tri = eig_sym_tridiag(t);

    Matrix<cplx> vectors(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            cplx s = 0;
            for (std::size_t j = 0; j < n; ++j) s += q(i, j) * tri.vectors(j, k);
            vectors(i, k) = s;
        }
    fix_column_phases(vectors);
    return {std::move(tri.values), std::move(vectors)};
}

} // namespace revival::linalg
