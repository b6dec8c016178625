#include "revival/states.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace revival {

namespace {

constexpr int kCutoffCap = 4096;

void check_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1e-6))
        throw std::invalid_argument("truncation eps must lie in (0, 1e-6]");
}

void check_alpha(cplx alpha) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("InitialState: alpha must be finite");
}

// ln of the Fock-level probability |f_l|^2 of the field mode, and the level
// range; shared by the cutoff search and the amplitude fill.
struct LevelLaw {
    int first_level = 0;
    double log_norm = 0.0; // subtracted constant: ln(m! L_m(-nu)) for PACS

    double log_prob(const InitialState& s, int l) const {
        const double nu = s.nu();
        switch (s.kind()) {
        case InitialState::Kind::Fock:
            return l == s.fock_level() ? 0.0 : -std::numeric_limits<double>::infinity();
        case InitialState::Kind::Coherent:
            if (nu == 0.0) // vacuum
                return l == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
            return -nu + l * std::log(nu) - std::lgamma(l + 1.0);
        case InitialState::Kind::PhotonAdded: {
            const int m = s.added_photons();
            if (l < m) return -std::numeric_limits<double>::infinity();
            return -nu + (l - m) * std::log(nu) + std::lgamma(l + 1.0) -
                   2.0 * std::lgamma(l - m + 1.0) - log_norm;
        }
        }
        return -std::numeric_limits<double>::infinity();
    }
};

LevelLaw make_level_law(const InitialState& s) {
    LevelLaw law;
    switch (s.kind()) {
    case InitialState::Kind::Fock:
        law.first_level = s.fock_level();
        break;
    case InitialState::Kind::Coherent:
        law.first_level = 0;
        break;
    case InitialState::Kind::PhotonAdded:
        law.first_level = s.added_photons();
        law.log_norm = std::lgamma(s.added_photons() + 1.0) +
                       log_laguerre_neg(s.added_photons(), s.nu());
        break;
    }
    return law;
}

} // namespace

InitialState InitialState::fock(int nprime) {
    if (nprime < 0) throw std::invalid_argument("Fock level must be nonnegative");
    return InitialState(Kind::Fock, nprime, 0.0, 0);
}

InitialState InitialState::coherent(cplx alpha) {
    check_alpha(alpha);
    return InitialState(Kind::Coherent, 0, alpha, 0);
}

InitialState InitialState::photon_added(cplx alpha, int m) {
    check_alpha(alpha);
    if (m < 0) throw std::invalid_argument("photon_added: m must be nonnegative");
    if (m == 0) return coherent(alpha);
    if (std::norm(alpha) == 0.0) return fock(m); // (a^dag)^m |0> is the Fock state |m>
    return InitialState(Kind::PhotonAdded, 0, alpha, m);
}

double EigenbasisCoefficients::norm2() const {
    double s = 0;
    for (const auto& block : c)
        for (const cplx& v : block) s += std::norm(v);
    return s;
}

double log_laguerre_neg(int m, double nu) {
    if (m < 0) throw std::invalid_argument("log_laguerre_neg: m must be nonnegative");
    if (nu < 0) throw std::invalid_argument("log_laguerre_neg: nu must be nonnegative");
    if (m == 0) return 0.0;
    double prev = 1.0;      // L_0(-nu)
    double cur = 1.0 + nu;  // L_1(-nu)
    double log_scale = 0.0;
    for (int k = 1; k < m; ++k) {
        double next = ((2.0 * k + 1.0 + nu) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (cur > 1e280) {
            prev /= 1e280;
            cur /= 1e280;
            log_scale += std::log(1e280);
        }
    }
    return std::log(cur) + log_scale;
}

int required_cutoff(const InitialState& s, double eps) {
    check_eps(eps);
    if (s.kind() == InitialState::Kind::Fock) return s.fock_level();
    const LevelLaw law = make_level_law(s);
    double acc = 0.0;
    for (int l = law.first_level; l <= kCutoffCap; ++l) {
        acc += std::exp(law.log_prob(s, l));
        if (1.0 - acc <= eps) return l;
    }
    throw std::runtime_error("required_cutoff: tail weight did not reach eps below level cap");
}

FieldAmplitudes field_amplitudes(const InitialState& s, double eps) {
    check_eps(eps);
    FieldAmplitudes out;
    if (s.kind() == InitialState::Kind::Fock) {
        out.n_max = s.fock_level();
        out.f.assign(static_cast<std::size_t>(out.n_max) + 1, cplx{0.0, 0.0});
        out.f.back() = 1.0;
        out.tail_weight = 0.0;
        return out;
    }

    const LevelLaw law = make_level_law(s);
    out.n_max = required_cutoff(s, eps);
    out.f.assign(static_cast<std::size_t>(out.n_max) + 1, cplx{0.0, 0.0});
    const double arg = std::arg(s.alpha());
    const int m = s.kind() == InitialState::Kind::PhotonAdded ? s.added_photons() : 0;
    double acc = 0.0;
    for (int l = law.first_level; l <= out.n_max; ++l) {
        const double lp = law.log_prob(s, l);
        const double p = std::exp(lp);
        acc += p;
        const double phase = arg * (l - m); // alpha^(l-m) carries the only phase
        out.f[static_cast<std::size_t>(l)] =
            std::exp(0.5 * lp) * cplx{std::cos(phase), std::sin(phase)};
    }
    out.tail_weight = std::max(0.0, 1.0 - acc);
    return out;
}

EigenbasisCoefficients project(const FieldAmplitudes& s, const BlockTable& table) {
    if (table.n_max() < s.n_max)
        throw std::invalid_argument("project: block table truncates the state (n_max too small)");
    EigenbasisCoefficients out;
    out.c.resize(static_cast<std::size_t>(s.n_max) + 1);
    for (int N = 0; N <= s.n_max; ++N) {
        const auto& blk = table.block(N);
        auto& row = out.c[static_cast<std::size_t>(N)];
        row.resize(static_cast<std::size_t>(N) + 1);
        const cplx fN = s.f[static_cast<std::size_t>(N)];
        for (int sIdx = 0; sIdx <= N; ++sIdx)
            row[static_cast<std::size_t>(sIdx)] = fN * blk.d(0, static_cast<std::size_t>(sIdx));
    }
    return out;
}

} // namespace revival
