#include "qasep/asep.hpp"

#include <cmath>

#include "qasep/functionals.hpp"

namespace qasep {

namespace {

void validate_rates(const AsepParams& p) {
    if (p.alpha <= 0 || p.beta <= 0) throw ParameterError("alpha and beta must be positive");
    if (p.gamma < 0 || p.delta < 0) throw ParameterError("gamma and delta must be nonnegative");
    if (p.q < 0 || p.q >= 1) throw ParameterError("q must satisfy 0 <= q < 1");
}

void finish(AsepParams& p, int n_cap) {
    validate_rates(p);
    p.ctx = make_theta_ctx(p.q);
    p.singular_index = detect_singular(p.alpha, p.beta, p.gamma, p.delta, p.q, n_cap);
    if (!p.singular_index) {
        int m = 0;
        Rat gd = p.gamma * p.delta;
        Rat ab = p.alpha * p.beta;
        while (ab <= gd) {
            gd *= p.q;
            ++m;
        }
        p.reversal_index = m;
    }
}

} // namespace

std::optional<int> detect_singular(const Rat& alpha, const Rat& beta, const Rat& gamma,
                                   const Rat& delta, const Rat& q, int n_cap) {
    if (n_cap < 0) throw ParameterError("n_cap must be >= 0");
    Rat ab = alpha * beta;
    Rat gd = gamma * delta;
    if (gd == 0) return std::nullopt;
    for (int n = 0; n <= n_cap; ++n) {
        if (gd == ab) return n;
        if (gd < ab) return std::nullopt; // q^n gamma delta is strictly decreasing
        gd *= q;
    }
    return std::nullopt;
}

AsepParams from_awparams(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& q,
                         int n_cap) {
    if (a <= 0 || c <= 0) throw ParameterError("AW parameters a, c must be positive");
    if (b <= -1 || b > 0 || d <= -1 || d > 0)
        throw ParameterError("AW parameters b, d must lie in (-1, 0]");
    if (q < 0 || q >= 1) throw ParameterError("q must satisfy 0 <= q < 1");
    Rat one_mq = Rat(1) - q;
    Rat cd_den = (Rat(1) + c) * (Rat(1) + d);
    Rat ab_den = (Rat(1) + a) * (Rat(1) + b);
    if (cd_den == 0 || ab_den == 0) throw ParameterError("degenerate AW quadruple");
    AsepParams p;
    p.alpha = one_mq / cd_den;
    p.gamma = -one_mq * c * d / cd_den;
    p.beta = one_mq / ab_den;
    p.delta = -one_mq * a * b / ab_den;
    p.q = q;
    p.aw = AwQuad{a, b, c, d};
    finish(p, n_cap);
    return p;
}

AsepParams from_rates(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& delta,
                      const Rat& q, int n_cap) {
    AsepParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = gamma;
    p.delta = delta;
    p.q = q;
    finish(p, n_cap);
    return p;
}

std::array<double, 4> to_awparams(const AsepParams& params) {
    double q = rat_to_double(params.q);
    auto kappa = [q](double u, double v, int sign) {
        if (v == 0.0) {
            // kappa-(u,0) = 0 and kappa+(u,0) = (1-q-u + |1-q-u|)/(2u), exact.
            double w = 1.0 - q - u;
            if (sign < 0) return std::min(w, 0.0) / u;
            return std::max(w, 0.0) / u;
        }
        double w = 1.0 - q - u + v;
        double root = std::sqrt(w * w + 4.0 * u * v);
        return (w + sign * root) / (2.0 * u);
    };
    double alpha = rat_to_double(params.alpha);
    double beta = rat_to_double(params.beta);
    double gamma = rat_to_double(params.gamma);
    double delta = rat_to_double(params.delta);
    return {kappa(beta, delta, +1), kappa(beta, delta, -1), kappa(alpha, gamma, +1),
            kappa(alpha, gamma, -1)};
}

std::string config_string(int L, unsigned state) {
    std::string s(static_cast<std::size_t>(L), '0');
    for (int j = 0; j < L; ++j)
        if ((state >> (L - 1 - j)) & 1u) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

std::vector<int> config_bits(int L, unsigned state) {
    std::vector<int> bits(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j) bits[static_cast<std::size_t>(j)] = (state >> (L - 1 - j)) & 1u;
    return bits;
}

namespace {

PhiTable table_for_length(const AsepParams& params, int L) {
    if (params.singular() && L >= *params.singular_index + 1) return build_phi1(params, L);
    return build_phi0(params, L);
}

Rat rational_part(const QExt& x, const char* what) {
    if (!x.is_rational()) throw ModelError(std::string(what) + " has a nonzero theta component");
    return x.r();
}

} // namespace

Dist stationary(const AsepParams& params, int L) {
    if (L < 1) throw ParameterError("L must be >= 1");
    PhiTable table = table_for_length(params, L);
    unsigned n = 1u << L;
    std::vector<QExt> weights;
    weights.reserve(n);
    QExt total = qx_zero(params.ctx);
    for (unsigned s = 0; s < n; ++s) {
        NPoly x = de_substitute(config_word(config_bits(L, s)), params.ctx);
        QExt w = phi_eval(table, x);
        total += w;
        weights.push_back(std::move(w));
    }
    if (total.is_zero()) throw ModelError("vanishing normalization phi[(D+E)^L]");
    Dist dist;
    dist.L = L;
    dist.p.reserve(n);
    for (unsigned s = 0; s < n; ++s) {
        Rat p = rational_part(weights[s] / total, "stationary probability");
        if (p <= 0) throw ModelError("nonpositive stationary probability");
        dist.p.push_back(std::move(p));
    }
    return dist;
}

Dist bernoulli_product(const AsepParams& params) {
    if (!params.singular()) throw RegimeError("Bernoulli product requires the singular regime");
    int L = *params.singular_index + 1;
    std::vector<Rat> site(static_cast<std::size_t>(L));
    for (int j = 1; j <= L; ++j)
        site[static_cast<std::size_t>(j - 1)] =
            params.alpha / (params.alpha + params.gamma * qpow(params.q, j - 1));
    Dist dist;
    dist.L = L;
    unsigned n = 1u << L;
    dist.p.reserve(n);
    for (unsigned s = 0; s < n; ++s) {
        Rat p(1);
        auto bits = config_bits(L, s);
        for (int j = 0; j < L; ++j) {
            const Rat& pj = site[static_cast<std::size_t>(j)];
            p *= bits[static_cast<std::size_t>(j)] ? pj : Rat(1) - pj;
        }
        dist.p.push_back(std::move(p));
    }
    return dist;
}

Rat current(const AsepParams& params, int L) {
    if (L < 2) throw ParameterError("current needs L >= 2");
    PhiTable table = table_for_length(params, L);
    NPoly s = de_substitute({Gen::D}, params.ctx) + de_substitute({Gen::E}, params.ctx);
    NPoly low = poly_pow(s, L - 1);
    NPoly high = poly_mul(low, s);
    QExt denom = phi_eval(table, high);
    if (denom.is_zero()) throw ModelError("vanishing phi[(D+E)^L]");
    return rational_part(phi_eval(table, low) / denom, "current");
}

} // namespace qasep
