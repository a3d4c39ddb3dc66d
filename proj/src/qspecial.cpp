#include "qasep/qspecial.hpp"

#include <algorithm>
#include <array>

namespace qasep {

QExt qpochhammer(const QExt& a, const Rat& q, int n) {
    if (n < 0) throw ParameterError("q-Pochhammer needs n >= 0");
    QExt acc = qx_one(a.ctx());
    QExt aq = a;
    for (int j = 0; j < n; ++j) {
        acc *= qx_one(a.ctx()) - aq;
        aq *= q;
    }
    return acc;
}

Rat qpochhammer(const Rat& a, const Rat& q, int n) {
    if (n < 0) throw ParameterError("q-Pochhammer needs n >= 0");
    Rat acc(1), aq = a;
    for (int j = 0; j < n; ++j) {
        acc *= Rat(1) - aq;
        aq *= q;
    }
    return acc;
}

Rat qbinomial(int n, int k, const Rat& q) {
    if (k < 0 || k > n) return Rat(0);
    // Pascal: [r+1 j]_q = q^j [r j]_q + [r j-1]_q.
    std::vector<Rat> row{Rat(1)};
    for (int r = 0; r < n; ++r) {
        std::vector<Rat> next(row.size() + 1, Rat(0));
        Rat qj(1);
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (j < row.size()) next[j] += qj * row[j];
            if (j >= 1) next[j] += row[j - 1];
            qj *= q;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

UniPoly chebyshev_u(int n, const ThetaCtxPtr& ctx) {
    if (n < 0) return UniPoly::zero(ctx);
    UniPoly prev = UniPoly::zero(ctx);
    UniPoly cur = UniPoly::constant(qx_one(ctx));
    UniPoly two_x = UniPoly::x(ctx) * qx(Rat(2), ctx);
    for (int i = 0; i < n; ++i) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly qhermite(int n, const QExt& t, const Rat& q) {
    const ThetaCtxPtr& ctx = t.ctx();
    if (n < -1) throw ParameterError("q-Hermite index must be >= -1");
    if (n == -1) return UniPoly::zero(ctx);
    UniPoly prev = UniPoly::zero(ctx);
    UniPoly cur = UniPoly::constant(qx_one(ctx));
    UniPoly x = UniPoly::x(ctx);
    for (int i = 0; i < n; ++i) {
        UniPoly next = x * cur - prev * (t * qint(i, q));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

NPoly qhermite_operator(int n, const QExt& t, const ThetaCtxPtr& ctx) {
    if (n < 0) throw ParameterError("operator q-Hermite index must be >= 0");
    const Rat& q = ctx->q;
    NPoly out(ctx);
    for (int k = 0; k <= n; ++k)
        out.add_term({k, n - k}, qx(qbinomial(n, k, q), ctx) * t.pow(k));
    return out;
}

namespace {

std::array<QExt, 4> sym_functions(const QExt& a, const QExt& b, const QExt& c, const QExt& d) {
    QExt s1 = a + b + c + d;
    QExt s2 = a * b + a * c + a * d + b * c + b * d + c * d;
    QExt s3 = a * b * c + a * b * d + a * c * d + b * c * d;
    QExt s4 = a * b * c * d;
    return {s1, s2, s3, s4};
}

UniPoly askey_wilson_q0(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d) {
    const ThetaCtxPtr& ctx = a.ctx();
    auto [s1, s2, s3, s4] = sym_functions(a, b, c, d);
    QExt one = qx_one(ctx);
    if (n == 0) return chebyshev_u(0, ctx);
    if (n == 1) return (one - s4) * chebyshev_u(1, ctx) + (s3 - s1) * chebyshev_u(0, ctx);
    if (n == 2)
        return chebyshev_u(2, ctx) - s1 * chebyshev_u(1, ctx) + (s2 - s4) * chebyshev_u(0, ctx);
    UniPoly out = chebyshev_u(n, ctx) - s1 * chebyshev_u(n - 1, ctx) + s2 * chebyshev_u(n - 2, ctx);
    out -= s3 * chebyshev_u(n - 3, ctx);
    if (n >= 4) out += s4 * chebyshev_u(n - 4, ctx);
    return out;
}

UniPoly qhermite_limit(int n, const ThetaCtxPtr& ctx, const Rat& q) {
    // p_n(x; 0,0,0,0 | q) = theta^{-n} H_n(2 theta x).
    UniPoly h = qhermite(n, qx_one(ctx), q);
    std::vector<QExt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(h.degree() + 1));
    QExt two_theta = qx(Rat(2), ctx) * qx_theta(ctx);
    QExt scale = qx_theta_pow(-n, ctx);
    for (int i = 0; i <= h.degree(); ++i) coeffs.push_back(h.coeff(i) * two_theta.pow(i) * scale);
    return UniPoly(std::move(coeffs), ctx);
}

} // namespace

UniPoly askey_wilson(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                     const Rat& q) {
    if (n < 0) throw ParameterError("Askey-Wilson index must be >= 0");
    const ThetaCtxPtr& ctx = a.ctx();
    if (q == 0) return askey_wilson_q0(n, a, b, c, d);
    // The working normalization needs a nonzero front parameter; the
    // polynomial is symmetric in (a, b, c, d).
    std::array<QExt, 4> par{a, b, c, d};
    auto it = std::find_if(par.begin(), par.end(), [](const QExt& x) { return !x.is_zero(); });
    if (it == par.end()) return qhermite_limit(n, ctx, q);
    std::swap(par[0], *it);
    const QExt& pa = par[0];

    QExt abcd = par[0] * par[1] * par[2] * par[3];
    QExt one = qx_one(ctx);
    UniPoly sum = UniPoly::zero(ctx);
    // Running product over j = 0 .. k-1 of (1 + a^2 q^{2j} - 2 a q^j x).
    UniPoly xfactors = UniPoly::constant(one);
    // (abcd q^{n-1}; q)_k, incrementally.
    QExt num_poch = one;
    QExt num_arg = abcd * qpow(q, n - 1);
    for (int k = 0; k <= n; ++k) {
        // tail products prod_{j=k}^{n-1} (1 - pq^j) for p in {ab, ac, ad}; the
        // prefactor (..;q)_n over the denominator (..;q)_k collapses to these,
        // so no q-Pochhammer division is ever needed.
        QExt tail = one;
        for (std::size_t i = 1; i <= 3; ++i) {
            QExt p = pa * par[i];
            for (int j = k; j <= n - 1; ++j) tail *= one - p * qpow(q, j);
        }
        Rat sign_pow = qbinomial(n, k, q) * rat_pow(q, static_cast<long long>(k) * (k + 1) / 2 -
                                                           static_cast<long long>(n) * k);
        QExt coeff = qx((k % 2 == 0) ? sign_pow : -sign_pow, ctx) * num_poch * tail;
        sum += xfactors * coeff;
        if (k < n) {
            num_poch *= one - num_arg * qpow(q, k);
            QExt cst = one + pa * pa * qpow(q, 2 * k);
            QExt lin = qx(Rat(-2), ctx) * pa * qpow(q, k);
            UniPoly factor(std::vector<QExt>{cst, lin}, ctx);
            xfactors = xfactors * factor;
        }
    }
    return sum * pa.inverse().pow(n);
}

QExt qhyper_terminating(int m, const std::vector<QExt>& nums, const std::vector<QExt>& dens,
                        const Rat& q, const ThetaCtxPtr& ctx) {
    if (m < 0) throw ParameterError("terminating series needs m >= 0");
    if (m >= 1 && q == 0) throw ParameterError("terminating q-hypergeometric sums need q > 0");
    QExt acc = qx_zero(ctx);
    QExt prod = qx_one(ctx);
    for (int j = 0; j <= m; ++j) {
        Rat w = qbinomial(m, j, q) *
                rat_pow(q, static_cast<long long>(j) * (j + 1) / 2 - static_cast<long long>(m) * j);
        acc += ((j % 2 == 0) ? prod : -prod) * w;
        if (j < m) {
            for (const QExt& u : nums) prod *= qx_one(ctx) - u * qpow(q, j);
            for (const QExt& v : dens) {
                QExt f = qx_one(ctx) - v * qpow(q, j);
                if (f.is_zero())
                    throw ParameterError("vanishing q-Pochhammer denominator in terminating sum");
                prod /= f;
            }
        }
    }
    return acc;
}

QExt hermite_connection(int n, int k, const QExt& a, const QExt& b, const Rat& q) {
    const ThetaCtxPtr& ctx = a.ctx();
    if (k < 0 || k > n) return qx_zero(ctx);
    QExt acc = qx_zero(ctx);
    for (int l = k; l <= n; ++l)
        acc += qx(qbinomial(n, l, q) * qbinomial(l, k, q), ctx) * a.pow(n - l) * b.pow(l - k);
    return acc;
}

QExt connection_phi32(int k, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                      const Rat& q) {
    if (a.is_zero()) throw ParameterError("connection factor needs a != 0");
    QExt val = qhyper_terminating(k, {a * d, a * c}, {a * b * c * d}, q, a.ctx());
    return val * a.inverse().pow(k);
}

QExt aw_connection(int n, int l, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                   const Rat& q) {
    if (a.is_zero()) throw ParameterError("AW connection needs a != 0");
    if (l < 0 || l > n) throw ParameterError("AW connection needs 0 <= l <= n");
    const ThetaCtxPtr& ctx = a.ctx();
    QExt one = qx_one(ctx);
    QExt abcd = a * b * c * d;
    // (abcd q^{l-1}; q)_l
    QExt den = one;
    for (int j = 0; j < l; ++j) den *= one - abcd * qpow(q, l - 1 + j);
    if (den.is_zero()) throw ParameterError("singular AW connection denominator");
    QExt acc = qx_zero(ctx);
    for (int k = l; k <= n; ++k) {
        QExt cnk = hermite_connection(n, k, a, b, q);
        QExt abql = one;
        for (int j = 0; j < k - l; ++j) abql *= one - a * b * qpow(q, l + j);
        QExt hyp = qhyper_terminating(k - l, {a * c * qpow(q, l), a * d * qpow(q, l)},
                                      {abcd * qpow(q, 2 * l)}, q, ctx);
        QExt term = cnk * qx(qbinomial(k, l, q), ctx) * abql * hyp;
        term *= qx(rat_pow(q, static_cast<long long>(l) * (l - k)), ctx);
        term *= a.inverse().pow(k - l);
        acc += term;
    }
    return acc / den;
}

QExt hermite_aw_coeff0(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                       const Rat& q) {
    if (a.is_zero()) throw ParameterError("coefficient formula needs a != 0");
    const ThetaCtxPtr& ctx = a.ctx();
    QExt acc = qx_zero(ctx);
    for (int k = 0; k <= n; ++k)
        acc += hermite_connection(n, k, a, b, q) * qpochhammer(a * b, q, k) *
               connection_phi32(k, a, b, c, d, q);
    return acc * qx_theta_pow(n, ctx);
}

QExt phi0_qhermite_moment(MomentMode mode, int n, const QExt& t, const PhiTable& phi0) {
    if (n < 0) throw ParameterError("moment index must be >= 0");
    const ThetaCtxPtr& ctx = phi0.ctx();
    if (phi0.regime() == Regime::Phi1) throw RegimeError("phi_0 moment of a phi_1 table");
    if (mode == MomentMode::Definition)
        return phi_eval(phi0, qhermite_operator(n, t, ctx));

    if (!phi0.aw()) throw ParameterError("recursion mode needs the table's AW quadruple");
    if (phi0.singular_index() && n > *phi0.singular_index())
        throw DomainError("phi_0 moment beyond the singular coverage");
    auto [a, b, c, d] = *phi0.aw();
    const Rat& q = phi0.q();
    QExt abcd = a * b * c * d;
    QExt theta = qx_theta(ctx), theta2 = qx_theta_pow(2, ctx), one = qx_one(ctx);
    // rows j-1 and j of the table moment_j(q^i t), i = 0 .. n-j.
    std::vector<QExt> orbit;
    for (int i = 0; i <= n; ++i) orbit.push_back(t * qpow(q, i));
    std::vector<QExt> prev(static_cast<std::size_t>(n) + 1, qx_zero(ctx)); // row -1
    std::vector<QExt> cur(static_cast<std::size_t>(n) + 1, qx_one(ctx));   // row 0
    for (int j = 0; j < n; ++j) {
        QExt lead = one - abcd * qpow(q, j);
        if (lead.is_zero()) throw DomainError("moment recursion hit 1 - abcd q^j = 0");
        Rat qj = qpow(q, j);
        std::vector<QExt> next(static_cast<std::size_t>(n) + 1, qx_zero(ctx));
        for (int i = 0; i + j + 1 <= n; ++i) {
            const QExt& ti = orbit[static_cast<std::size_t>(i)];
            QExt one_m_tcd = one - ti * c * d;
            QExt upper = (a + b) * one_m_tcd * cur[static_cast<std::size_t>(i + 1)] +
                         (c + d) * (ti - a * b * qj) * cur[static_cast<std::size_t>(i)];
            QExt lower = a * b * one_m_tcd * prev[static_cast<std::size_t>(i + 1)] +
                         ti * c * d * (ti - a * b * qj) * prev[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(i)] =
                (theta * upper - theta2 * qx(Rat(1) - qj, ctx) * lower) / lead;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur[0];
}

QExt phi1_qhermite_moment(MomentMode mode, int n, const QExt& t, const PhiTable& phi1) {
    if (n < 0) throw ParameterError("moment index must be >= 0");
    if (phi1.regime() != Regime::Phi1) throw RegimeError("phi_1 moment needs a phi_1 table");
    const ThetaCtxPtr& ctx = phi1.ctx();
    int N = *phi1.singular_index();
    if (mode == MomentMode::Definition)
        return phi_eval(phi1, qhermite_operator(n + N, t, ctx));

    if (!phi1.aw()) throw ParameterError("recursion mode needs the table's AW quadruple");
    auto [a, b, c, d] = *phi1.aw();
    const Rat& q = phi1.q();
    QExt theta = qx_theta(ctx), theta2 = qx_theta_pow(2, ctx), one = qx_one(ctx);
    if (n == 0) return qx_zero(ctx);
    QExt cd = c * d;
    QExt cd_poch = qpochhammer(cd, q, N + 1);
    if (cd_poch.is_zero()) throw ParameterError("(cd; q)_{N+1} vanishes");
    auto initial = [&](const QExt& arg) {
        return qpochhammer(arg * cd, q, N + 1) / (qx_theta_pow(N + 1, ctx) * cd_poch);
    };
    std::vector<QExt> orbit;
    for (int i = 0; i <= n; ++i) orbit.push_back(t * qpow(q, i));
    std::vector<QExt> prev(static_cast<std::size_t>(n) + 1, qx_zero(ctx)); // row 0
    std::vector<QExt> cur(static_cast<std::size_t>(n) + 1, qx_zero(ctx));  // row 1
    for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = initial(orbit[static_cast<std::size_t>(i)]);
    if (n == 1) return cur[0];
    for (int j = 1; j < n; ++j) {
        QExt lead = one - qx(qpow(q, j), ctx);
        Rat kappa = qpow(q, j + N);
        std::vector<QExt> next(static_cast<std::size_t>(n) + 1, qx_zero(ctx));
        for (int i = 0; i + j + 1 <= n; ++i) {
            const QExt& ti = orbit[static_cast<std::size_t>(i)];
            QExt one_m_tcd = one - ti * cd;
            QExt upper = (a + b) * one_m_tcd * cur[static_cast<std::size_t>(i + 1)] +
                         (c + d) * (ti - a * b * kappa) * cur[static_cast<std::size_t>(i)];
            QExt lower = a * b * one_m_tcd * prev[static_cast<std::size_t>(i + 1)] +
                         ti * cd * (ti - a * b * kappa) * prev[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(i)] =
                (theta * upper - theta2 * qx(Rat(1) - qpow(q, j + N), ctx) * lower) / lead;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur[0];
}

namespace {

QExt rescaled_moment_at(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                        const Rat& q, const QExt& t, const QExt& arg) {
    if (t.is_zero()) throw ParameterError("rescaled moment needs t != 0");
    const ThetaCtxPtr& ctx = a.ctx();
    QExt tinv = t.inverse();
    PhiTable table = build_phi0_aw(a * t, b * t, c * tinv, d * tinv, q, ctx, n);
    QExt moment = phi_eval(table, qhermite_operator(n, arg, ctx));
    QExt abcd = a * b * c * d;
    return qpochhammer(abcd, q, n) * moment * qx_theta_pow(-n, ctx) * tinv.pow(n);
}

} // namespace

QExt rescaled_moment(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                     const Rat& q, const QExt& t) {
    return rescaled_moment_at(n, a, b, c, d, q, t, t * t);
}

QExt rescaled_moment_qshift(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                            const Rat& q, const QExt& t) {
    return rescaled_moment_at(n, a, b, c, d, q, t, t * t * q);
}

QExt aw_moment(const PhiTable& phi0, int n, const QExt& t) {
    if (t.is_zero()) throw ParameterError("aw_moment needs t != 0");
    if (!phi0.aw()) throw ParameterError("aw_moment needs the table's AW quadruple");
    const ThetaCtxPtr& ctx = phi0.ctx();
    auto [a, b, c, d] = *phi0.aw();
    QExt tinv = t.inverse();
    UniPoly p = askey_wilson(n, a * t, b * t, c * tinv, d * tinv, phi0.q());
    QExt half_inv_theta = qx(Rat(1, 2), ctx) * qx_theta_pow(-1, ctx);
    NPoly xt = NPoly::monomial(ctx, 1, 0, half_inv_theta * tinv);
    xt += NPoly::monomial(ctx, 0, 1, half_inv_theta * t);
    return phi_eval(phi0, p.eval_algebra(xt));
}

} // namespace qasep
