#include "qasep/functionals.hpp"

namespace qasep {

namespace {

// Delta(x) = theta^{-1} + theta x from the invariance equations.
QExt delta_shift(const QExt& x, const ThetaCtxPtr& ctx) {
    return qx_theta_pow(-1, ctx) + qx_theta(ctx) * x;
}

struct RateCoeffs {
    QExt alpha, beta, gamma, delta;
    Rat q;
    ThetaCtxPtr ctx;

    QExt value_or_zero(const std::map<MN, QExt>& v, int m, int n) const {
        if (m < 0 || n < 0) return qx_zero(ctx);
        return v.at({m, n});
    }

    // phi[e^{m+1} d^n] from layer m+n.
    QExt step_e(const std::map<MN, QExt>& v, int m, int n) const {
        QExt da = delta_shift(gamma - alpha, ctx);
        QExt db = delta_shift(delta - beta, ctx);
        QExt num = (beta * da + gamma * db * qpow(q, m)) * value_or_zero(v, m, n);
        if (n >= 1) num += gamma * delta * qint(n, q) * qpow(q, m) * value_or_zero(v, m, n - 1);
        if (m >= 1) num += beta * gamma * qint(m, q) * value_or_zero(v, m - 1, n);
        QExt den = alpha * beta - gamma * delta * qpow(q, m + n);
        if (den.is_zero()) throw RegimeError("vanishing recursion denominator: misclassified regime");
        return num / den;
    }

    // phi[e^m d^{n+1}] from layer m+n.
    QExt step_d(const std::map<MN, QExt>& v, int m, int n) const {
        QExt da = delta_shift(gamma - alpha, ctx);
        QExt db = delta_shift(delta - beta, ctx);
        QExt num = (alpha * db + delta * da * qpow(q, n)) * value_or_zero(v, m, n);
        if (n >= 1) num += alpha * delta * qint(n, q) * value_or_zero(v, m, n - 1);
        if (m >= 1) num += gamma * delta * qpow(q, n) * qint(m, q) * value_or_zero(v, m - 1, n);
        QExt den = alpha * beta - gamma * delta * qpow(q, m + n);
        if (den.is_zero()) throw RegimeError("vanishing recursion denominator: misclassified regime");
        return num / den;
    }

    void fill_next_layer(std::map<MN, QExt>& v, int k) const {
        for (int m = k; m >= 0; --m) {
            int n = k - m;
            v.emplace(MN{m + 1, n}, step_e(v, m, n));
        }
        v.emplace(MN{0, k + 1}, step_d(v, 0, k));
    }
};

struct AwCoeffs {
    QExt a, b, c, d;
    Rat q;
    ThetaCtxPtr ctx;

    QExt value_or_zero(const std::map<MN, QExt>& v, int m, int n) const {
        if (m < 0 || n < 0) return qx_zero(ctx);
        return v.at({m, n});
    }

    QExt den(int k) const { return qx_one(ctx) - a * b * c * d * qpow(q, k); }

    QExt step_e(const std::map<MN, QExt>& v, int m, int n) const {
        QExt theta = qx_theta(ctx);
        QExt num = theta * (c + d - c * d * (a + b) * qpow(q, m)) * value_or_zero(v, m, n);
        if (m >= 1) num -= c * d * qint(m, q) * value_or_zero(v, m - 1, n);
        if (n >= 1) num += a * b * c * d * qpow(q, m) * qint(n, q) * value_or_zero(v, m, n - 1);
        QExt dd = den(m + n);
        if (dd.is_zero()) throw DomainError("AW recursion hit a vanishing denominator");
        return num / dd;
    }

    QExt step_d(const std::map<MN, QExt>& v, int m, int n) const {
        QExt theta = qx_theta(ctx);
        QExt num = theta * (a + b - a * b * (c + d) * qpow(q, n)) * value_or_zero(v, m, n);
        if (n >= 1) num -= a * b * qint(n, q) * value_or_zero(v, m, n - 1);
        if (m >= 1) num += a * b * c * d * qpow(q, n) * qint(m, q) * value_or_zero(v, m - 1, n);
        QExt dd = den(m + n);
        if (dd.is_zero()) throw DomainError("AW recursion hit a vanishing denominator");
        return num / dd;
    }

    void fill_next_layer(std::map<MN, QExt>& v, int k) const {
        for (int m = k; m >= 0; --m) {
            int n = k - m;
            v.emplace(MN{m + 1, n}, step_e(v, m, n));
        }
        v.emplace(MN{0, k + 1}, step_d(v, 0, k));
    }
};

RateCoeffs rate_coeffs(const PhiTable& t) {
    return RateCoeffs{t.alpha(), t.beta(), t.gamma(), t.delta(), t.q(), t.ctx()};
}

} // namespace

const QExt& PhiTable::value(int m, int n) const {
    auto it = values_.find({m, n});
    if (it == values_.end())
        throw DomainError("phi value (" + std::to_string(m) + "," + std::to_string(n) +
                          ") outside table coverage");
    return it->second;
}

PhiTable build_phi0(const AsepParams& params, int max_degree) {
    if (max_degree < 0) throw ParameterError("max_degree must be >= 0");
    PhiTable t;
    t.q_ = params.q;
    t.ctx_ = params.ctx;
    t.alpha_ = qx(params.alpha, params.ctx);
    t.beta_ = qx(params.beta, params.ctx);
    t.gamma_ = qx(params.gamma, params.ctx);
    t.delta_ = qx(params.delta, params.ctx);
    if (params.aw)
        t.aw_ = std::array<QExt, 4>{qx(params.aw->a, params.ctx), qx(params.aw->b, params.ctx),
                                    qx(params.aw->c, params.ctx), qx(params.aw->d, params.ctx)};
    if (params.singular()) {
        int N = *params.singular_index;
        if (max_degree > N)
            throw DomainError("phi_0 is only defined through degree N = " + std::to_string(N) +
                              " in the singular regime");
        if (params.gamma == 0 || params.delta == 0)
            throw ParameterError("singular phi_0 requires gamma*delta > 0");
        t.regime_ = Regime::Phi0Singular;
        t.N_ = N;
    } else {
        t.regime_ = Regime::Phi0NonSingular;
    }
    t.values_.emplace(MN{0, 0}, qx_one(params.ctx));
    RateCoeffs rc = rate_coeffs(t);
    for (int k = 0; k < max_degree; ++k) rc.fill_next_layer(t.values_, k);
    t.covered_ = max_degree;
    return t;
}

PhiTable build_phi1(const AsepParams& params, int max_degree) {
    if (!params.singular()) throw RegimeError("phi_1 exists only in the singular regime");
    int N = *params.singular_index;
    if (max_degree < N + 1) throw ParameterError("phi_1 table needs max_degree >= N+1");
    if (params.alpha <= 0 || params.beta <= 0 || params.gamma <= 0 || params.delta <= 0)
        throw ParameterError("phi_1 requires all four rates positive");
    PhiTable t;
    t.regime_ = Regime::Phi1;
    t.N_ = N;
    t.q_ = params.q;
    t.ctx_ = params.ctx;
    t.alpha_ = qx(params.alpha, params.ctx);
    t.beta_ = qx(params.beta, params.ctx);
    t.gamma_ = qx(params.gamma, params.ctx);
    t.delta_ = qx(params.delta, params.ctx);
    if (params.aw)
        t.aw_ = std::array<QExt, 4>{qx(params.aw->a, params.ctx), qx(params.aw->b, params.ctx),
                                    qx(params.aw->c, params.ctx), qx(params.aw->d, params.ctx)};

    for (int k = 0; k <= N; ++k)
        for (int m = 0; m <= k; ++m) t.values_.emplace(MN{m, k - m}, qx_zero(params.ctx));

    // Degree-(N+1) layer: Pi^{-1} alpha^n gamma^m q^{m(m-1)/2} with the
    // normalizer Pi = theta^{N+1} prod_{j=1}^{N+1} (alpha + q^{j-1} gamma).
    QExt pi = qx_theta_pow(N + 1, params.ctx);
    for (int j = 1; j <= N + 1; ++j) pi *= qx(params.alpha + qpow(params.q, j - 1) * params.gamma, params.ctx);
    QExt pi_inv = pi.inverse();
    for (int m = 0; m <= N + 1; ++m) {
        int n = N + 1 - m;
        Rat coeff = rat_pow(params.alpha, n) * rat_pow(params.gamma, m) *
                    qpow(params.q, static_cast<long long>(m) * (m - 1) / 2);
        t.values_.emplace(MN{m, n}, pi_inv * coeff);
    }

    RateCoeffs rc = rate_coeffs(t);
    for (int k = N + 1; k < max_degree; ++k) rc.fill_next_layer(t.values_, k);
    t.covered_ = max_degree;
    return t;
}

PhiTable build_phi0_aw(const QExt& a, const QExt& b, const QExt& c, const QExt& d, const Rat& q,
                       const ThetaCtxPtr& ctx, int max_degree) {
    if (max_degree < 0) throw ParameterError("max_degree must be >= 0");
    PhiTable t;
    t.regime_ = Regime::Phi0NonSingular;
    t.q_ = q;
    t.ctx_ = ctx;
    t.aw_ = std::array<QExt, 4>{a, b, c, d};
    // Rates through the AW parameter map; the recursion itself never needs
    // them, so a vanishing (1+x) only disables the rate-form invariance check.
    QExt one = qx_one(ctx);
    QExt cd_den = (one + c) * (one + d);
    QExt ab_den = (one + a) * (one + b);
    Rat one_mq = Rat(1) - q;
    if (cd_den.is_zero() || ab_den.is_zero()) {
        t.rates_ok_ = false;
        t.alpha_ = t.beta_ = t.gamma_ = t.delta_ = qx_zero(ctx);
    } else {
        t.alpha_ = qx(one_mq, ctx) / cd_den;
        t.gamma_ = qx(-one_mq, ctx) * c * d / cd_den;
        t.beta_ = qx(one_mq, ctx) / ab_den;
        t.delta_ = qx(-one_mq, ctx) * a * b / ab_den;
    }

    t.values_.emplace(MN{0, 0}, qx_one(ctx));
    AwCoeffs ac{a, b, c, d, q, ctx};
    for (int k = 0; k < max_degree; ++k) ac.fill_next_layer(t.values_, k);
    t.covered_ = max_degree;
    return t;
}

QExt phi_eval(const PhiTable& table, const NPoly& p) {
    if (p.degree() > table.covered_degree())
        throw DomainError("polynomial degree exceeds phi table coverage");
    QExt acc = qx_zero(table.ctx());
    for (const auto& [key, c] : p.terms()) acc += c * table.value(key.m, key.n);
    return acc;
}

bool check_invariance(const PhiTable& table, int k) {
    if (!table.rates_ok_)
        throw ParameterError("invariance check unavailable: degenerate rate conversion");
    if (k < 0 || k + 1 > table.covered_degree())
        throw DomainError("invariance check needs values through degree k+1");
    const ThetaCtxPtr& ctx = table.ctx();
    const Rat& q = table.q();
    QExt da = delta_shift(table.gamma() - table.alpha(), ctx);
    QExt db = delta_shift(table.delta() - table.beta(), ctx);
    for (int deg = 0; deg <= k; ++deg) {
        for (int m = 0; m <= deg; ++m) {
            int n = deg - m;
            QExt lhs_w = table.alpha() * table.value(m + 1, n) -
                         qpow(q, m) * table.gamma() * table.value(m, n + 1);
            QExt rhs_w = da * table.value(m, n);
            if (m >= 1) rhs_w += table.gamma() * qint(m, q) * table.value(m - 1, n);
            if (lhs_w != rhs_w) return false;
            QExt lhs_v = table.beta() * table.value(m, n + 1) -
                         qpow(q, n) * table.delta() * table.value(m + 1, n);
            QExt rhs_v = db * table.value(m, n);
            if (n >= 1) rhs_v += table.delta() * qint(n, q) * table.value(m, n - 1);
            if (lhs_v != rhs_v) return false;
        }
    }
    return true;
}

bool check_consistency(const PhiTable& table) {
    if (!table.rates_ok_)
        throw ParameterError("consistency check unavailable: degenerate rate conversion");
    int start = table.regime() == Regime::Phi1 ? *table.singular_index() + 1 : 0;
    RateCoeffs rc = rate_coeffs(table);
    for (const auto& [key, val] : table.values()) {
        if (key.m < 1 || key.n < 1 || key.m + key.n <= start) continue;
        QExt via_e = rc.step_e(table.values(), key.m - 1, key.n);
        QExt via_d = rc.step_d(table.values(), key.m, key.n - 1);
        if (via_e != val || via_d != val) return false;
    }
    return true;
}

PhiTable perturb_for_test(PhiTable table, int m, int n, const Rat& delta) {
    auto it = table.values_.find({m, n});
    if (it == table.values_.end()) throw DomainError("perturbation outside coverage");
    it->second += delta;
    return table;
}

} // namespace qasep
