#include "qasep/tasep.hpp"

#include <array>

#include "qasep/functionals.hpp"
#include "qasep/qspecial.hpp"

namespace qasep {

SymFuncs sym_funcs(const AwQuad& aw) {
    const Rat &a = aw.a, &b = aw.b, &c = aw.c, &d = aw.d;
    SymFuncs s;
    s.s1 = a + b + c + d;
    s.s2 = a * b + a * c + a * d + b * c + b * d + c * d;
    s.s3 = a * b * c + a * b * d + a * c * d + b * c * d;
    s.s4 = a * b * c * d;
    return s;
}

Series series_mul(const Series& a, const Series& b, int order) {
    Series out;
    out.coeffs.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int i = 0; i <= a.order() && i <= order; ++i)
        for (int j = 0; j <= b.order() && i + j <= order; ++j)
            out.coeffs[static_cast<std::size_t>(i + j)] +=
                a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
    return out;
}

Series series_inverse(const Series& a, int order) {
    if (a.coeffs.empty() || a.coeffs[0] == 0)
        throw DivisionError("series inverse needs a nonzero constant term");
    Series out;
    out.coeffs.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    out.coeffs[0] = Rat(1) / a.coeffs[0];
    for (int k = 1; k <= order; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k && j <= a.order(); ++j)
            acc += a.coeffs[static_cast<std::size_t>(j)] * out.coeffs[static_cast<std::size_t>(k - j)];
        out.coeffs[static_cast<std::size_t>(k)] = -acc / a.coeffs[0];
    }
    return out;
}

namespace {

const AwQuad& require_q0_aw(const AsepParams& params) {
    if (params.q != 0) throw ParameterError("q = 0 closed forms need q = 0");
    if (!params.aw) throw ParameterError("q = 0 closed forms need the AW quadruple");
    return *params.aw;
}

bool pairwise_distinct(const AwQuad& aw) {
    std::array<Rat, 4> v{aw.a, aw.b, aw.c, aw.d};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return false;
    return true;
}

} // namespace

Rat tasep_g(int n, const AsepParams& params) {
    const AwQuad& aw = require_q0_aw(params);
    if (params.singular()) throw RegimeError("phi_0 closed form needs the non-singular regime");
    if (!pairwise_distinct(aw)) {
        // coincident parameters: the distinct-roots solution degenerates,
        // the recursion does not
        PhiTable t = build_phi0(params, 0);
        QExt g = phi0_qhermite_moment(MomentMode::Recursion, n, qx_one(params.ctx), t);
        return g.r();
    }
    const Rat &a = aw.a, &b = aw.b, &c = aw.c, &d = aw.d;
    Rat s4 = a * b * c * d;
    Rat b1 = (1 - b * c) * (1 - b * d) * (1 - c * d) / ((a - b) * (a - c) * (a - d) * (1 - s4));
    Rat b2 = (1 - a * c) * (1 - a * d) * (1 - c * d) / ((b - a) * (b - c) * (b - d) * (1 - s4));
    Rat k1 = (1 - a * b) * (1 - a * d) * (1 - b * d) / ((c - a) * (c - b) * (c - d) * (1 - s4));
    Rat k2 = (1 - a * b) * (1 - a * c) * (1 - b * c) / ((d - a) * (d - b) * (d - c) * (1 - s4));
    return b1 * rat_pow(a, n + 3) + b2 * rat_pow(b, n + 3) + k1 * rat_pow(c, n + 3) +
           k2 * rat_pow(d, n + 3);
}

Rat tasep_f(int n, const AsepParams& params) {
    const AwQuad& aw = require_q0_aw(params);
    if (!params.singular() || *params.singular_index != 0)
        throw RegimeError("phi_1 closed form needs abcd = 1 (singular at q = 0)");
    if (!pairwise_distinct(aw)) {
        PhiTable t = build_phi1(params, 1);
        QExt f = phi1_qhermite_moment(MomentMode::Recursion, n, qx_one(params.ctx), t);
        return f.r();
    }
    const Rat &a = aw.a, &b = aw.b, &c = aw.c, &d = aw.d;
    auto term = [n](const Rat& x, const Rat& y1, const Rat& y2, const Rat& y3) {
        return rat_pow(x, n + 2) / ((x - y1) * (x - y2) * (x - y3));
    };
    return term(a, b, c, d) + term(b, a, c, d) + term(c, a, b, d) + term(d, a, b, c);
}

Series resolvent_series(ResolventRegime regime, const AsepParams& params, int order) {
    if (params.q != 0) throw ParameterError("resolvent series are a q = 0 construction");
    if (order < 0) throw ParameterError("order must be >= 0");
    Series out;
    out.coeffs.reserve(static_cast<std::size_t>(order) + 1);
    if (regime == ResolventRegime::Phi0) {
        if (params.singular()) throw RegimeError("phi_0 resolvent needs abcd != 1");
        PhiTable t = build_phi0(params, order);
        for (int n = 0; n <= order; ++n)
            out.coeffs.push_back(
                phi_eval(t, qhermite_operator(n, qx_one(params.ctx), params.ctx)).r());
    } else {
        if (!params.singular() || *params.singular_index != 0)
            throw RegimeError("phi_1 resolvent needs abcd = 1");
        PhiTable t = build_phi1(params, std::max(order, 1));
        for (int n = 0; n <= order; ++n)
            out.coeffs.push_back(
                phi_eval(t, qhermite_operator(n, qx_one(params.ctx), params.ctx)).r());
    }
    return out;
}

Series resolvent_closed_form(ResolventRegime regime, const AsepParams& params, int order) {
    const AwQuad& aw = require_q0_aw(params);
    if (order < 0) throw ParameterError("order must be >= 0");
    SymFuncs s = sym_funcs(aw);
    Series den;
    den.coeffs = {Rat(1), -s.s1, s.s2, -s.s3, s.s4};
    Series den_inv = series_inverse(den, order);
    Series num;
    if (regime == ResolventRegime::Phi0) {
        if (params.singular()) throw RegimeError("phi_0 resolvent needs abcd != 1");
        // forced by the n = 1, 2 relations; all higher coefficients of
        // numerator = series * denominator vanish by the order-4 recursion
        num.coeffs = {Rat(1), (s.s1 * s.s4 - s.s3) / (Rat(1) - s.s4), s.s4};
    } else {
        if (!params.singular() || *params.singular_index != 0)
            throw RegimeError("phi_1 resolvent needs abcd = 1");
        num.coeffs = {Rat(0), Rat(1)};
    }
    return series_mul(num, den_inv, order);
}

} // namespace qasep
