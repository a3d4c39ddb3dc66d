#include "qasep/algebra.hpp"

namespace qasep {

bool is_de_word(const Word& w) {
    for (Gen g : w)
        if (g != Gen::d && g != Gen::e) return false;
    return true;
}

bool is_DE_word(const Word& w) {
    for (Gen g : w)
        if (g != Gen::D && g != Gen::E) return false;
    return true;
}

NPoly NPoly::monomial(const ThetaCtxPtr& ctx, int m, int n) {
    return monomial(ctx, m, n, qx_one(ctx));
}

NPoly NPoly::monomial(const ThetaCtxPtr& ctx, int m, int n, const QExt& coeff) {
    NPoly p(ctx);
    p.add_term({m, n}, coeff);
    return p;
}

int NPoly::degree() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) deg = std::max(deg, key.m + key.n);
    return deg;
}

QExt NPoly::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? qx_zero(ctx_) : it->second;
}

void NPoly::add_term(const MN& key, const QExt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NPoly NPoly::operator-() const {
    NPoly out(ctx_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

NPoly& NPoly::operator+=(const NPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, -c);
    return *this;
}

NPoly& NPoly::operator*=(const QExt& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

NPoly& NPoly::operator*=(const Rat& c) { return *this *= qx(c, ctx_); }

NPoly NPoly::degree_part(int k) const {
    NPoly out(ctx_);
    for (const auto& [key, c] : terms_)
        if (key.m + key.n == k) out.terms_.emplace(key, c);
    return out;
}

std::string NPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        if (key.m > 0) out += " e^" + std::to_string(key.m);
        if (key.n > 0) out += " d^" + std::to_string(key.n);
    }
    return out;
}

NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
NPoly operator*(NPoly a, const QExt& c) { return a *= c; }
NPoly operator*(const QExt& c, NPoly a) { return a *= c; }

namespace {

// p * e in normal order: e^m d^n e = q^n e^{m+1} d^n + [n]_q e^m d^{n-1}.
NPoly mul_e_right(const NPoly& p) {
    const Rat& q = p.ctx()->q;
    NPoly out(p.ctx());
    for (const auto& [key, c] : p.terms()) {
        out.add_term({key.m + 1, key.n}, c * qpow(q, key.n));
        if (key.n >= 1) out.add_term({key.m, key.n - 1}, c * qint(key.n, q));
    }
    return out;
}

NPoly mul_d_right(const NPoly& p) {
    NPoly out(p.ctx());
    for (const auto& [key, c] : p.terms()) out.add_term({key.m, key.n + 1}, c);
    return out;
}

NPoly mul_gen_right(const NPoly& p, Gen g) {
    switch (g) {
    case Gen::e:
        return mul_e_right(p);
    case Gen::d:
        return mul_d_right(p);
    default: {
        // D = theta^2 I + theta d, E = theta^2 I + theta e
        NPoly shifted = (g == Gen::D) ? mul_d_right(p) : mul_e_right(p);
        NPoly out = shifted * qx_theta(p.ctx());
        out += p * qx_theta_pow(2, p.ctx());
        return out;
    }
    }
}

} // namespace

NPoly poly_mul(const NPoly& p, const NPoly& r) {
    if (p.ctx() != r.ctx() && p.ctx()->theta_sq != r.ctx()->theta_sq)
        throw ContextError("poly_mul across different theta contexts");
    NPoly acc(p.ctx());
    for (const auto& [key, c] : r.terms()) {
        NPoly cur = p;
        for (int i = 0; i < key.m; ++i) cur = mul_e_right(cur);
        for (int i = 0; i < key.n; ++i) cur = mul_d_right(cur);
        cur *= c;
        acc += cur;
    }
    return acc;
}

NPoly poly_pow(const NPoly& p, int e) {
    NPoly acc = NPoly::one(p.ctx());
    for (int i = 0; i < e; ++i) acc = poly_mul(acc, p);
    return acc;
}

NPoly normal_order(const Word& w, const ThetaCtxPtr& ctx) {
    if (!is_de_word(w)) throw ParameterError("normal_order expects a word over the shifted generators d/e");
    NPoly acc = NPoly::one(ctx);
    for (Gen g : w) acc = mul_gen_right(acc, g);
    return acc;
}

NPoly de_substitute(const Word& w, const ThetaCtxPtr& ctx) {
    if (!is_DE_word(w)) throw ParameterError("de_substitute expects a word over D/E");
    NPoly acc = NPoly::one(ctx);
    for (Gen g : w) acc = mul_gen_right(acc, g);
    return acc;
}

Word config_word(const std::vector<int>& tau) {
    Word w;
    w.reserve(tau.size());
    for (int t : tau) w.push_back(t ? Gen::D : Gen::E);
    return w;
}

long long inversion_count(const Word& w) {
    long long ds = 0, inv = 0;
    for (Gen g : w) {
        if (g == Gen::d || g == Gen::D) ++ds;
        else inv += ds;
    }
    return inv;
}

} // namespace qasep
