#include "qasep/unipoly.hpp"

namespace qasep {

UniPoly::UniPoly(std::vector<QExt> coeffs, ThetaCtxPtr ctx)
    : coeffs_(std::move(coeffs)), ctx_(std::move(ctx)) {
    trim();
}

UniPoly UniPoly::constant(const QExt& c) {
    UniPoly p(c.ctx());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

UniPoly UniPoly::x(const ThetaCtxPtr& ctx) {
    UniPoly p(ctx);
    p.coeffs_ = {qx_zero(ctx), qx_one(ctx)};
    return p;
}

QExt UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return qx_zero(ctx_);
    return coeffs_[static_cast<std::size_t>(i)];
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly out(ctx_);
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), qx_zero(ctx_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), qx_zero(ctx_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const QExt& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

QExt UniPoly::eval(const QExt& x) const {
    QExt acc = qx_zero(ctx_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

NPoly UniPoly::eval_algebra(const NPoly& x) const {
    NPoly acc = NPoly::zero(x.ctx());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = poly_mul(acc, x);
        acc += NPoly::monomial(x.ctx(), 0, 0, *it);
    }
    return acc;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.ctx());
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<QExt> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), qx_zero(a.ctx()));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return UniPoly(std::move(c), a.ctx());
}

UniPoly operator*(UniPoly a, const QExt& c) { return a *= c; }
UniPoly operator*(const QExt& c, UniPoly a) { return a *= c; }

} // namespace qasep
