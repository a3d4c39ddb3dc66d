#include "qasep/qext.hpp"

#include <cmath>

namespace qasep {

namespace {

ThetaCtxPtr build_ctx(const Rat& q, const Rat& theta_sq) {
    if (theta_sq <= 0) throw ParameterError("theta_sq must be positive");
    ThetaCtx ctx;
    ctx.q = q;
    ctx.theta_sq = theta_sq;
    Rat root;
    if (rat_sqrt_exact(theta_sq, root)) ctx.theta_rat = root;
    return std::make_shared<const ThetaCtx>(std::move(ctx));
}

} // namespace

ThetaCtxPtr make_theta_ctx(const Rat& q) {
    if (q >= 1) throw ParameterError("theta context requires q < 1");
    return build_ctx(q, Rat(1) / (Rat(1) - q));
}

ThetaCtxPtr make_theta_ctx_from_sq(const Rat& theta_sq) {
    return build_ctx(Rat(0), theta_sq);
}

QExt::QExt(Rat r, Rat s, ThetaCtxPtr ctx) : r_(std::move(r)), s_(std::move(s)), ctx_(std::move(ctx)) {
    if (!ctx_) throw ContextError("QExt without a theta context");
    if (ctx_->collapsed() && s_ != 0) {
        r_ += s_ * *ctx_->theta_rat;
        s_ = 0;
    }
}

void QExt::require_same_ctx(const QExt& o) const {
    if (ctx_ == o.ctx_) return;
    if (!ctx_ || !o.ctx_ || ctx_->theta_sq != o.ctx_->theta_sq)
        throw ContextError("mixing values from different theta contexts");
}

int QExt::sign() const {
    if (s_ == 0) return rat_sign(r_);
    if (r_ == 0) return rat_sign(s_);
    int sr = rat_sign(r_), ss = rat_sign(s_);
    if (sr == ss) return sr;
    // opposite signs: compare |r| vs |s|*theta through squares
    Rat lhs = r_ * r_, rhs = s_ * s_ * ctx_->theta_sq;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sr : ss;
}

QExt QExt::operator-() const { return QExt(-r_, -s_, ctx_); }

QExt& QExt::operator+=(const QExt& o) {
    require_same_ctx(o);
    r_ += o.r_;
    s_ += o.s_;
    return *this;
}

QExt& QExt::operator-=(const QExt& o) {
    require_same_ctx(o);
    r_ -= o.r_;
    s_ -= o.s_;
    return *this;
}

QExt& QExt::operator*=(const QExt& o) {
    require_same_ctx(o);
    Rat r = r_ * o.r_ + s_ * o.s_ * ctx_->theta_sq;
    Rat s = r_ * o.s_ + s_ * o.r_;
    r_ = std::move(r);
    s_ = std::move(s);
    return *this;
}

QExt& QExt::operator/=(const QExt& o) { return *this *= o.inverse(); }

QExt& QExt::operator+=(const Rat& o) {
    r_ += o;
    return *this;
}

QExt& QExt::operator-=(const Rat& o) {
    r_ -= o;
    return *this;
}

QExt& QExt::operator*=(const Rat& o) {
    r_ *= o;
    s_ *= o;
    return *this;
}

QExt& QExt::operator/=(const Rat& o) {
    if (o == 0) throw DivisionError("division by zero rational");
    r_ /= o;
    s_ /= o;
    return *this;
}

QExt QExt::inverse() const {
    if (is_zero()) throw DivisionError("inverse of zero");
    if (s_ == 0) return QExt(Rat(1) / r_, Rat(0), ctx_);
    // r^2 - s^2*theta_sq = 0 would make theta rational, which the collapsed
    // representation already rules out here.
    Rat den = r_ * r_ - s_ * s_ * ctx_->theta_sq;
    if (den == 0) throw DivisionError("zero divisor in quadratic extension");
    return QExt(r_ / den, -s_ / den, ctx_);
}

QExt QExt::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    QExt acc = qx_one(ctx_);
    QExt base = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

double QExt::to_double() const {
    return rat_to_double(r_) + rat_to_double(s_) * std::sqrt(rat_to_double(ctx_->theta_sq));
}

std::string QExt::str() const {
    if (s_ == 0) return rat_str(r_);
    std::string out;
    if (r_ != 0) out = rat_str(r_) + (s_ > 0 ? " + " : " - ");
    else if (s_ < 0) out = "-";
    Rat as = s_ < 0 ? Rat(-s_) : s_;
    if (as != 1) out += rat_str(as) + "*";
    out += "theta";
    return out;
}

QExt operator+(QExt a, const QExt& b) { return a += b; }
QExt operator-(QExt a, const QExt& b) { return a -= b; }
QExt operator*(QExt a, const QExt& b) { return a *= b; }
QExt operator/(QExt a, const QExt& b) { return a /= b; }
QExt operator+(QExt a, const Rat& b) { return a += b; }
QExt operator-(QExt a, const Rat& b) { return a -= b; }
QExt operator*(QExt a, const Rat& b) { return a *= b; }
QExt operator/(QExt a, const Rat& b) { return a /= b; }
QExt operator+(const Rat& a, QExt b) { return b += a; }
QExt operator-(const Rat& a, const QExt& b) { return -b + a; }
QExt operator*(const Rat& a, QExt b) { return b *= a; }

QExt qx(const Rat& r, const ThetaCtxPtr& ctx) { return QExt(r, Rat(0), ctx); }
QExt qx_zero(const ThetaCtxPtr& ctx) { return QExt(Rat(0), Rat(0), ctx); }
QExt qx_one(const ThetaCtxPtr& ctx) { return QExt(Rat(1), Rat(0), ctx); }
QExt qx_theta(const ThetaCtxPtr& ctx) { return QExt(Rat(0), Rat(1), ctx); }

QExt qx_theta_pow(long long k, const ThetaCtxPtr& ctx) {
    long long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
    // k = 2*half + odd with odd in {0,1}
    long long odd = k - 2 * half;
    QExt out = qx(rat_pow(ctx->theta_sq, half), ctx);
    if (odd) out *= qx_theta(ctx);
    return out;
}

} // namespace qasep
