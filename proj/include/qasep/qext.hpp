#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qasep/rat.hpp"

namespace qasep {

/// Shared context for the quadratic extension Q(theta), theta^2 = theta_sq.
///
/// Built once per parameter set (theta_sq = 1/(1-q)) and shared by every value
/// downstream. When theta_sq is the square of a rational the extension has zero
/// divisors, so the context collapses: theta is stored as a rational and every
/// value keeps s = 0.
struct ThetaCtx {
    Rat q;        // only meaningful for contexts made from an ASEP q
    Rat theta_sq; // > 0
    std::optional<Rat> theta_rat; // set iff theta_sq is a perfect rational square

    bool collapsed() const { return theta_rat.has_value(); }
};

using ThetaCtxPtr = std::shared_ptr<const ThetaCtx>;

/// Context with theta^2 = 1/(1-q); requires q < 1.
ThetaCtxPtr make_theta_ctx(const Rat& q);

/// Context for a free theta_sq > 0 (used by generic field-extension tests).
ThetaCtxPtr make_theta_ctx_from_sq(const Rat& theta_sq);

/// Exact element r + s*theta of Q(theta).
class QExt {
public:
    QExt() = default;
    QExt(Rat r, Rat s, ThetaCtxPtr ctx);

    const Rat& r() const { return r_; }
    const Rat& s() const { return s_; }
    const ThetaCtxPtr& ctx() const { return ctx_; }

    bool is_zero() const { return r_ == 0 && s_ == 0; }
    bool is_rational() const { return s_ == 0; }

    /// Exact sign of the real number r + s*sqrt(theta_sq).
    int sign() const;

    QExt operator-() const;
    QExt& operator+=(const QExt& o);
    QExt& operator-=(const QExt& o);
    QExt& operator*=(const QExt& o);
    QExt& operator/=(const QExt& o);
    QExt& operator+=(const Rat& o);
    QExt& operator-=(const Rat& o);
    QExt& operator*=(const Rat& o);
    QExt& operator/=(const Rat& o);

    /// Multiplicative inverse via conjugate rationalization. Throws DivisionError on zero.
    QExt inverse() const;

    QExt pow(long long e) const;

    double to_double() const;
    std::string str() const;

    friend bool operator==(const QExt& a, const QExt& b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }
    friend bool operator!=(const QExt& a, const QExt& b) { return !(a == b); }

private:
    void require_same_ctx(const QExt& o) const;

    Rat r_{};
    Rat s_{};
    ThetaCtxPtr ctx_{};
};

QExt operator+(QExt a, const QExt& b);
QExt operator-(QExt a, const QExt& b);
QExt operator*(QExt a, const QExt& b);
QExt operator/(QExt a, const QExt& b);
QExt operator+(QExt a, const Rat& b);
QExt operator-(QExt a, const Rat& b);
QExt operator*(QExt a, const Rat& b);
QExt operator/(QExt a, const Rat& b);
QExt operator+(const Rat& a, QExt b);
QExt operator-(const Rat& a, const QExt& b);
QExt operator*(const Rat& a, QExt b);

/// r + 0*theta in ctx.
QExt qx(const Rat& r, const ThetaCtxPtr& ctx);
QExt qx_zero(const ThetaCtxPtr& ctx);
QExt qx_one(const ThetaCtxPtr& ctx);

/// theta itself (collapses to its rational value in a collapsed context).
QExt qx_theta(const ThetaCtxPtr& ctx);

/// theta^k for any integer k (theta^{-2} = 1 - q and so on).
QExt qx_theta_pow(long long k, const ThetaCtxPtr& ctx);

} // namespace qasep
