#pragma once

#include <vector>

#include "qasep/algebra.hpp"
#include "qasep/qext.hpp"

namespace qasep {

/// Polynomial in one variable with QExt coefficients, ascending degree,
/// trailing coefficient nonzero (the zero polynomial has no coefficients).
class UniPoly {
public:
    explicit UniPoly(ThetaCtxPtr ctx) : ctx_(std::move(ctx)) {}
    UniPoly(std::vector<QExt> coeffs, ThetaCtxPtr ctx);

    static UniPoly zero(const ThetaCtxPtr& ctx) { return UniPoly(ctx); }
    static UniPoly constant(const QExt& c);
    static UniPoly x(const ThetaCtxPtr& ctx); // the variable itself

    const ThetaCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    QExt coeff(int i) const;
    const std::vector<QExt>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const QExt& c);

    QExt eval(const QExt& x) const;

    /// Evaluation at an algebra element, powers taken through poly_mul.
    NPoly eval_algebra(const NPoly& x) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<QExt> coeffs_;
    ThetaCtxPtr ctx_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(UniPoly a, const QExt& c);
UniPoly operator*(const QExt& c, UniPoly a);

} // namespace qasep
