#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qasep/qext.hpp"

namespace qasep {

/// Generators: D/E are the rate-side generators, d/e the shifted ones with
/// D = theta^2 I + theta d, E = theta^2 I + theta e and d e - q e d = I.
enum class Gen : unsigned char { D, E, d, e };

/// A product of generators, leftmost factor first. Empty word = identity.
using Word = std::vector<Gen>;

bool is_de_word(const Word& w); // only d/e letters
bool is_DE_word(const Word& w); // only D/E letters

/// Exponent pair of a normal-order monomial e^m d^n.
struct MN {
    int m = 0;
    int n = 0;
    auto operator<=>(const MN&) const = default;
};

/// Element of the algebra in the normal-order basis {e^m d^n}, sparse map of
/// nonzero coefficients. Immutable value semantics; all operations are pure.
class NPoly {
public:
    explicit NPoly(ThetaCtxPtr ctx) : ctx_(std::move(ctx)) {}

    static NPoly zero(const ThetaCtxPtr& ctx) { return NPoly(ctx); }
    static NPoly one(const ThetaCtxPtr& ctx) { return monomial(ctx, 0, 0); }
    static NPoly monomial(const ThetaCtxPtr& ctx, int m, int n);
    static NPoly monomial(const ThetaCtxPtr& ctx, int m, int n, const QExt& coeff);

    const ThetaCtxPtr& ctx() const { return ctx_; }
    const std::map<MN, QExt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // max m+n over stored keys; -1 for the zero element

    QExt coeff(int m, int n) const;
    void add_term(const MN& key, const QExt& c); // drops resulting zeros

    NPoly operator-() const;
    NPoly& operator+=(const NPoly& o);
    NPoly& operator-=(const NPoly& o);
    NPoly& operator*=(const QExt& c);
    NPoly& operator*=(const Rat& c);

    /// Truncation to the terms of exact total degree k.
    NPoly degree_part(int k) const;

    std::string str() const;

    friend bool operator==(const NPoly& a, const NPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<MN, QExt> terms_;
    ThetaCtxPtr ctx_;
};

NPoly operator+(NPoly a, const NPoly& b);
NPoly operator-(NPoly a, const NPoly& b);
NPoly operator*(NPoly a, const QExt& c);
NPoly operator*(const QExt& c, NPoly a);

/// Normal-order product in the algebra, p * r.
NPoly poly_mul(const NPoly& p, const NPoly& r);

/// Integer power via poly_mul.
NPoly poly_pow(const NPoly& p, int e);

/// Normal-order expansion of a word over the shifted generators d/e.
NPoly normal_order(const Word& w, const ThetaCtxPtr& ctx);

/// Expansion of a word over D/E through D = theta^2 I + theta d,
/// E = theta^2 I + theta e, multiplied out in normal order.
NPoly de_substitute(const Word& w, const ThetaCtxPtr& ctx);

/// Word for a configuration: letter j is D when tau_j = 1, E when tau_j = 0.
Word config_word(const std::vector<int>& tau);

/// Number of (d, e) pairs with the d on the left; the leading coefficient of
/// the normal-order expansion is q^I with I this count.
long long inversion_count(const Word& w);

} // namespace qasep
