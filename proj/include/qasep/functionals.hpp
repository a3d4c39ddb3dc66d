#pragma once

#include <map>
#include <optional>

#include "qasep/asep.hpp"

namespace qasep {

enum class Regime { Phi0Singular, Phi0NonSingular, Phi1 };

/// Memoized values phi[e^m d^n] of an invariant functional, filled layer by
/// layer in total degree. Immutable once built.
///
/// Coverage: Phi0Singular stores exactly {m+n <= min(max_degree, N)};
/// Phi1 stores {m+n <= max_degree} and vanishes for m+n <= N.
class PhiTable {
public:
    Regime regime() const { return regime_; }
    std::optional<int> singular_index() const { return N_; }
    int covered_degree() const { return covered_; }
    const Rat& q() const { return q_; }
    const ThetaCtxPtr& ctx() const { return ctx_; }
    const std::optional<std::array<QExt, 4>>& aw() const { return aw_; }

    const QExt& alpha() const { return alpha_; }
    const QExt& beta() const { return beta_; }
    const QExt& gamma() const { return gamma_; }
    const QExt& delta() const { return delta_; }

    bool has(int m, int n) const { return m >= 0 && n >= 0 && m + n <= covered_; }
    const QExt& value(int m, int n) const; // throws DomainError outside coverage
    const std::map<MN, QExt>& values() const { return values_; }

private:
    PhiTable() = default;
    friend PhiTable build_phi0(const AsepParams&, int);
    friend PhiTable build_phi1(const AsepParams&, int);
    friend PhiTable build_phi0_aw(const QExt&, const QExt&, const QExt&, const QExt&, const Rat&,
                                  const ThetaCtxPtr&, int);
    friend bool check_invariance(const PhiTable&, int);
    friend bool check_consistency(const PhiTable&);
    friend PhiTable perturb_for_test(PhiTable, int, int, const Rat&);

    Regime regime_{};
    std::optional<int> N_;
    int covered_ = -1;
    Rat q_;
    ThetaCtxPtr ctx_;
    QExt alpha_, beta_, gamma_, delta_;
    bool rates_ok_ = true; // false for AW tables whose rate conversion degenerates
    std::optional<std::array<QExt, 4>> aw_;
    std::map<MN, QExt> values_;
};

/// phi_0 with phi_0[I] = 1, extended layer by layer. Non-singular params give
/// coverage to max_degree; singular params require max_degree <= N
/// (DomainError otherwise) and gamma*delta > 0.
PhiTable build_phi0(const AsepParams& params, int max_degree);

/// phi_1 for a singular parameter set: zero through degree N, the explicit
/// degree-(N+1) layer, then the same recursion upward. Requires all four
/// rates positive and max_degree >= N+1.
PhiTable build_phi1(const AsepParams& params, int max_degree);

/// phi_0 built directly from Askey-Wilson parameters via the AW-form
/// recursion (denominators 1 - abcd q^{m+n}). Accepts any exact quadruple,
/// including theta-valued substituted ones; stops with DomainError when a
/// denominator vanishes before max_degree is reached.
PhiTable build_phi0_aw(const QExt& a, const QExt& b, const QExt& c, const QExt& d, const Rat& q,
                       const ThetaCtxPtr& ctx, int max_degree);

/// Linear extension: sum of coeff * phi[e^m d^n]. DomainError when the
/// polynomial degree exceeds the table coverage.
QExt phi_eval(const PhiTable& table, const NPoly& p);

/// Exact check of the invariance equations in the normal-order basis for all
/// m+n <= k (needs values through degree k+1).
bool check_invariance(const PhiTable& table, int k);

/// Path independence: every stored value with m, n >= 1 above the initial
/// layer is derived identically through either recursion route.
bool check_consistency(const PhiTable& table);

/// Test hook: copy of a table with values[m][n] shifted by delta.
PhiTable perturb_for_test(PhiTable table, int m, int n, const Rat& delta);

} // namespace qasep
