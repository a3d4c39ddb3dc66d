#pragma once

#include <vector>

#include "qasep/asep.hpp"

namespace qasep {

/// Elementary symmetric functions of the AW quadruple.
struct SymFuncs {
    Rat s1, s2, s3, s4;
};

SymFuncs sym_funcs(const AwQuad& aw);

/// Truncated power series in z with exact coefficients, ascending.
struct Series {
    std::vector<Rat> coeffs; // size order+1

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const Series&, const Series&) = default;
};

Series series_mul(const Series& a, const Series& b, int order);
Series series_inverse(const Series& a, int order); // needs a.coeffs[0] != 0

/// q = 0 moment phi_0[H_n(e+d)] in closed form (four-power-sum solution of the
/// order-4 constant recursion). Needs pairwise distinct AW parameters and the
/// non-singular regime; coincident parameters fall back to the recursion path.
Rat tasep_g(int n, const AsepParams& params);

/// q = 0 moment phi_1[H_n(e+d)] in closed form (partial-fraction power sums
/// with exponent n+2). Needs abcd = 1 and pairwise distinct parameters;
/// coincident parameters fall back to the recursion path.
Rat tasep_f(int n, const AsepParams& params);

enum class ResolventRegime { Phi0, Phi1 };

/// Coefficients of sum_n phi[H_n(e+d)] z^n from the functional tables.
/// Phi0 requires abcd != 1, Phi1 requires abcd = 1; q = 0 only.
Series resolvent_series(ResolventRegime regime, const AsepParams& params, int order);

/// Taylor expansion of the closed rational form of the same series.
Series resolvent_closed_form(ResolventRegime regime, const AsepParams& params, int order);

} // namespace qasep
