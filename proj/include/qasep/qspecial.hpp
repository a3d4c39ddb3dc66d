#pragma once

#include <vector>

#include "qasep/functionals.hpp"
#include "qasep/unipoly.hpp"

namespace qasep {

/// (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j).
QExt qpochhammer(const QExt& a, const Rat& q, int n);
Rat qpochhammer(const Rat& a, const Rat& q, int n);

/// Gaussian binomial [n k]_q, 0 outside 0 <= k <= n.
Rat qbinomial(int n, int k, const Rat& q);

/// Chebyshev polynomials of the second kind.
UniPoly chebyshev_u(int n, const ThetaCtxPtr& ctx);

/// Monic continuous q-Hermite family: x H_n = H_{n+1} + t [n]_q H_{n-1},
/// H_0 = 1, H_{-1} = 0.
UniPoly qhermite(int n, const QExt& t, const Rat& q);

/// Normal-order expansion of H_n(t e + d; t): sum_k [n k]_q t^k e^k d^{n-k}.
NPoly qhermite_operator(int n, const QExt& t, const ThetaCtxPtr& ctx);

/// n-th Askey-Wilson polynomial in x. q > 0 uses the explicit product form of
/// the terminating 4phi3 (no complex arithmetic); q = 0 uses the Chebyshev
/// closed forms. A vanishing parameter is permuted away from the front; the
/// all-zero quadruple degenerates to the q-Hermite family.
UniPoly askey_wilson(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                     const Rat& q);

/// Terminating sum {r+1}phi{r}(q^{-m}, nums...; dens...; q, q) evaluated through
/// (q^{-m};q)_j q^j/(q;q)_j = (-1)^j q^{j(j+1)/2-mj} [m j]_q. Requires q > 0
/// when m >= 1; a vanishing denominator factor raises ParameterError.
QExt qhyper_terminating(int m, const std::vector<QExt>& nums, const std::vector<QExt>& dens,
                        const Rat& q, const ThetaCtxPtr& ctx);

/// Connection coefficients of the q-Hermite family into the two-parameter
/// Al-Salam-Chihara family: sum_{l=k}^n [n l]_q [l k]_q a^{n-l} b^{l-k};
/// zero outside 0 <= k <= n.
QExt hermite_connection(int n, int k, const QExt& a, const QExt& b, const Rat& q);

/// a^{-k} 3phi2(q^{-k}, ad, ac; 0, abcd | q; q), the inner factor of the
/// Askey-Wilson connection coefficients. Satisfies a three-term recursion in k.
QExt connection_phi32(int k, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                      const Rat& q);

/// Coefficient of p_l(x; a,b,c,d|q) in the expansion of p_n(x; 0,0,0,0|q).
QExt aw_connection(int n, int l, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                   const Rat& q);

/// Constant term of H_n expanded in the Askey-Wilson basis:
/// theta^n sum_k c_{n,k} (ab;q)_k a^{-k} 3phi2(q^{-k}, ac, ad; 0, abcd | q; q).
QExt hermite_aw_coeff0(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                       const Rat& q);

enum class MomentMode { Definition, Recursion };

/// phi_0[H_n(t e + d; t)], by table evaluation or by the two-term-in-n
/// recursion over the q-orbit of t (needs the table's AW quadruple).
QExt phi0_qhermite_moment(MomentMode mode, int n, const QExt& t, const PhiTable& phi0);

/// phi_1[H_{n+N}(t e + d; t)]; index 0 gives 0.
QExt phi1_qhermite_moment(MomentMode mode, int n, const QExt& t, const PhiTable& phi1);

/// (abcd;q)_n phi_0-moment of H_n(t^2 e + d; t^2) for the substituted
/// quadruple (at, bt, c/t, d/t), divided by theta^n t^n; independent of t.
QExt rescaled_moment(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                     const Rat& q, const QExt& t);

/// Same expression with the argument shifted to q t^2; equals the
/// sqrt(q)-rescaled value q^{n/2} B_n(a/sqrt q, b/sqrt q, c sqrt q, d sqrt q)
/// without leaving Q(theta).
QExt rescaled_moment_qshift(int n, const QExt& a, const QExt& b, const QExt& c, const QExt& d,
                            const Rat& q, const QExt& t);

/// phi_0[p_n(x_t; at, bt, c/t, d/t | q)] with x_t = (e/t + t d)/(2 theta);
/// vanishes for 1 <= n < N+1 (and for every n >= 1 when non-singular).
/// Uses the table's AW quadruple.
QExt aw_moment(const PhiTable& phi0, int n, const QExt& t);

} // namespace qasep
