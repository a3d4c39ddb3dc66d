#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qasep/algebra.hpp"
#include "qasep/qext.hpp"

namespace qasep {

/// Askey-Wilson parameter quadruple (exact).
struct AwQuad {
    Rat a, b, c, d;
};

/// Exact ASEP rates plus derived context. alpha, beta > 0; gamma, delta >= 0;
/// 0 <= q < 1. singular_index = N iff alpha*beta = q^N*gamma*delta exactly.
struct AsepParams {
    Rat alpha, beta, gamma, delta;
    Rat q;
    std::optional<AwQuad> aw;
    std::optional<int> singular_index;  // N
    std::optional<int> reversal_index;  // M, non-singular case only
    ThetaCtxPtr ctx;

    bool singular() const { return singular_index.has_value(); }
};

/// Smallest N <= n_cap with alpha*beta = q^N*gamma*delta, exact scan.
/// Stops early once q^n*gamma*delta drops below alpha*beta.
std::optional<int> detect_singular(const Rat& alpha, const Rat& beta, const Rat& gamma,
                                   const Rat& delta, const Rat& q, int n_cap = 64);

/// Exact rates from the Askey-Wilson quadruple:
///   alpha = (1-q)/((1+c)(1+d)),  gamma = -(1-q)cd/((1+c)(1+d)),
///   beta  = (1-q)/((1+a)(1+b)),  delta = -(1-q)ab/((1+a)(1+b)).
/// Requires a, c > 0, b, d in (-1, 0], 0 <= q < 1.
AsepParams from_awparams(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& q,
                         int n_cap = 64);

/// Rate-direction construction; the AW quadruple stays unset (the reverse map
/// needs square roots, see to_awparams).
AsepParams from_rates(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& delta,
                      const Rat& q, int n_cap = 64);

/// Floating AW quadruple a = kappa+(beta,delta), b = kappa-(beta,delta),
/// c = kappa+(alpha,gamma), d = kappa-(alpha,gamma). Advisory only.
std::array<double, 4> to_awparams(const AsepParams& params);

/// Exact probability vector over {0,1}^L. States are L-bit integers with
/// site 1 as the most significant bit.
struct Dist {
    int L = 0;
    std::vector<Rat> p;

    const Rat& at(unsigned state) const { return p.at(state); }
};

/// Bit-string "0101..." for a state, site 1 first.
std::string config_string(int L, unsigned state);

/// Configuration tau as a 0/1 vector, site 1 first.
std::vector<int> config_bits(int L, unsigned state);

/// Stationary distribution through the invariant functionals: phi_0 for
/// L < N+1 (or any L when non-singular), phi_1 for L >= N+1.
Dist stationary(const AsepParams& params, int L);

/// Product of Bernoulli measures at L = N+1 with p_j = alpha/(alpha + gamma q^{j-1}).
/// Singular regime only.
Dist bernoulli_product(const AsepParams& params);

/// Steady-state current J through a bond, exact. L >= 2.
Rat current(const AsepParams& params, int L);

} // namespace qasep
