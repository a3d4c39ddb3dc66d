#pragma once

#include <map>
#include <utility>

#include "qasep/asep.hpp"

namespace qasep {

/// Sparse CTMC generator on {0,1}^L. Only off-diagonal rates are stored; the
/// diagonal is implied by the zero-row-sum convention. States are L-bit
/// integers with site 1 as the most significant bit.
struct Generator {
    int L = 0;
    std::map<std::pair<unsigned, unsigned>, Rat> rates;

    unsigned size() const { return 1u << L; }
    Rat rate(unsigned from, unsigned to) const;
    Rat diagonal(unsigned state) const; // -sum of outgoing rates
};

/// Generator of the open-boundary exclusion process: boundary flips at rates
/// alpha/gamma (site 1) and beta/delta (site L), bulk swaps at rates 1 and q.
Generator make_generator(const AsepParams& params, int L, int hard_cap = 12);

/// Unique probability vector pi with pi Q = 0, by exact rational elimination.
/// ModelError when the nullspace is not one-dimensional or pi is not a
/// strictly positive probability vector.
Dist stationary_exact(const Generator& g);

} // namespace qasep
