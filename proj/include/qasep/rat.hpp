#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "qasep/errors.hpp"

namespace qasep {

using Int = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-size numerator/denominator.
/// Backed by boost::multiprecision; always canonical (gcd 1, denominator > 0).
/// Expression templates are off so Rat behaves as a plain value type.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// num/den with arbitrary signs -> canonical Rat.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p/q" or "p" (optional sign, arbitrary size). Throws ParameterError.
Rat parse_rat(std::string_view text);

/// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string rat_str(const Rat& x);

double rat_to_double(const Rat& x);

/// x^e for integer e (e < 0 requires x != 0). 0^0 = 1.
Rat rat_pow(const Rat& x, long long e);

/// Nonnegative power of q; q^0 = 1 also at q = 0.
inline Rat qpow(const Rat& q, long long e) { return rat_pow(q, e); }

/// q-number [n]_q = 1 + q + ... + q^{n-1}, [0]_q = 0.
Rat qint(int n, const Rat& q);

int rat_sign(const Rat& x);

/// Floor square root test: returns true and sets root when x = root^2 with x >= 0.
bool rat_sqrt_exact(const Rat& x, Rat& root);

} // namespace qasep
