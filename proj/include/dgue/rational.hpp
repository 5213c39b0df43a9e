#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace dgue {

// Exact scalars. GMP-backed: always canonical (denominator > 0, reduced).
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p", or a decimal string ("-3.25", "7e-2") into an exact
/// rational. Decimals are converted exactly (0.7 -> 7/10), never through a
/// binary float. Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view s);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

Integer factorial(unsigned n);
Integer double_factorial(long n);  // n!! with (-1)!! = 0!! = 1
Integer binomial(unsigned n, unsigned k);

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace dgue
