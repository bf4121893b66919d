#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace dt4 {

// GMP rationals are kept canonical (lowest terms, positive denominator) by
// every arithmetic operator; constructors from (num, den) go through
// make_rational which canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b"; throws Error(InvalidArgument) otherwise.
Rational parse_rational(std::string_view text);

// Generalized binomial C(x, k) for integer x and k >= 0 (polynomial in x).
Integer binomial(long x, long k);

bool is_integer(const Rational& q);

}  // namespace dt4
