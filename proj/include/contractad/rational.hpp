#pragma once

#include <gmpxx.h>

#include <string>

namespace contractad {

// mpq_class keeps values canonical (reduced, positive denominator) after every
// arithmetic operation, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace contractad
