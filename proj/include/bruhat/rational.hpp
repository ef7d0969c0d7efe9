#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bruhat {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds a canonical rational num/den. Throws InvalidInput on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

// "p/q" with q > 0 and gcd 1; integers are written "p/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p/q" or "p".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer lcm_of_denominators(const Rational* first, const Rational* last);

}  // namespace bruhat
