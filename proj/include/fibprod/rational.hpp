#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "fibprod/errors.hpp"

namespace fibprod {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize; every construction from a raw
// numerator/denominator pair goes through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(errc::domain, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& z);
// "p/q" when q != 1, bare "p" otherwise.
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with an optional leading sign. Throws errc::parse.
Rational parse_rational(const std::string& text);

// base^exp with negative exponents inverting; 0^negative is a domain error.
Rational pow_rational(const Rational& base, long exp);

// Exact square root when the value is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace fibprod
