#pragma once

// Test-only oracles. Everything here recomputes expected values through a
// route independent of the library code it checks: plain recurrence
// unrolling, convolution recurrences, and exact rational enclosures for the
// transcendental constants.

#include <string>
#include <vector>

#include "fibprod/rational.hpp"

namespace oracles {

using fibprod::Integer;
using fibprod::Rational;
using fibprod::make_rational;

// F(0..count-1) by direct recurrence unrolling.
inline std::vector<Rational> unroll_fib(const Rational& a, const Rational& b, long count) {
  std::vector<Rational> f{Rational(0), Rational(1)};
  while (static_cast<long>(f.size()) < count) {
    size_t s = f.size();
    f.push_back(a * f[s - 1] + b * f[s - 2]);
  }
  f.resize(static_cast<size_t>(count));
  return f;
}

// L(0..count-1) from the F values, L(0) = 2 and L(n) = F(n+1) + b F(n-1).
inline std::vector<Rational> unroll_lucas(const Rational& a, const Rational& b, long count) {
  std::vector<Rational> f = unroll_fib(a, b, count + 1);
  std::vector<Rational> l;
  l.push_back(Rational(2));
  for (long n = 1; n < count; ++n)
    l.push_back(f[static_cast<size_t>(n + 1)] + b * f[static_cast<size_t>(n - 1)]);
  return l;
}

// Catalan numbers by the convolution recurrence C(n+1) = sum C(i) C(n-i).
inline std::vector<Integer> catalan_by_recurrence(long count) {
  std::vector<Integer> c{Integer(1)};
  while (static_cast<long>(c.size()) < count) {
    Integer next(0);
    size_t n = c.size() - 1;
    for (size_t i = 0; i <= n; ++i) next += c[i] * c[n - i];
    c.push_back(next);
  }
  return c;
}

// Harmonic numbers by direct summation.
inline std::vector<Rational> harmonic_by_sum(long count) {
  std::vector<Rational> h{Rational(0)};
  for (long n = 1; n < count; ++n) h.push_back(h.back() + make_rational(1, n));
  return h;
}

// "p.ddd" (optionally signed) to the exact rational it denotes.
inline Rational parse_decimal(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return fibprod::parse_rational(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Integer num(digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
  return make_rational(num, den);
}

inline Rational pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : make_rational(Integer(1), p);
}

// Exact check that |value - sqrt(x)| <= eps, by squaring: sqrt(x) lies in
// [value-eps, value+eps] iff (value-eps)^2 <= x <= (value+eps)^2 (with a
// nonnegative lower endpoint). No floating point involved.
inline bool within_of_sqrt(const Rational& value, const Rational& x, const Rational& eps) {
  Rational lo = value - eps;
  Rational hi = value + eps;
  if (hi < 0) return false;
  if (lo < 0) lo = 0;
  return lo * lo <= x && x <= hi * hi;
}

// Exact rational enclosure of ln(x) for rational x > 0, via the atanh
// series ln(x) = 2 sum t^(2k+1)/(2k+1) with t = (x-1)/(x+1) and an exact
// geometric tail bound.
struct LogEnclosure {
  Rational lo, hi;
};

inline LogEnclosure log_enclosure(const Rational& x, int terms = 64) {
  if (x <= 0) throw std::invalid_argument("log oracle needs x > 0");
  Rational t = (x - 1) / (x + 1);
  Rational t2 = t * t;
  Rational sum(0);
  Rational power = t;
  for (int k = 0; k < terms; ++k) {
    sum += power / Rational(2 * k + 1);
    power *= t2;
  }
  // |remainder| <= |t|^(2*terms+1) / ((2*terms+1)(1 - t^2))
  Rational abs_power(abs(power));
  Rational tail = abs_power / (Rational(2 * terms + 1) * (1 - t2));
  return LogEnclosure{2 * (sum - tail), 2 * (sum + tail)};
}

inline bool within_of_log(const Rational& value, const Rational& x, const Rational& eps,
                          int terms = 64) {
  LogEnclosure enc = log_enclosure(x, terms);
  return value >= enc.lo - eps && value <= enc.hi + eps;
}

}  // namespace oracles
