#pragma once

#include <map>
#include <string>
#include <utility>

#include "fibprod/rational.hpp"

namespace fibprod {

// Integer polynomial in the two recurrence parameters, sum of c_ij a^i b^j.
// Zero coefficients are never stored.
class BivariatePoly {
 public:
  BivariatePoly() = default;

  static BivariatePoly constant(Integer c);
  static BivariatePoly var_a();
  static BivariatePoly var_b();

  bool is_zero() const { return terms_.empty(); }

  BivariatePoly operator-() const;
  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly pow(unsigned long e) const;

  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

  Rational eval(const Rational& a, const Rational& b) const;

  // Human-readable form like "a^3 + 2*a*b", graded-lex ordered.
  std::string str() const;

 private:
  void add_term(int i, int j, const Integer& c);

  // (exponent of a, exponent of b) -> coefficient
  std::map<std::pair<int, int>, Integer> terms_;
};

}  // namespace fibprod
