#pragma once

#include <string>

#include "fibprod/rational.hpp"

namespace fibprod {

// Exact element p + q*sqrt(d) of the quadratic extension Q(sqrt(d)).
// One shared d per computation context: combining elements with different d
// is an error, not an implicit field extension. When d is a perfect rational
// square the radical collapses and the constructor folds it into p, so such
// elements always carry q == 0.
class QuadExt {
 public:
  QuadExt(Rational p, Rational q, Rational d);

  static QuadExt from_rational(const Rational& v, const Rational& d) { return {v, Rational(0), d}; }
  static QuadExt sqrt_d(const Rational& d) { return {Rational(0), Rational(1), d}; }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& d() const { return d_; }

  bool is_rational() const;
  // The rational value of a q == 0 element; errc::cancellation otherwise.
  Rational rational_value() const;

  QuadExt conjugate() const { return {p_, -q_, d_}; }
  Rational norm() const { return p_ * p_ - q_ * q_ * d_; }

  QuadExt operator-() const { return {-p_, -q_, d_}; }
  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator/(const QuadExt& o) const;
  QuadExt inverse() const;

  bool operator==(const QuadExt& o) const;
  bool operator!=(const QuadExt& o) const { return !(*this == o); }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  // Exact sign of the real value p + q*sqrt(d); requires d >= 0.
  int sign() const;

  std::string str() const;

 private:
  void check_same_context(const QuadExt& o) const;

  Rational p_, q_, d_;
};

// Folds sqrt(d) into the rational part when d is a perfect square; otherwise
// returns the element unchanged. Idempotent.
QuadExt quad_normalize(const QuadExt& s);

}  // namespace fibprod
