#pragma once

#include <mpfr.h>

#include <functional>
#include <string>

#include "fibprod/quadext.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

// Outward-rounded interval [lo, hi] over MPFR. Every operation rounds lo
// down and hi up, so the true real result of the exact operation on any
// enclosed reals stays enclosed.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec = 128);
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(RealInterval o) noexcept;
  ~RealInterval();

  static RealInterval from(const Rational& q, mpfr_prec_t prec);
  static RealInterval from_long(long v, mpfr_prec_t prec);
  // [lo, hi] from two exact rationals, lo <= hi.
  static RealInterval hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  RealInterval operator+(const RealInterval& o) const;
  RealInterval operator-(const RealInterval& o) const;
  RealInterval operator*(const RealInterval& o) const;
  RealInterval operator/(const RealInterval& o) const;  // errc::domain if o spans 0
  RealInterval operator-() const;
  RealInterval sqrt() const;  // errc::domain if lo < 0
  RealInterval log() const;   // errc::domain if lo <= 0
  RealInterval abs() const;

  bool contains_zero() const;
  // Certified: true only if hi - lo (rounded up) <= eps.
  bool width_at_most(const Rational& eps) const;
  Rational lower_rational() const;  // exact
  Rational upper_rational() const;
  Rational midpoint_rational() const;

  // Midpoint rendered with `digits` decimals, round-to-nearest.
  std::string decimal(int digits) const;

 private:
  RealInterval make(mpfr_prec_t prec) const;

  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

// A real value certified to `digits` decimals: the enclosing interval has
// width <= 10^-digits, so the printed midpoint differs from the true value
// by at most one unit in the last digit.
class BigFloat {
 public:
  BigFloat(RealInterval iv, int digits);  // errc::precision if too wide

  int digits() const { return digits_; }
  const RealInterval& interval() const { return iv_; }
  std::string str() const { return iv_.decimal(digits_); }

 private:
  RealInterval iv_;
  int digits_;
};

// Runs `eval` at increasing working precision until the interval it returns
// is certified to `digits` decimals.
BigFloat certify_to_digits(const std::function<RealInterval(mpfr_prec_t)>& eval, int digits);

// |result - (p + q sqrt(d))| <= 10^-digits; d < 0 is a domain error.
BigFloat quad_approximate(const QuadExt& s, int digits);

// |result - ln(x)| <= 10^-digits for x > 0. Fails with errc::precision when
// the input interval is too wide to certify that many digits.
BigFloat bigfloat_log(const BigFloat& x, int digits);

BigFloat bigfloat_from_rational(const Rational& q, int digits);

}  // namespace fibprod
