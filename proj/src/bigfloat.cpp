#include "fibprod/bigfloat.hpp"

#include <algorithm>
#include <utility>

namespace fibprod {

namespace {
constexpr mpfr_prec_t kMaxPrecision = 1 << 20;

Rational pow10_rational(int digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits < 0 ? -digits : digits));
  return digits >= 0 ? make_rational(Integer(1), p) : Rational(p);
}
}  // namespace

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(RealInterval o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::make(mpfr_prec_t prec) const { return RealInterval(prec); }

RealInterval RealInterval::from(const Rational& q, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_long(long v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo = min of the four products rounded down, hi = max rounded up.
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
  if (o.contains_zero()) fail(errc::domain, "interval division by a range containing zero");
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::operator-() const {
  RealInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) fail(errc::domain, "sqrt of an interval reaching below zero");
  RealInterval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::log() const {
  if (mpfr_sgn(lo_) <= 0) fail(errc::domain, "log of an interval reaching zero or below");
  RealInterval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::abs() const {
  RealInterval r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool RealInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool RealInterval::width_at_most(const Rational& eps) const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  bool ok = mpfr_cmp_q(w, eps.get_mpq_t()) <= 0;
  mpfr_clear(w);
  return ok;
}

Rational RealInterval::lower_rational() const {
  if (!mpfr_number_p(lo_)) fail(errc::precision, "interval bound is not finite");
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, lo_);
  Rational r(q);
  mpq_clear(q);
  return r;
}

Rational RealInterval::upper_rational() const {
  if (!mpfr_number_p(hi_)) fail(errc::precision, "interval bound is not finite");
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, hi_);
  Rational r(q);
  mpq_clear(q);
  return r;
}

Rational RealInterval::midpoint_rational() const {
  return (lower_rational() + upper_rational()) / 2;
}

std::string RealInterval::decimal(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, prec_ + 8);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*R*f", digits, MPFR_RNDN, mid);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(mid);
  // A midpoint rounding to -0.000... is plain zero.
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') out.erase(0, 1);
  return out;
}

BigFloat::BigFloat(RealInterval iv, int digits) : iv_(std::move(iv)), digits_(digits) {
  if (digits < 1) fail(errc::domain, "digits must be positive");
  if (!iv_.width_at_most(pow10_rational(digits)))
    fail(errc::precision, "interval wider than the requested digit budget");
}

BigFloat certify_to_digits(const std::function<RealInterval(mpfr_prec_t)>& eval, int digits) {
  if (digits < 1) fail(errc::domain, "digits must be positive");
  Rational eps = pow10_rational(digits);
  for (mpfr_prec_t prec = 128; prec <= kMaxPrecision; prec *= 2) {
    RealInterval iv = eval(prec);
    if (iv.width_at_most(eps)) return BigFloat(std::move(iv), digits);
  }
  fail(errc::precision, "could not certify the requested number of digits");
}

BigFloat quad_approximate(const QuadExt& s, int digits) {
  if (s.d() < 0) fail(errc::domain, "cannot approximate over a negative discriminant");
  return certify_to_digits(
      [&s](mpfr_prec_t prec) {
        RealInterval p = RealInterval::from(s.p(), prec);
        if (s.q() == 0) return p;
        RealInterval rad = RealInterval::from(s.d(), prec).sqrt();
        return p + RealInterval::from(s.q(), prec) * rad;
      },
      digits);
}

BigFloat bigfloat_log(const BigFloat& x, int digits) {
  return certify_to_digits(
      [&x, digits](mpfr_prec_t prec) {
        // Re-inflate the stored interval to the working precision, then log.
        RealInterval v = RealInterval::hull(x.interval().lower_rational(),
                                            x.interval().upper_rational(), prec);
        (void)digits;
        return v.log();
      },
      digits);
}

BigFloat bigfloat_from_rational(const Rational& q, int digits) {
  return certify_to_digits([&q](mpfr_prec_t prec) { return RealInterval::from(q, prec); },
                           digits);
}

}  // namespace fibprod
