#include "fibprod/quadext.hpp"

#include <utility>

namespace fibprod {

QuadExt::QuadExt(Rational p, Rational q, Rational d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_ != 0) {
    if (auto root = exact_sqrt(d_)) {
      p_ += q_ * *root;
      q_ = 0;
    }
  }
}

bool QuadExt::is_rational() const { return q_ == 0; }

Rational QuadExt::rational_value() const {
  if (q_ != 0)
    fail(errc::cancellation, "element " + str() + " has a nonzero sqrt component");
  return p_;
}

void QuadExt::check_same_context(const QuadExt& o) const {
  if (d_ != o.d_)
    fail(errc::domain, "mixed quadratic contexts: sqrt(" + to_string(d_) + ") vs sqrt(" +
                           to_string(o.d_) + ")");
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  check_same_context(o);
  return {p_ + o.p_, q_ + o.q_, d_};
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
  check_same_context(o);
  return {p_ - o.p_, q_ - o.q_, d_};
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  check_same_context(o);
  return {p_ * o.p_ + q_ * o.q_ * d_, p_ * o.q_ + o.p_ * q_, d_};
}

QuadExt QuadExt::inverse() const {
  // Constructor normalization guarantees q != 0 only with irrational sqrt(d),
  // so norm == 0 here really means the value is zero.
  if (q_ == 0) {
    if (p_ == 0) fail(errc::domain, "inverse of zero");
    return {Rational(1) / p_, Rational(0), d_};
  }
  Rational n = norm();
  if (n == 0) fail(errc::domain, "inverse of zero");
  return {p_ / n, -q_ / n, d_};
}

QuadExt QuadExt::operator/(const QuadExt& o) const { return *this * o.inverse(); }

bool QuadExt::operator==(const QuadExt& o) const {
  check_same_context(o);
  return p_ == o.p_ && q_ == o.q_;
}

int QuadExt::sign() const {
  if (d_ < 0) fail(errc::domain, "sign of an element over negative discriminant");
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2 d; the larger magnitude wins.
  Rational lhs = p_ * p_;
  Rational rhs = q_ * q_ * d_;
  int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return cmp == 0 ? 0 : cmp * sp;
}

std::string QuadExt::str() const {
  if (q_ == 0) return to_string(p_);
  std::string s = to_string(p_);
  s += (q_ > 0 ? " + " : " - ");
  Rational aq = abs(q_);
  if (aq != 1) s += to_string(aq) + "*";
  s += "sqrt(" + to_string(d_) + ")";
  return s;
}

QuadExt quad_normalize(const QuadExt& s) {
  // The constructor already folds perfect-square discriminants.
  return s;
}

}  // namespace fibprod
