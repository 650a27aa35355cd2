#pragma once

#include <functional>
#include <type_traits>
#include <optional>
#include <vector>

#include "fibprod/quadext.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

// Field hooks shared by the two coefficient types. The sample argument
// carries context (the discriminant, for quadratic-extension scalars).
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline QuadExt zero_like(const QuadExt& s) { return QuadExt::from_rational(Rational(0), s.d()); }
inline QuadExt one_like(const QuadExt& s) { return QuadExt::from_rational(Rational(1), s.d()); }

inline Rational invert(const Rational& x) {
  if (x == 0) fail(errc::domain, "inverse of zero");
  return Rational(1) / x;
}
inline QuadExt invert(const QuadExt& x) { return x.inverse(); }

inline bool is_zero_coeff(const Rational& x) { return x == 0; }
inline bool is_zero_coeff(const QuadExt& x) { return x.is_zero(); }

inline Rational scale_by_rational(const Rational& x, const Rational& r) { return x * r; }
inline QuadExt scale_by_rational(const QuadExt& x, const Rational& r) {
  return x * QuadExt::from_rational(r, x.d());
}

// Principal square root of a coefficient when it exists exactly in the field.
// Quadratic-extension scalars are supported only when purely rational.
inline std::optional<Rational> coeff_sqrt(const Rational& x) { return exact_sqrt(x); }
inline std::optional<QuadExt> coeff_sqrt(const QuadExt& x) {
  if (!x.is_rational()) return std::nullopt;
  if (auto r = exact_sqrt(x.p())) return QuadExt::from_rational(*r, x.d());
  return std::nullopt;
}

// Truncated formal power series c0 + c1 x + ... + cN x^N with exact
// coefficients. The order N is explicit and operations on mismatched orders
// truncate to the smaller one; nothing ever promotes an order silently.
template <typename K>
struct TruncSeries {
  std::vector<K> c;

  explicit TruncSeries(std::vector<K> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) fail(errc::domain, "series needs order >= 0");
  }

  int order() const { return static_cast<int>(c.size()) - 1; }
  const K& operator[](int i) const { return c[static_cast<size_t>(i)]; }
  K zero() const { return zero_like(c[0]); }

  // Index of the first nonzero coefficient; the whole (truncated) series
  // being zero reports order+1.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (!is_zero_coeff(c[static_cast<size_t>(i)])) return i;
    return order() + 1;
  }

  bool operator==(const TruncSeries& o) const {
    if (order() != o.order()) return false;
    for (int i = 0; i <= order(); ++i)
      if (!(c[static_cast<size_t>(i)] == o.c[static_cast<size_t>(i)])) return false;
    return true;
  }
};

using RationalSeries = TruncSeries<Rational>;
using QuadSeries = TruncSeries<QuadExt>;

// Exact polynomial of the stated order: listed coefficients, zeros above.
template <typename K>
TruncSeries<K> ps_polynomial(std::vector<K> coeffs, int order) {
  if (order < 0) fail(errc::domain, "series needs order >= 0");
  if (static_cast<int>(coeffs.size()) - 1 > order)
    fail(errc::domain, "polynomial degree exceeds requested order");
  if (coeffs.empty()) fail(errc::domain, "polynomial needs at least one coefficient");
  K z = zero_like(coeffs[0]);
  coeffs.resize(static_cast<size_t>(order) + 1, z);
  return TruncSeries<K>(std::move(coeffs));
}

RationalSeries ps_from_sequence(const std::function<Rational(long)>& f, long start, int order);

template <typename K>
TruncSeries<K> ps_truncate(const TruncSeries<K>& u, int order) {
  if (order < 0 || order > u.order()) fail(errc::domain, "truncation order out of range");
  return TruncSeries<K>(std::vector<K>(u.c.begin(), u.c.begin() + order + 1));
}

template <typename K>
TruncSeries<K> ps_add(const TruncSeries<K>& u, const TruncSeries<K>& v) {
  int n = std::min(u.order(), v.order());
  std::vector<K> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c.push_back(u[i] + v[i]);
  return TruncSeries<K>(std::move(c));
}

template <typename K>
TruncSeries<K> ps_sub(const TruncSeries<K>& u, const TruncSeries<K>& v) {
  int n = std::min(u.order(), v.order());
  std::vector<K> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c.push_back(u[i] - v[i]);
  return TruncSeries<K>(std::move(c));
}

template <typename K>
TruncSeries<K> ps_neg(const TruncSeries<K>& u) {
  std::vector<K> c;
  c.reserve(u.c.size());
  for (const K& x : u.c) c.push_back(-x);
  return TruncSeries<K>(std::move(c));
}

// Cauchy product truncated at the smaller order.
template <typename K>
TruncSeries<K> ps_mul(const TruncSeries<K>& u, const TruncSeries<K>& v) {
  int n = std::min(u.order(), v.order());
  std::vector<K> c(static_cast<size_t>(n) + 1, u.zero());
  for (int i = 0; i <= n; ++i)
    for (int k = i; k <= n; ++k) c[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] + u[i] * v[k - i];
  return TruncSeries<K>(std::move(c));
}

// The scalar parameter is non-deduced so GMP expression templates convert.
template <typename K>
TruncSeries<K> ps_scale(const TruncSeries<K>& u, const std::type_identity_t<K>& s) {
  std::vector<K> c;
  c.reserve(u.c.size());
  for (const K& x : u.c) c.push_back(x * s);
  return TruncSeries<K>(std::move(c));
}

// Long division; the divisor needs an invertible constant term. A zero
// constant term is a valuation error: shift the divisor down first.
template <typename K>
TruncSeries<K> ps_div(const TruncSeries<K>& u, const TruncSeries<K>& v) {
  if (is_zero_coeff(v[0]))
    fail(errc::valuation, "series division needs a unit constant term; shift first");
  int n = std::min(u.order(), v.order());
  K v0_inv = invert(v[0]);
  std::vector<K> w(static_cast<size_t>(n) + 1, u.zero());
  for (int k = 0; k <= n; ++k) {
    K acc = u[k];
    for (int i = 1; i <= k; ++i) acc = acc - v[i] * w[static_cast<size_t>(k - i)];
    w[static_cast<size_t>(k)] = acc * v0_inv;
  }
  return TruncSeries<K>(std::move(w));
}

// ln(u) for unit constant term, via (ln u)' = u'/u integrated termwise.
template <typename K>
TruncSeries<K> ps_log(const TruncSeries<K>& u) {
  if (!(u[0] == one_like(u[0])))
    fail(errc::domain, "series log needs constant term exactly 1");
  int n = u.order();
  std::vector<K> out(static_cast<size_t>(n) + 1, u.zero());
  // out[k] = (u[k]*k - sum_{i=1}^{k-1} i*out[i]*u[k-i]) / (k*u[0]); u[0]=1.
  for (int k = 1; k <= n; ++k) {
    K acc = scale_by_rational(u[k], Rational(k));
    for (int i = 1; i < k; ++i)
      acc = acc - scale_by_rational(out[static_cast<size_t>(i)] * u[k - i], Rational(i));
    out[static_cast<size_t>(k)] = scale_by_rational(acc, make_rational(1, k));
  }
  return TruncSeries<K>(std::move(out));
}

// Multiply by x^k: coefficients shift up, order grows by k (the new low
// coefficients are exact zeros, so nothing is invented).
template <typename K>
TruncSeries<K> ps_shift_up(const TruncSeries<K>& u, int k) {
  if (k < 0) fail(errc::domain, "shift amount must be >= 0");
  std::vector<K> c(static_cast<size_t>(k), u.zero());
  c.insert(c.end(), u.c.begin(), u.c.end());
  return TruncSeries<K>(std::move(c));
}

// Divide by x^k; the first k coefficients must be exactly zero.
template <typename K>
TruncSeries<K> ps_shift_down(const TruncSeries<K>& u, int k) {
  if (k < 0) fail(errc::domain, "shift amount must be >= 0");
  if (u.order() < k) fail(errc::valuation, "series too short to shift down");
  for (int i = 0; i < k; ++i)
    if (!is_zero_coeff(u[i])) fail(errc::valuation, "shift down across a nonzero coefficient");
  return TruncSeries<K>(std::vector<K>(u.c.begin() + k, u.c.end()));
}

// Square root: even valuation, leading coefficient with an exact field
// square root (principal branch). Result order is N - v/2, the range the
// input data determines.
template <typename K>
TruncSeries<K> ps_sqrt(const TruncSeries<K>& u) {
  int v = u.valuation();
  if (v > u.order()) {
    // Zero to the stated order; its root is zero at the same order.
    return TruncSeries<K>(std::vector<K>(u.c.size(), u.zero()));
  }
  if (v % 2 != 0) fail(errc::valuation, "series sqrt needs even valuation");
  auto s0 = coeff_sqrt(u[v]);
  if (!s0) fail(errc::domain, "leading coefficient has no exact square root in the field");
  TruncSeries<K> unit = ps_shift_down(u, v);        // order N - v
  int n = unit.order();
  K lead_inv = invert(unit[0]);
  // (1 + y)^2 = unit/lead: y_k = (h_k - sum_{i=1}^{k-1} y_i y_{k-i}) / 2.
  std::vector<K> y(static_cast<size_t>(n) + 1, u.zero());
  y[0] = one_like(u[0]);
  for (int k = 1; k <= n; ++k) {
    K acc = unit[k] * lead_inv;
    for (int i = 1; i < k; ++i) acc = acc - y[static_cast<size_t>(i)] * y[static_cast<size_t>(k - i)];
    y[static_cast<size_t>(k)] = scale_by_rational(acc, make_rational(1, 2));
  }
  TruncSeries<K> root = ps_scale(TruncSeries<K>(std::move(y)), *s0);
  return ps_shift_up(root, v / 2);  // order (N - v) + v/2 = N - v/2
}

// Antiderivative with zero constant term: out_k = c_{k-1}/k. Keeps the
// input order, so the input's top coefficient is dropped.
template <typename K>
TruncSeries<K> ps_integrate(const TruncSeries<K>& u) {
  int n = u.order();
  std::vector<K> out(static_cast<size_t>(n) + 1, u.zero());
  for (int k = 1; k <= n; ++k)
    out[static_cast<size_t>(k)] = scale_by_rational(u[k - 1], make_rational(1, k));
  return TruncSeries<K>(std::move(out));
}

// x d/dx: coefficient k becomes k*c_k.
template <typename K>
TruncSeries<K> ps_xdx(const TruncSeries<K>& u) {
  int n = u.order();
  std::vector<K> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(scale_by_rational(u[k], Rational(k)));
  return TruncSeries<K>(std::move(out));
}

// Collapse a quadratic-extension series whose radical parts must all have
// cancelled; any residue is a hard error, not a warning.
RationalSeries ps_to_rational(const QuadSeries& u);

QuadSeries ps_lift(const RationalSeries& u, const Rational& d);

template <typename K>
bool ps_prefix_equal(const TruncSeries<K>& u, const TruncSeries<K>& v, int upto) {
  if (u.order() < upto || v.order() < upto)
    fail(errc::domain, "prefix comparison beyond stated order");
  for (int i = 0; i <= upto; ++i)
    if (!(u[i] == v[i])) return false;
  return true;
}

}  // namespace fibprod
