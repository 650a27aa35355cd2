#include "fibprod/power_series.hpp"

namespace fibprod {

RationalSeries ps_from_sequence(const std::function<Rational(long)>& f, long start, int order) {
  if (order < 0) fail(errc::domain, "series needs order >= 0");
  if (start < 0) fail(errc::domain, "sequence start must be >= 0");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  for (long n = start; n <= order; ++n) c[static_cast<size_t>(n)] = f(n);
  return RationalSeries(std::move(c));
}

RationalSeries ps_to_rational(const QuadSeries& u) {
  std::vector<Rational> c;
  c.reserve(u.c.size());
  for (int i = 0; i <= u.order(); ++i) {
    QuadExt norm = quad_normalize(u[i]);
    if (!norm.is_rational())
      fail(errc::cancellation, "sqrt component survived at coefficient " + std::to_string(i) +
                                   ": " + norm.str());
    c.push_back(norm.p());
  }
  return RationalSeries(std::move(c));
}

QuadSeries ps_lift(const RationalSeries& u, const Rational& d) {
  std::vector<QuadExt> c;
  c.reserve(u.c.size());
  for (const Rational& x : u.c) c.push_back(QuadExt::from_rational(x, d));
  return QuadSeries(std::move(c));
}

}  // namespace fibprod
