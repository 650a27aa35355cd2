#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibprod/power_series.hpp"
#include "fibprod/sequences.hpp"
#include "oracles.hpp"

using namespace fibprod;

namespace {

RationalSeries series_of(std::vector<long> values) {
  std::vector<Rational> c;
  for (long v : values) c.push_back(Rational(v));
  return RationalSeries(std::move(c));
}

RationalSeries rand_series(std::mt19937_64& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> c;
  for (int i = 0; i <= order; ++i) c.push_back(make_rational(num(rng), den(rng)));
  if (unit_constant) c[0] = 1;
  return RationalSeries(std::move(c));
}

}  // namespace

TEST_CASE("ps_from_sequence") {
  SequenceParams fib11(Rational(1), Rational(1));
  auto u = ps_from_sequence([&](long n) { return fib(fib11, n) / Rational(n); }, 1, 4);
  CHECK(u == RationalSeries({Rational(0), Rational(1), make_rational(1, 2),
                             make_rational(2, 3), make_rational(3, 4)}));
  auto ones = ps_from_sequence([](long) { return Rational(1); }, 0, 2);
  CHECK(ones == series_of({1, 1, 1}));
  auto l = ps_from_sequence([&](long n) { return lucas(fib11, n) / Rational(n); }, 1, 4);
  CHECK(l == RationalSeries({Rational(0), Rational(1), make_rational(3, 2),
                             make_rational(4, 3), make_rational(7, 4)}));
}

TEST_CASE("mul and div basics") {
  CHECK(ps_mul(series_of({0, 1, 1}), series_of({2, -1, 0})) == series_of({0, 2, 1}));

  auto one = ps_polynomial<Rational>({Rational(1)}, 6);
  auto den = ps_polynomial<Rational>({Rational(1), Rational(-1), Rational(-1)}, 6);
  CHECK(ps_div(one, den) == series_of({1, 1, 2, 3, 5, 8, 13}));

  auto u = series_of({3, -2, 5});
  CHECK(ps_add(u, ps_polynomial<Rational>({Rational(0)}, 2)) == u);

  CHECK_THROWS_AS(ps_div(one, series_of({0, 1})), error);
}

TEST_CASE("mismatched orders truncate to the smaller") {
  auto u = series_of({1, 2, 3, 4, 5});
  auto v = series_of({1, 1});
  CHECK(ps_add(u, v).order() == 1);
  CHECK(ps_mul(u, v) == series_of({1, 3}));
}

TEST_CASE("ps_log basics and spec values") {
  CHECK(ps_log(series_of({1, -1, 0, 0})) ==
        RationalSeries({Rational(0), Rational(-1), make_rational(-1, 2), make_rational(-1, 3)}));
  CHECK(ps_log(series_of({1, 0, 0})) == series_of({0, 0, 0}));

  // -log(1 - x - x^2) carries L(n)/n.
  auto p = ps_polynomial<Rational>({Rational(1), Rational(-1), Rational(-1)}, 4);
  CHECK(ps_neg(ps_log(p)) == RationalSeries({Rational(0), Rational(1), make_rational(3, 2),
                                             make_rational(4, 3), make_rational(7, 4)}));

  CHECK_THROWS_AS(ps_log(series_of({2, 1})), error);
}

TEST_CASE("ps_log turns products into sums") {
  std::mt19937_64 rng(808);
  for (int i = 0; i < 60; ++i) {
    auto u = rand_series(rng, 12, true);
    auto v = rand_series(rng, 12, true);
    CHECK(ps_log(ps_mul(u, v)) == ps_add(ps_log(u), ps_log(v)));
  }
}

TEST_CASE("ps_sqrt basics and spec values") {
  auto rad = ps_polynomial<Rational>({Rational(1), Rational(-4), Rational(-16)}, 3);
  CHECK(ps_sqrt(rad) == series_of({1, -2, -10, -20}));

  CHECK(ps_sqrt(ps_polynomial<Rational>({Rational(1)}, 5)) ==
        ps_polynomial<Rational>({Rational(1)}, 5));

  // x^2 (1 + 2x), stated to order 5 so the root is good to order 4.
  auto shifted = ps_polynomial<Rational>({Rational(0), Rational(0), Rational(1), Rational(2)}, 5);
  auto root = ps_sqrt(shifted);
  CHECK(root.order() == 4);
  CHECK(root[0] == 0);
  CHECK(root[1] == 1);
  CHECK(root[2] == 1);
  CHECK(root[3] == make_rational(-1, 2));

  CHECK_THROWS_AS(ps_sqrt(series_of({0, 1, 1})), error);   // odd valuation
  CHECK_THROWS_AS(ps_sqrt(series_of({5, 1, 1})), error);   // 5 is not a rational square
}

TEST_CASE("ps_sqrt squares back to the input") {
  std::mt19937_64 rng(31415);
  int done = 0;
  while (done < 200) {
    auto u = rand_series(rng, 10, false);
    std::uniform_int_distribution<long> lead(1, 6);
    long l = lead(rng);
    u.c[0] = Rational(l * l);
    auto root = ps_sqrt(u);
    CHECK(ps_mul(root, root) == u);
    CHECK(root[0] == l);  // principal branch
    ++done;
  }
}

TEST_CASE("ps_integrate and ps_xdx") {
  auto den = ps_polynomial<Rational>({Rational(1), Rational(-1), Rational(-1)}, 5);
  auto inv = ps_div(ps_polynomial<Rational>({Rational(1)}, 5), den);
  CHECK(ps_integrate(inv) ==
        RationalSeries({Rational(0), Rational(1), make_rational(1, 2), make_rational(2, 3),
                        make_rational(3, 4), Rational(1)}));
  CHECK(ps_integrate(series_of({1, 0, 0})) == series_of({0, 1, 0}));
  CHECK(ps_integrate(series_of({0, 2, 0})) == series_of({0, 0, 1}));

  CHECK(ps_xdx(series_of({0, 1, 1, 2})) == series_of({0, 1, 2, 6}));
  CHECK(ps_xdx(series_of({7, 0, 0})) == series_of({0, 0, 0}));

  // Fundamental-theorem check: x d/dx of the integral shifts back.
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 50; ++i) {
    auto u = rand_series(rng, 9, false);
    auto back = ps_xdx(ps_integrate(u));
    for (int n = 1; n <= 9; ++n) CHECK(back[n] == u[n - 1]);
  }
}

TEST_CASE("div inverts mul for unit-constant divisors") {
  std::mt19937_64 rng(271828);
  for (int i = 0; i < 100; ++i) {
    auto u = rand_series(rng, 10, false);
    auto v = rand_series(rng, 10, true);
    CHECK(ps_div(ps_mul(u, v), v) == u);
  }
}

TEST_CASE("shift up and down") {
  auto u = series_of({1, 2, 3});
  CHECK(ps_shift_up(u, 2) == series_of({0, 0, 1, 2, 3}));
  CHECK(ps_shift_down(series_of({0, 0, 1, 2, 3}), 2) == u);
  CHECK_THROWS_AS(ps_shift_down(series_of({0, 1, 2}), 2), error);
}

TEST_CASE("generating-function consistency with term computation") {
  for (auto [a, b] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 2L}, {3L, 1L}, {1L, -1L}, {1L, -2L}}) {
    SequenceParams p{Rational(a), Rational(b)};
    auto one = ps_polynomial<Rational>({Rational(1)}, 64);
    auto den = ps_polynomial<Rational>({Rational(1), -p.a(), -p.b()}, 64);
    auto inv = ps_div(one, den);
    for (int n = 0; n <= 64; ++n) CHECK(inv[n] == fib(p, n + 1));
  }
}

TEST_CASE("quad-extension series collapse") {
  Rational d(5);
  // (1 + sqrt5 x)(1 - sqrt5 x) = 1 - 5x^2: radical parts cancel.
  QuadSeries u = ps_polynomial<QuadExt>(
      {QuadExt::from_rational(Rational(1), d), QuadExt::sqrt_d(d)}, 4);
  QuadSeries v = ps_polynomial<QuadExt>(
      {QuadExt::from_rational(Rational(1), d), -QuadExt::sqrt_d(d)}, 4);
  auto collapsed = ps_to_rational(ps_mul(u, v));
  CHECK(collapsed == series_of({1, 0, -5, 0, 0}));

  // Pure-rational input passes through unchanged.
  auto lifted = ps_lift(series_of({1, 2, 3}), d);
  CHECK(ps_to_rational(lifted) == series_of({1, 2, 3}));

  // A surviving radical component is a hard error.
  CHECK_THROWS_AS(ps_to_rational(u), error);
}
