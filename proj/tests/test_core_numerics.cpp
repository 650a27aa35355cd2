#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibprod/bigfloat.hpp"
#include "fibprod/quadext.hpp"
#include "fibprod/rational.hpp"
#include "oracles.hpp"

using namespace fibprod;

namespace {
Rational rand_rational(std::mt19937_64& rng, long span = 20) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return make_rational(num(rng), den(rng));
}
}  // namespace

TEST_CASE("rational parse/format round trip") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(make_rational(8, 2)) == "4");
  CHECK(parse_rational("25/12") == make_rational(25, 12));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), error);
  CHECK_THROWS_AS(parse_rational("x/2"), error);
  CHECK_THROWS_AS(parse_rational("3/"), error);

  std::mt19937_64 rng(12345);
  for (int i = 0; i < 500; ++i) {
    Rational x = rand_rational(rng, 1000);
    CHECK(parse_rational(to_string(x)) == x);
  }
}

TEST_CASE("rational arithmetic is a field") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    Rational x = rand_rational(rng, 50);
    if (x == 0) continue;
    CHECK(x * (Rational(1) / x) == 1);
  }
}

TEST_CASE("exact_sqrt recognizes rational squares") {
  CHECK(*exact_sqrt(Rational(4)) == 2);
  CHECK(*exact_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK(!exact_sqrt(Rational(5)).has_value());
  CHECK(!exact_sqrt(Rational(-4)).has_value());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational x = rand_rational(rng, 40);
    auto r = exact_sqrt(x * x);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x * x);
  }
}

TEST_CASE("pow_rational with negative exponents") {
  CHECK(pow_rational(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(pow_rational(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow_rational(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow_rational(Rational(0), -1), error);
}

TEST_CASE("quad_normalize folds perfect-square discriminants") {
  QuadExt s1(Rational(1), Rational(1), Rational(4));
  CHECK(quad_normalize(s1).p() == 3);
  CHECK(quad_normalize(s1).q() == 0);

  QuadExt s2(Rational(1), Rational(1), Rational(5));
  CHECK(quad_normalize(s2).p() == 1);
  CHECK(quad_normalize(s2).q() == 1);

  QuadExt s3(Rational(0), Rational(2), make_rational(9, 4));
  CHECK(quad_normalize(s3).p() == 3);
  CHECK(quad_normalize(s3).q() == 0);
}

TEST_CASE("quad arithmetic: commutative, associative, conjugate norm") {
  std::mt19937_64 rng(2024);
  Rational d(5);
  for (int i = 0; i < 300; ++i) {
    QuadExt x(rand_rational(rng), rand_rational(rng), d);
    QuadExt y(rand_rational(rng), rand_rational(rng), d);
    QuadExt z(rand_rational(rng), rand_rational(rng), d);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.conjugate()).p() == x.norm());
    CHECK((x * x.conjugate()).q() == 0);
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt::from_rational(Rational(1), d));
  }
}

TEST_CASE("quad context mixing is rejected") {
  QuadExt a(Rational(1), Rational(1), Rational(5));
  QuadExt b(Rational(1), Rational(1), Rational(8));
  CHECK_THROWS_AS(a + b, error);
  CHECK_THROWS_AS(a * b, error);
}

TEST_CASE("quad sign is exact") {
  // 3 - sqrt(5) > 0, 2 - sqrt(5) < 0, and the zero element.
  CHECK(QuadExt(Rational(3), Rational(-1), Rational(5)).sign() == 1);
  CHECK(QuadExt(Rational(2), Rational(-1), Rational(5)).sign() == -1);
  CHECK(QuadExt(Rational(0), Rational(0), Rational(5)).sign() == 0);
  CHECK(QuadExt(Rational(-3), Rational(2), Rational(5)).sign() == 1);  // 2 sqrt5 = 4.47 > 3
}

TEST_CASE("quad_approximate certifies digits") {
  Rational five(5);
  BigFloat root5 = quad_approximate(QuadExt(Rational(0), Rational(1), five), 7);
  CHECK(root5.str() == "2.2360680");
  // Exact containment check: the printed decimal is within 10^-7 of sqrt 5.
  CHECK(oracles::within_of_sqrt(oracles::parse_decimal(root5.str()), five,
                                oracles::pow10(-7)));

  BigFloat two = quad_approximate(QuadExt(Rational(2), Rational(0), five), 3);
  CHECK(two.str() == "2.000");

  BigFloat three_plus = quad_approximate(QuadExt(Rational(3), Rational(1), five), 6);
  CHECK(three_plus.str() == "5.236068");

  CHECK_THROWS_AS(quad_approximate(QuadExt(Rational(0), Rational(1), Rational(-3)), 5), error);
}

TEST_CASE("quad_approximate at doubled digits stays within the first bound") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 40; ++i) {
    QuadExt s(rand_rational(rng), rand_rational(rng), Rational(7));
    for (int digits : {4, 6, 8}) {
      BigFloat coarse = quad_approximate(s, digits);
      BigFloat fine = quad_approximate(s, 2 * digits);
      Rational delta(abs(oracles::parse_decimal(coarse.str()) -
                         oracles::parse_decimal(fine.str())));
      // Both are within their own bounds of the same real, so they differ by
      // at most the coarse bound plus the fine one.
      CHECK(delta <= oracles::pow10(-digits) + oracles::pow10(-2 * digits));
    }
  }
}

TEST_CASE("bigfloat_log against the exact atanh enclosure") {
  BigFloat one = bigfloat_from_rational(Rational(1), 10);
  CHECK(bigfloat_log(one, 10).str() == "0.0000000000");

  BigFloat four = bigfloat_from_rational(Rational(4), 6);
  BigFloat log4 = bigfloat_log(four, 6);
  CHECK(log4.str() == "1.386294");
  CHECK(oracles::within_of_log(oracles::parse_decimal(log4.str()), Rational(4),
                               oracles::pow10(-6)));

  // ln of the decimal 6.854102 (the constant's 7-digit truncation).
  Rational x = oracles::parse_decimal("6.854102");
  BigFloat xb = bigfloat_from_rational(x, 8);
  BigFloat lx = bigfloat_log(xb, 5);
  CHECK(lx.str() == "1.92485");
  CHECK(oracles::within_of_log(oracles::parse_decimal(lx.str()), x, oracles::pow10(-5), 128));

  CHECK_THROWS_AS(bigfloat_log(bigfloat_from_rational(Rational(0), 5), 5), error);
  CHECK_THROWS_AS(bigfloat_log(bigfloat_from_rational(Rational(-2), 5), 5), error);
}

TEST_CASE("interval arithmetic encloses exact rational results") {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 200; ++i) {
    Rational x = rand_rational(rng, 30);
    Rational y = rand_rational(rng, 30);
    RealInterval xi = RealInterval::from(x, 64);
    RealInterval yi = RealInterval::from(y, 64);
    RealInterval sum = xi + yi;
    RealInterval prod = xi * yi;
    CHECK(sum.lower_rational() <= x + y);
    CHECK(sum.upper_rational() >= x + y);
    CHECK(prod.lower_rational() <= x * y);
    CHECK(prod.upper_rational() >= x * y);
    if (y != 0) {
      RealInterval quot = xi / yi;
      CHECK(quot.lower_rational() <= x / y);
      CHECK(quot.upper_rational() >= x / y);
    }
  }
  CHECK_THROWS_AS(RealInterval::from(Rational(1), 64) / RealInterval::from(Rational(0), 64),
                  error);
  CHECK_THROWS_AS(RealInterval::from(Rational(-1), 64).sqrt(), error);
}
