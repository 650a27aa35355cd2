#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "fibprod/sequences.hpp"
#include "oracles.hpp"

using namespace fibprod;

TEST_CASE("params invariants rejected at construction") {
  CHECK_THROWS_AS(SequenceParams(Rational(1), Rational(0)), error);
  // a^2 + 4b = 0, e.g. a=2, b=-1.
  CHECK_THROWS_AS(SequenceParams(Rational(2), Rational(-1)), error);
  CHECK_THROWS_AS(SequenceParams(make_rational(1), make_rational(-1, 4)), error);
}

TEST_CASE("fib matches direct unrolling and extends backward") {
  SequenceParams fib11(Rational(1), Rational(1));
  CHECK(fib(fib11, 6) == 8);
  CHECK(fib(fib11, 0) == 0);
  CHECK(fib(fib11, -1) == 1);

  SequenceParams pell(Rational(2), Rational(1));
  auto expect = oracles::unroll_fib(Rational(2), Rational(1), 64);
  for (long n = 0; n < 64; ++n) CHECK(fib(pell, n) == expect[static_cast<size_t>(n)]);

  // Backward terms satisfy the forward recurrence too.
  SequenceParams p(make_rational(3, 2), make_rational(-2, 3));
  for (long n = -20; n <= 20; ++n)
    CHECK(fib(p, n) == p.a() * fib(p, n - 1) + p.b() * fib(p, n - 2));
  CHECK(fib(p, -1) == Rational(1) / p.b());
}

TEST_CASE("fib_fast equals fib for random parameters") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> small(-5, 5);
  int tested = 0;
  while (tested < 60) {
    Rational a(small(rng));
    Rational b(small(rng));
    if (b == 0 || a * a + 4 * b == 0) continue;
    ++tested;
    SequenceParams p(a, b);
    for (long n : {0L, 1L, 2L, 7L, 33L, 64L, 129L, 256L})
      CHECK(fib_fast(p, n) == fib(p, n));
  }
  SequenceParams fib11(Rational(1), Rational(1));
  CHECK(fib_fast(fib11, 64) == Rational(Integer("10610209857723")));
  SequenceParams pell(Rational(2), Rational(1));
  CHECK(fib_fast(pell, 10) == 2378);
  CHECK(fib_fast(pell, 1) == 1);
  CHECK_THROWS_AS(fib_fast(fib11, -1), error);
}

TEST_CASE("lucas values and consistency with the defining relation") {
  SequenceParams fib11(Rational(1), Rational(1));
  CHECK(lucas(fib11, 0) == 2);
  CHECK(lucas(fib11, 4) == 7);
  SequenceParams pell(Rational(2), Rational(1));
  CHECK(lucas(pell, 2) == 6);

  SequenceParams p(make_rational(1), make_rational(2));
  for (long n = 0; n <= 64; ++n)
    CHECK(lucas(p, n) == fib(p, n + 1) + p.b() * fib(p, n - 1));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(4) == make_rational(25, 12));
  CHECK(harmonic(6) == make_rational(49, 20));
  auto expect = oracles::harmonic_by_sum(100);
  for (long n = 0; n < 100; ++n) CHECK(harmonic(n) == expect[static_cast<size_t>(n)]);
}

TEST_CASE("catalan: binomial route equals convolution recurrence") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(5) == 42);
  CHECK(catalan(10) == 16796);
  auto expect = oracles::catalan_by_recurrence(129);
  for (long n = 0; n <= 128; ++n) CHECK(catalan(n) == expect[static_cast<size_t>(n)]);
}

TEST_CASE("eulerian triangle: symmetry, row sums, boundary") {
  CHECK(eulerian_first(0, 0) == 1);
  CHECK(eulerian_first(2, 1) == 4);
  CHECK(eulerian_first(3, 0) == 1);
  CHECK(eulerian_first(2, 5) == 0);
  CHECK(eulerian_first(2, -1) == 0);
  for (long n = 0; n <= 20; ++n) {
    Integer sum(0);
    for (long k = 0; k <= n; ++k) {
      CHECK(eulerian_first(n, k) == eulerian_first(n, n - k));
      sum += eulerian_first(n, k);
    }
    CHECK(sum == factorial(static_cast<unsigned long>(n) + 1));
  }
}

TEST_CASE("convolution: direct equals closed form") {
  SequenceParams fib11(Rational(1), Rational(1));
  CHECK(fib_convolution(fib11, 4, ConvMode::direct) == 5);
  CHECK(fib_convolution(fib11, 4, ConvMode::closed) == 5);
  CHECK(fib_convolution(fib11, 0, ConvMode::direct) == 0);

  for (auto [a, b] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 2L}, {3L, 1L}, {1L, -1L}, {1L, -2L}}) {
    SequenceParams p{Rational(a), Rational(b)};
    for (long n = 0; n <= 40; ++n)
      CHECK(fib_convolution(p, n, ConvMode::direct) == fib_convolution(p, n, ConvMode::closed));
  }
}

TEST_CASE("multisection terms") {
  SequenceParams pell(Rational(2), Rational(1));
  CHECK(multisection_term(pell, 2, 0, 2, SeqFamily::fib) == 12);
  SequenceParams jac(Rational(1), Rational(2));
  CHECK(multisection_term(jac, 3, 0, 2, SeqFamily::fib) == 21);
  CHECK(multisection_term(jac, 5, 0, 0, SeqFamily::fib) == 0);
}

TEST_CASE("symbolic F polynomials") {
  BivariatePoly a = BivariatePoly::var_a();
  BivariatePoly b = BivariatePoly::var_b();
  CHECK(fib_symbolic(1) == BivariatePoly::constant(1));
  CHECK(fib_symbolic(3) == a * a + b);
  CHECK(fib_symbolic(4) == a * a * a + BivariatePoly::constant(2) * a * b);
  CHECK(fib_symbolic(3).str() == "a^2 + b");
  CHECK(fib_symbolic(4).str() == "a^3 + 2*a*b");

  SequenceParams fib11(Rational(1), Rational(1));
  for (long n = 0; n <= 64; ++n)
    CHECK(fib_symbolic(n).eval(Rational(1), Rational(1)) == fib(fib11, n));

  for (auto [av, bv] : {std::pair{2L, 1L}, {1L, 2L}, {3L, 1L}}) {
    SequenceParams p{Rational(av), Rational(bv)};
    for (long n = 0; n <= 32; ++n)
      CHECK(fib_symbolic(n).eval(Rational(av), Rational(bv)) == fib(p, n));
  }
}

TEST_CASE("lucas_symbolic stays in Z[a,b] and evaluates correctly") {
  CHECK(lucas_symbolic(0) == BivariatePoly::constant(2));
  CHECK(lucas_symbolic(1) == BivariatePoly::var_a());
  SequenceParams p(Rational(3), Rational(2));
  for (long n = 0; n <= 24; ++n)
    CHECK(lucas_symbolic(n).eval(p.a(), p.b()) == lucas(p, n));
}

TEST_CASE("term cache is safe under concurrent readers and writers") {
  SequenceParams p(Rational(1), Rational(1));
  Rational expect = fib_fast(p, 400);
  std::vector<std::thread> threads;
  std::vector<Rational> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&p, &results, t] {
      Rational last;
      for (long n = 0; n <= 400; ++n) last = fib(p, n);
      results[static_cast<size_t>(t)] = last;
    });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == expect);
}

TEST_CASE("SeqKind uniform handle") {
  SequenceParams fib11(Rational(1), Rational(1));
  auto hf = SeqKind::make(SeqKind::Tag::product_hf, fib11);
  CHECK(hf.term(2) == make_rational(3, 2));
  auto cat = SeqKind::make(SeqKind::Tag::catalan, std::nullopt);
  CHECK(cat.term(5) == 42);
  CHECK_THROWS_AS(SeqKind::make(SeqKind::Tag::gen_fib, std::nullopt), error);
}
