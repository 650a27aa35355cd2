#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "fibprod/bivariate_poly.hpp"
#include "fibprod/rational.hpp"

namespace fibprod {

enum class SeqFamily { fib, lucas };
enum class ConvMode { direct, closed };

// The recurrence pair (a, b) with its discriminant a^2 + 4b. b == 0 and
// D == 0 are rejected here once: the backward extension divides by b and
// every closed form divides by the discriminant. Copies share one term
// cache, safe under concurrent use.
class SequenceParams {
 public:
  SequenceParams(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& discriminant() const { return d_; }

  bool operator==(const SequenceParams& o) const { return a_ == o.a_ && b_ == o.b_; }

  std::string str() const;  // "(a=.., b=..)"

 private:
  friend Rational fib(const SequenceParams&, long);

  struct TermCache;
  Rational a_, b_, d_;
  std::shared_ptr<TermCache> cache_;
};

// F(0)=0, F(1)=1, F(n) = a F(n-1) + b F(n-2); negative indices follow the
// backward recurrence F(n-2) = (F(n) - a F(n-1))/b, which is the unique
// extension compatible with L(0) = 2.
Rational fib(const SequenceParams& params, long n);

// Same value as fib(n) for n >= 0 in O(log n) multiplications, no cache.
Rational fib_fast(const SequenceParams& params, long n);

// L(n) = F(n+1) + b F(n-1); L(0) = 2, L(1) = a.
Rational lucas(const SequenceParams& params, long n);

Rational harmonic(long n);
Integer catalan(long n);

// Symmetric Eulerian triangle entry: row n has n+1 entries summing to (n+1)!.
Integer eulerian_first(long n, long k);

// Sum F(i)F(n-i) directly, or via ((n-1)F(n+1) + b(n+1)F(n-1)) / (a^2+4b).
Rational fib_convolution(const SequenceParams& params, long n, ConvMode mode);

Rational multisection_term(const SequenceParams& params, long m, long j, long n,
                           SeqFamily kind);

// F(n) and L(n) as integer polynomials in the parameters a, b (n >= 0;
// the Lucas family uses L(n) = a F(n) + 2b F(n-1) to stay polynomial).
BivariatePoly fib_symbolic(long n);
BivariatePoly lucas_symbolic(long n);

// Uniform term handle used by the CLI and the sum evaluator.
struct SeqKind {
  enum class Tag {
    gen_fib,
    gen_lucas,
    harmonic,
    catalan,
    convolution,
    msec_fib,
    msec_lucas,
    product_hf,
    product_cf,
    product_hl,
    product_cl,
  };

  Tag tag;
  std::optional<SequenceParams> params;
  long m = 1;      // multisection stride
  long j = 0;      // multisection offset
  long shift = 0;  // product_xx: second factor evaluated at n + shift

  Rational term(long n) const;
  std::string describe() const;

  static SeqKind make(Tag tag, std::optional<SequenceParams> params, long m = 1, long j = 0,
                      long shift = 0);
  static bool tag_needs_params(Tag tag);
};

}  // namespace fibprod
