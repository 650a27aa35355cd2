#pragma once

#include <functional>
#include <string>

#include "fibprod/identities.hpp"
#include "fibprod/power_series.hpp"
#include "fibprod/sequences.hpp"

namespace fibprod {

enum class ProductLeft { harmonic, catalan };

// x / (1 - a x - b x^2): coefficient n is F(n).
RationalSeries gf_fib(const SequenceParams& params, int order);
// (2 - a x) / (1 - a x - b x^2): coefficient n is L(n).
RationalSeries gf_lucas(const SequenceParams& params, int order);

// Log-quotient closed forms, expanded over Q(sqrt(D)) and collapsed; the
// radical parts must cancel exactly or the builder throws.
//   k=1: (2/n) H(n-1) F(n)    k=2: F(n)/n    k=3: L(n)/n
//   k=4: H(n) F(n+1)          k=5: H(n) F(n)
// Requires D > 0 (real logarithms); D < 0 is a domain error here.
RationalSeries gf_u(int k, const SequenceParams& params, int order);

// H(n) F(n+j+1) = F(j+1) [H(n)F(n+1) series] + b F(j) [H(n)F(n) series].
// The pairing is pinned by the term-product oracle; the swapped pairing
// fails it whenever F(j) != F(j+1).
RationalSeries gf_u6(const SequenceParams& params, long j, int order);

// Nested-radical closed forms over the rationals.
//   k=1: C(n) F(n+1)   k=2: C(n) L(n+1)   k=3: C(n) F(n)
// The k=1 enumeration is pinned by the oracle: coefficient n is C(n)F(n+1),
// not C(n)F(n+2).
RationalSeries gf_v(int k, const SequenceParams& params, int order);

// C(n) F(n+j+1) = F(j+1) V1 + b F(j) V3.
RationalSeries gf_v4(const SequenceParams& params, long j, int order);

// (F(j) + (-b)^j F(m-j) x) / (1 - L(m) x + (-b)^m x^2) and the Lucas
// variant (L(j) - (-b)^j L(m-j) x) over the same denominator.
RationalSeries gf_multisection(const SequenceParams& params, long m, long j, SeqFamily kind,
                               int order);

// Products H(n)/C(n) times F(mn+j)/L(mn+j), assembled from the U/V builders
// at the derived parameters (L(m), -(-b)^m).
RationalSeries gf_product_multisection(const SequenceParams& params, long m, long j,
                                       ProductLeft left, SeqFamily right, int order);

// Independent verification channel: coefficient n is s1(n) * s2(n).
RationalSeries oracle_product(const std::function<Rational(long)>& s1,
                              const std::function<Rational(long)>& s2, int order);

// V1 = 1 + x V1 V2 compared coefficientwise to the stated order. The report
// carries the first mismatching coefficient pair, or the top coefficients
// when everything agrees.
IdentityReport check_catalan_functional_equation(const SequenceParams& params, int order);

// One closed-form builder plus its termwise contract, the uniform handle the
// CLI and the acceptance suite drive.
struct GfSpec {
  enum class Name { F, L, U1, U2, U3, U4, U5, U6, V1, V2, V3, V4, QF, QL, HF, CF, HL, CL };

  Name name;
  SequenceParams params;
  long m = 1;
  long j = 0;
  int order = 16;

  RationalSeries build() const;
  RationalSeries oracle() const;
  std::string contract() const;  // e.g. "H(n)*F(n+1)"

  static Name parse_name(const std::string& text);
  static std::string name_str(Name name);
  static bool name_uses_stride(Name name);  // QF/QL/HF/CF/HL/CL
  static bool name_uses_shift(Name name);   // U6/V4
};

}  // namespace fibprod
