#pragma once

#include "fibprod/bigfloat.hpp"
#include "fibprod/sequences.hpp"

namespace fibprod {

// The four product families summed as series: term n is H(n)F(n), C(n)F(n),
// H(n)L(n) or C(n)L(n), times x^n, starting at n = 1.
enum class SumFamily { HF, CF, HL, CL };

SumFamily parse_sum_family(const std::string& text);
std::string sum_family_str(SumFamily f);

// Exact convergence verdict. The growth rate is phi = (a + sqrt(D))/2; the
// Catalan factor contributes another 4, so the disk radius is 1/phi for the
// harmonic families and 1/(4 phi) for the Catalan ones. The comparison
// |x| < radius is exact conjugate arithmetic, no floating point.
struct RadiusInfo {
  SumFamily family;
  QuadExt growth;
  QuadExt radius;
  Rational x;
  bool inside;
};

RadiusInfo radius_check(const SequenceParams& params, SumFamily family, const Rational& x);

struct SumEvaluation {
  Rational partial_exact;  // sum of the first terms_used terms, exact
  long terms_used;
  Rational tail_exact;     // certified bound on everything dropped
  BigFloat partial_sum;
  BigFloat tail_bound;
  BigFloat closed_form;
  BigFloat abs_difference;
  bool verdict;
};

// Accumulates the series in exact rationals until a certified geometric
// tail bound drops below 10^-target_digits, evaluates the closed form by
// interval arithmetic, and compares. The certificate is an exact invariant
// interval for the term-ratio recurrence plus a scan that detects when the
// actual ratios have stabilized into it; nothing is assumed about monotonic
// convergence.
SumEvaluation evaluate_sum(const SequenceParams& params, SumFamily family, const Rational& x,
                           int target_digits);

// Closed-form value of the family's generating function at the point,
// certified to `digits` decimals (the n=0 term is excluded to match the
// sum's starting index).
BigFloat closed_form_value(const SequenceParams& params, SumFamily family, const Rational& x,
                           int digits);

}  // namespace fibprod
