#include "fibprod/series_sums.hpp"

#include <algorithm>
#include <optional>

namespace fibprod {

namespace {

constexpr long kRatioScanBudget = 5000;
constexpr long kTermBudget = 200000;

bool harmonic_family(SumFamily f) { return f == SumFamily::HF || f == SumFamily::HL; }
bool lucas_family(SumFamily f) { return f == SumFamily::HL || f == SumFamily::CL; }

Rational product_term(const SequenceParams& params, SumFamily f, long n) {
  Rational left = harmonic_family(f) ? harmonic(n) : Rational(catalan(n));
  Rational right = lucas_family(f) ? lucas(params, n) : fib(params, n);
  return left * right;
}

Rational pow10_neg(int digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return make_rational(Integer(1), p);
}

// Exact invariant interval [lo, hi] for the ratio map g(r) = a + b/r around
// the dominant root, plus the first index where the actual consecutive-term
// ratios of the F (or L) sequence have entered it. Once entered, induction
// on g keeps every later ratio inside.
struct RatioCertificate {
  Rational lo, hi;
  long stable_from;
};

std::optional<RatioCertificate> certify_ratio(const SequenceParams& params, bool use_lucas,
                                              const Rational& limit_gap) {
  const Rational& a = params.a();
  const Rational& b = params.b();
  // Tight rational enclosure of phi = (a + sqrt(D))/2.
  RealInterval sd = RealInterval::from(params.discriminant(), 256).sqrt();
  Rational phi_lo = (a + sd.lower_rational()) / 2;
  Rational phi_hi = (a + sd.upper_rational()) / 2;

  Rational w = limit_gap;
  if (phi_lo > 0 && w > phi_lo / 2) w = phi_lo / 2;
  for (int attempt = 0; attempt < 64; ++attempt, w /= 2) {
    Rational lo = phi_lo - w;
    Rational hi = phi_hi + w;
    if (lo <= 0) continue;
    bool invariant = b > 0 ? (a + b / hi >= lo && a + b / lo <= hi)
                           : (a + b / lo >= lo && a + b / hi <= hi);
    if (!invariant) continue;
    // Scan for stabilization: the certificate only applies from the first
    // ratio actually observed inside the interval.
    Rational prev = use_lucas ? lucas(params, 1) : fib(params, 1);
    for (long n = 1; n <= kRatioScanBudget; ++n) {
      Rational next = use_lucas ? lucas(params, n + 1) : fib(params, n + 1);
      if (prev != 0) {
        Rational ratio = next / prev;
        if (ratio >= lo && ratio <= hi) return RatioCertificate{lo, hi, n};
      }
      prev = next;
    }
  }
  return std::nullopt;
}

RealInterval eval_log_pieces(const SequenceParams& params, const Rational& x, mpfr_prec_t prec,
                             bool want_u4) {
  const Rational& a = params.a();
  const Rational& b = params.b();
  const Rational& d = params.discriminant();
  RealInterval xi = RealInterval::from(x, prec);
  RealInterval root = RealInterval::from(d, prec).sqrt();
  RealInterval two = RealInterval::from_long(2, prec);
  RealInterval ai = RealInterval::from(a, prec);
  RealInterval bi = RealInterval::from(b, prec);
  RealInterval lq = ((two - root * xi - ai * xi) / (two + root * xi - ai * xi)).log();
  RealInterval p = RealInterval::from(Rational(1) - a * x - b * x * x, prec);
  RealInterval lp = p.log();
  if (want_u4) {
    RealInterval num = (ai + two * bi * xi) * lq + root * lp;
    return -(num / (two * root * p));
  }
  RealInterval num = ((two - ai * xi) / root) * lq + xi * lp;
  return -(num / (two * p));
}

RealInterval eval_sqrt_pieces(const SequenceParams& params, const Rational& x,
                              mpfr_prec_t prec, bool want_v1) {
  const Rational& a = params.a();
  const Rational& b = params.b();
  const Rational& d = params.discriminant();
  RealInterval xi = RealInterval::from(x, prec);
  RealInterval rr =
      RealInterval::from(Rational(1) - 4 * a * x - 16 * b * x * x, prec).sqrt();
  if (want_v1) {
    RealInterval inner =
        (RealInterval::from(Rational(1) - 2 * a * x, prec) - rr) / RealInterval::from(2 * d, prec);
    return inner.sqrt() / xi;
  }
  RealInterval inner = (RealInterval::from(2 * b, prec) * rr +
                        RealInterval::from(a * a + 2 * b + 4 * a * b * x, prec)) /
                       RealInterval::from(d, prec);
  return (RealInterval::from_long(1, prec) - inner.sqrt()) /
         RealInterval::from(2 * b * x, prec);
}

}  // namespace

SumFamily parse_sum_family(const std::string& text) {
  std::string u = text;
  std::transform(u.begin(), u.end(), u.begin(), ::toupper);
  if (u == "HF") return SumFamily::HF;
  if (u == "CF") return SumFamily::CF;
  if (u == "HL") return SumFamily::HL;
  if (u == "CL") return SumFamily::CL;
  fail(errc::parse, "unknown sum family '" + text + "' (expected HF, CF, HL or CL)");
}

std::string sum_family_str(SumFamily f) {
  switch (f) {
    case SumFamily::HF: return "HF";
    case SumFamily::CF: return "CF";
    case SumFamily::HL: return "HL";
    case SumFamily::CL: return "CL";
  }
  return "?";
}

RadiusInfo radius_check(const SequenceParams& params, SumFamily family, const Rational& x) {
  const Rational& d = params.discriminant();
  if (d < 0)
    fail(errc::domain, "radius check needs a^2 + 4b > 0 (real dominant root); " + params.str());
  QuadExt growth(params.a() / 2, make_rational(1, 2), d);
  QuadExt scaled = harmonic_family(family)
                       ? growth
                       : growth * QuadExt::from_rational(Rational(4), d);
  QuadExt radius = scaled.inverse();
  QuadExt gap = radius - QuadExt::from_rational(abs(x), d);
  return RadiusInfo{family, growth, radius, x, gap.sign() > 0};
}

BigFloat closed_form_value(const SequenceParams& params, SumFamily family, const Rational& x,
                           int digits) {
  if (x == 0) return bigfloat_from_rational(Rational(0), digits);
  return certify_to_digits(
      [&](mpfr_prec_t prec) -> RealInterval {
        switch (family) {
          case SumFamily::HF: return eval_log_pieces(params, x, prec, false);
          case SumFamily::HL: {
            RealInterval u4 = eval_log_pieces(params, x, prec, true);
            RealInterval u5 = eval_log_pieces(params, x, prec, false);
            return RealInterval::from_long(2, prec) * u4 -
                   RealInterval::from(params.a(), prec) * u5;
          }
          case SumFamily::CF: return eval_sqrt_pieces(params, x, prec, false);
          case SumFamily::CL: {
            RealInterval v1 = eval_sqrt_pieces(params, x, prec, true);
            RealInterval v3 = eval_sqrt_pieces(params, x, prec, false);
            // Drop the n = 0 term C(0)L(0) = 2 carried by the closed form.
            return RealInterval::from_long(2, prec) * v1 -
                   RealInterval::from(params.a(), prec) * v3 -
                   RealInterval::from_long(2, prec);
          }
        }
        fail(errc::domain, "unknown sum family");
      },
      digits);
}

SumEvaluation evaluate_sum(const SequenceParams& params, SumFamily family, const Rational& x,
                           int target_digits) {
  if (target_digits < 1) fail(errc::domain, "target digits must be positive");
  RadiusInfo info = radius_check(params, family, x);
  if (!info.inside)
    fail(errc::divergence, "x = " + to_string(x) + " is outside the convergence disk for " +
                               sum_family_str(family) + " at " + params.str());

  Rational eps = pow10_neg(target_digits);
  Rational ax = abs(x);

  if (x == 0) {
    BigFloat zero = bigfloat_from_rational(Rational(0), target_digits);
    return SumEvaluation{Rational(0), 0, Rational(0), zero, zero, zero, zero, true};
  }

  long catalan_factor = harmonic_family(family) ? 1 : 4;
  // How much head room the certified ratio has below 1 decides the margin
  // around phi.
  RealInterval sd = RealInterval::from(params.discriminant(), 192).sqrt();
  Rational phi_hi = (params.a() + sd.upper_rational()) / 2;
  Rational limit_hi = catalan_factor * phi_hi * ax;
  if (limit_hi >= 1)
    fail(errc::inconclusive, "certified ratio bound does not clear 1 for " +
                                 sum_family_str(family) + " at x = " + to_string(x));
  Rational margin_cap = (Rational(1) - limit_hi) / (4 * catalan_factor * ax);
  auto cert = certify_ratio(params, lucas_family(family), margin_cap);
  if (!cert)
    fail(errc::inconclusive,
         "term-ratio stabilization not certified within budget for " + params.str());

  Rational hi_abs(abs(cert->hi));
  Rational lo_abs(abs(cert->lo));
  if (lo_abs > hi_abs) hi_abs = lo_abs;
  Rational partial(0);
  Rational xpow(1);
  for (long n = 1; n <= kTermBudget; ++n) {
    xpow *= x;
    Rational term = product_term(params, family, n) * xpow;
    partial += term;
    if (n < cert->stable_from) continue;
    Rational weight = harmonic_family(family) ? harmonic(n + 1) / harmonic(n) : Rational(4);
    Rational r = weight * hi_abs * ax;
    if (r >= 1) continue;
    Rational tail = abs(term) * r / (1 - r);
    if (tail <= eps) {
      BigFloat closed = closed_form_value(params, family, x, target_digits + 2);
      Rational c_lo = closed.interval().lower_rational();
      Rational c_hi = closed.interval().upper_rational();
      bool verdict = partial >= c_lo - tail && partial <= c_hi + tail;
      Rational diff = abs(partial - (c_lo + c_hi) / 2);
      return SumEvaluation{partial,
                           n,
                           tail,
                           bigfloat_from_rational(partial, target_digits),
                           bigfloat_from_rational(tail, target_digits + 8),
                           closed,
                           bigfloat_from_rational(diff, target_digits + 8),
                           verdict};
    }
  }
  fail(errc::inconclusive, "term budget exhausted before the tail bound cleared 10^-" +
                               std::to_string(target_digits));
}

}  // namespace fibprod
