#include "fibprod/rational.hpp"

namespace fibprod {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(errc::parse, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(text, 10);
      return Rational(n);
    }
    if (slash == 0 || slash + 1 == text.size())
      fail(errc::parse, "malformed rational literal: '" + text + "'");
    Integer num(text.substr(0, slash), 10);
    Integer den(text.substr(slash + 1), 10);
    if (den == 0) fail(errc::parse, "zero denominator in '" + text + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(errc::parse, "malformed rational literal: '" + text + "'");
  }
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) fail(errc::domain, "0 raised to a negative power");
  Rational abs_result;
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r = make_rational(num, den);
  if (exp < 0) r = Rational(1) / r;
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  // num/den is canonical, so sn/sd already is as well.
  return Rational(sn, sd);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace fibprod
