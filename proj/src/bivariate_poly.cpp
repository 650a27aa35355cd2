#include "fibprod/bivariate_poly.hpp"

#include <vector>

namespace fibprod {

BivariatePoly BivariatePoly::constant(Integer c) {
  BivariatePoly p;
  p.add_term(0, 0, c);
  return p;
}

BivariatePoly BivariatePoly::var_a() {
  BivariatePoly p;
  p.add_term(1, 0, 1);
  return p;
}

BivariatePoly BivariatePoly::var_b() {
  BivariatePoly p;
  p.add_term(0, 1, 1);
  return p;
}

void BivariatePoly::add_term(int i, int j, const Integer& c) {
  if (c == 0) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
  return p;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly p = *this;
  for (const auto& [k, c] : o.terms_) p.add_term(k.first, k.second, c);
  return p;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
  BivariatePoly p = *this;
  for (const auto& [k, c] : o.terms_) p.add_term(k.first, k.second, -c);
  return p;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly p;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      p.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return p;
}

BivariatePoly BivariatePoly::pow(unsigned long e) const {
  BivariatePoly r = constant(1);
  BivariatePoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Rational BivariatePoly::eval(const Rational& a, const Rational& b) const {
  Rational sum(0);
  for (const auto& [k, c] : terms_) {
    Rational term(c);
    term *= pow_rational(a, k.first);
    term *= pow_rational(b, k.second);
    sum += term;
  }
  return sum;
}

std::string BivariatePoly::str() const {
  if (terms_.empty()) return "0";
  // Graded lex, highest total degree first.
  std::vector<std::pair<std::pair<int, int>, Integer>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = x.first.first + x.first.second;
    int dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    Integer mag = ::abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    auto append_var = [&mono](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append_var("a", k.first);
    append_var("b", k.second);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace fibprod
