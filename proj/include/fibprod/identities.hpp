#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "fibprod/bivariate_poly.hpp"
#include "fibprod/sequences.hpp"

namespace fibprod {

using ReportValue = std::variant<Rational, BivariatePoly>;

// Both exact sides of one identity instance. Carrying the sides makes a
// failure diagnosable without re-running; pass is recomputed from them here.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> instance;
  ReportValue lhs;
  ReportValue rhs;
  bool pass;

  static IdentityReport make(std::string identity,
                             std::vector<std::pair<std::string, std::string>> instance,
                             ReportValue lhs, ReportValue rhs);

  std::string value_str(const ReportValue& v) const;
  std::string describe() const;
};

// F(n+m) = b F(n-1) F(m) + F(n) F(m+1), n, m >= 1.
IdentityReport check_addition(const SequenceParams& params, long n, long m);

// 2 F(n+m) = F(m) L(n) + L(m) F(n); at n == m additionally F(2n) = F(n) L(n).
IdentityReport check_two_fold(const SequenceParams& params, long n, long m);

// F(p)F(q) - F(c)F(d) = (-b)^r (F(p-r)F(q-r) - F(c-r)F(d-r)), p+q = c+d,
// all shifted indices >= 0.
IdentityReport check_johnson(const SequenceParams& params, long p, long q, long c, long d,
                             long r);

// F(mn+j) = L(m) F(m(n-1)+j) - (-b)^m F(m(n-2)+j), m >= 1, n >= 2, j >= 0.
IdentityReport check_multiple_angle(const SequenceParams& params, long m, long n, long j);

// F(n+j)F(m) - F(j)F(n+m) = (-1)^j b^j F(n) F(m-j), 0 <= j <= m.
IdentityReport check_shift(const SequenceParams& params, long n, long m, long j);

// With p(n) = sum r(i) r(n-i):
// p(n) F(kn+2m) = sum_{i=0}^{n} r(i) L(ki+m) r(n-i) F(k(n-i)+m).
IdentityReport check_master(const SequenceParams& params,
                            const std::function<Rational(long)>& r, const std::string& r_name,
                            long k, long m, long n);

// A triangle with entry(n, k) = entry(n, n-k); symmetry of every stored row
// is verified at construction.
class SymmetricTriangle {
 public:
  using EntryFn = std::function<Rational(long, long)>;

  SymmetricTriangle(std::string name, EntryFn entry, long max_row);

  const std::string& name() const { return name_; }
  long max_row() const { return max_row_; }
  Rational entry(long n, long k) const;
  Rational row_sum(long n) const;

 private:
  std::string name_;
  EntryFn entry_;
  long max_row_;
};

SymmetricTriangle pascal_triangle(long max_row);
SymmetricTriangle central_binomial_squared_triangle(long max_row);
SymmetricTriangle eulerian_triangle(long max_row);
// Rational-valued: entry(n,k) = 1 / ((n+1) binomial(n,k)).
SymmetricTriangle leibniz_triangle(long max_row);

// (sum_i t(n,i)) F(kn+2m) = sum_i t(n,i) F(ki+m) L(k(n-i)+m).
IdentityReport check_triangle(const SequenceParams& params, const SymmetricTriangle& t, long k,
                              long m, long n);

// Runs one of the five families over Z[a,b] with indeterminate parameters.
// Names: addition {n,m}, two-fold {n,m}, doubling {n}, johnson {p,q,c,d,r},
// multiple-angle {m,n,j}, shift {n,m,j}. Instances needing negative indices
// or negative r are unsupported in symbolic mode.
IdentityReport check_symbolic(const std::string& identity, const std::vector<long>& indices);

const std::vector<std::string>& symbolic_identity_names();

}  // namespace fibprod
