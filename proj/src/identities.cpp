#include "fibprod/identities.hpp"

#include <sstream>

namespace fibprod {

namespace {

std::string idx(long v) { return std::to_string(v); }

using Instance = std::vector<std::pair<std::string, std::string>>;

// The identity bodies are written once against this interface and
// instantiated for exact rationals and for polynomials in (a, b).
struct RationalFib {
  using Value = Rational;
  const SequenceParams& params;

  Value fib(long n) const { return fibprod::fib(params, n); }
  Value lucas(long n) const { return fibprod::lucas(params, n); }
  Value b() const { return params.b(); }
  Value neg_b_pow(long r) const { return pow_rational(-params.b(), r); }
  Value from_long(long v) const { return Rational(v); }
};

struct SymbolicFib {
  using Value = BivariatePoly;

  Value fib(long n) const {
    if (n < 0) fail(errc::domain, "instance needs F at a negative index; not in Z[a,b]");
    return fib_symbolic(n);
  }
  Value lucas(long n) const {
    if (n < 0) fail(errc::domain, "instance needs L at a negative index; not in Z[a,b]");
    return lucas_symbolic(n);
  }
  Value b() const { return BivariatePoly::var_b(); }
  Value neg_b_pow(long r) const {
    if (r < 0) fail(errc::domain, "negative power of b is not in Z[a,b]");
    return (-BivariatePoly::var_b()).pow(static_cast<unsigned long>(r));
  }
  Value from_long(long v) const { return BivariatePoly::constant(v); }
};

template <typename Ops>
std::pair<typename Ops::Value, typename Ops::Value> addition_sides(const Ops& ops, long n,
                                                                   long m) {
  if (n < 1 || m < 1) fail(errc::constraint, "addition law needs n, m >= 1");
  auto lhs = ops.fib(n + m);
  auto rhs = ops.b() * ops.fib(n - 1) * ops.fib(m) + ops.fib(n) * ops.fib(m + 1);
  return {lhs, rhs};
}

template <typename Ops>
std::pair<typename Ops::Value, typename Ops::Value> two_fold_sides(const Ops& ops, long n,
                                                                   long m) {
  if (n < 1 || m < 1) fail(errc::constraint, "two-fold identity needs n, m >= 1");
  auto lhs = ops.from_long(2) * ops.fib(n + m);
  auto rhs = ops.fib(m) * ops.lucas(n) + ops.lucas(m) * ops.fib(n);
  return {lhs, rhs};
}

template <typename Ops>
std::pair<typename Ops::Value, typename Ops::Value> doubling_sides(const Ops& ops, long n) {
  if (n < 1) fail(errc::constraint, "doubling needs n >= 1");
  return {ops.fib(2 * n), ops.fib(n) * ops.lucas(n)};
}

template <typename Ops>
std::pair<typename Ops::Value, typename Ops::Value> johnson_sides(const Ops& ops, long p,
                                                                  long q, long c, long d,
                                                                  long r) {
  if (p < 1 || q < 1 || c < 1 || d < 1)
    fail(errc::constraint, "Johnson identity needs p, q, c, d >= 1");
  if (p + q != c + d) fail(errc::constraint, "Johnson identity needs p + q = c + d");
  if (p - r < 0 || q - r < 0 || c - r < 0 || d - r < 0)
    fail(errc::constraint, "Johnson shift would leave the forward-defined range");
  auto lhs = ops.fib(p) * ops.fib(q) - ops.fib(c) * ops.fib(d);
  auto rhs = ops.neg_b_pow(r) *
             (ops.fib(p - r) * ops.fib(q - r) - ops.fib(c - r) * ops.fib(d - r));
  return {lhs, rhs};
}

template <typename Ops>
std::pair<typename Ops::Value, typename Ops::Value> multiple_angle_sides(const Ops& ops, long m,
                                                                         long n, long j) {
  if (m < 1 || n < 2 || j < 0)
    fail(errc::constraint, "multiple-angle recurrence needs m >= 1, n >= 2, j >= 0");
  auto lhs = ops.fib(m * n + j);
  auto rhs = ops.lucas(m) * ops.fib(m * (n - 1) + j) -
             ops.neg_b_pow(m) * ops.fib(m * (n - 2) + j);
  return {lhs, rhs};
}

template <typename Ops>
std::pair<typename Ops::Value, typename Ops::Value> shift_sides(const Ops& ops, long n, long m,
                                                                long j) {
  if (n < 1 || m < 1) fail(errc::constraint, "shift identity needs n, m >= 1");
  if (j < 0 || j > m) fail(errc::constraint, "shift identity needs 0 <= j <= m");
  auto lhs = ops.fib(n + j) * ops.fib(m) - ops.fib(j) * ops.fib(n + m);
  auto rhs = ops.neg_b_pow(j) * ops.fib(n) * ops.fib(m - j);
  return {lhs, rhs};
}

bool values_equal(const ReportValue& lhs, const ReportValue& rhs) {
  if (lhs.index() != rhs.index()) return false;
  if (std::holds_alternative<Rational>(lhs))
    return std::get<Rational>(lhs) == std::get<Rational>(rhs);
  return std::get<BivariatePoly>(lhs) == std::get<BivariatePoly>(rhs);
}

}  // namespace

IdentityReport IdentityReport::make(std::string identity, Instance instance, ReportValue lhs,
                                    ReportValue rhs) {
  bool pass = values_equal(lhs, rhs);
  return IdentityReport{std::move(identity), std::move(instance), std::move(lhs),
                        std::move(rhs), pass};
}

std::string IdentityReport::value_str(const ReportValue& v) const {
  if (std::holds_alternative<Rational>(v)) return to_string(std::get<Rational>(v));
  return std::get<BivariatePoly>(v).str();
}

std::string IdentityReport::describe() const {
  std::ostringstream os;
  os << identity << " [";
  for (size_t i = 0; i < instance.size(); ++i) {
    if (i) os << ", ";
    os << instance[i].first << "=" << instance[i].second;
  }
  os << "] lhs=" << value_str(lhs) << " rhs=" << value_str(rhs)
     << (pass ? " PASS" : " FAIL");
  return os.str();
}

IdentityReport check_addition(const SequenceParams& params, long n, long m) {
  auto [lhs, rhs] = addition_sides(RationalFib{params}, n, m);
  return IdentityReport::make("addition", {{"n", idx(n)}, {"m", idx(m)}}, lhs, rhs);
}

IdentityReport check_two_fold(const SequenceParams& params, long n, long m) {
  auto [lhs, rhs] = two_fold_sides(RationalFib{params}, n, m);
  IdentityReport report =
      IdentityReport::make("two-fold", {{"n", idx(n)}, {"m", idx(m)}}, lhs, rhs);
  if (n == m && report.pass) {
    // The n == m case additionally pins the doubling form F(2n) = F(n)L(n).
    auto [dl, dr] = doubling_sides(RationalFib{params}, n);
    if (!(dl == dr))
      return IdentityReport::make("two-fold(doubling)", {{"n", idx(n)}, {"m", idx(m)}}, dl, dr);
  }
  return report;
}

IdentityReport check_johnson(const SequenceParams& params, long p, long q, long c, long d,
                             long r) {
  auto [lhs, rhs] = johnson_sides(RationalFib{params}, p, q, c, d, r);
  return IdentityReport::make(
      "johnson", {{"p", idx(p)}, {"q", idx(q)}, {"c", idx(c)}, {"d", idx(d)}, {"r", idx(r)}},
      lhs, rhs);
}

IdentityReport check_multiple_angle(const SequenceParams& params, long m, long n, long j) {
  auto [lhs, rhs] = multiple_angle_sides(RationalFib{params}, m, n, j);
  return IdentityReport::make("multiple-angle", {{"m", idx(m)}, {"n", idx(n)}, {"j", idx(j)}},
                              lhs, rhs);
}

IdentityReport check_shift(const SequenceParams& params, long n, long m, long j) {
  auto [lhs, rhs] = shift_sides(RationalFib{params}, n, m, j);
  return IdentityReport::make("shift", {{"n", idx(n)}, {"m", idx(m)}, {"j", idx(j)}}, lhs, rhs);
}

IdentityReport check_master(const SequenceParams& params,
                            const std::function<Rational(long)>& r, const std::string& r_name,
                            long k, long m, long n) {
  if (k < 0 || m < 0 || n < 0) fail(errc::constraint, "master identity needs k, m, n >= 0");
  Rational p(0);
  for (long i = 0; i <= n; ++i) p += r(i) * r(n - i);
  Rational lhs = p * fib(params, k * n + 2 * m);
  Rational rhs(0);
  for (long i = 0; i <= n; ++i)
    rhs += r(i) * lucas(params, k * i + m) * r(n - i) * fib(params, k * (n - i) + m);
  return IdentityReport::make(
      "master", {{"r", r_name}, {"k", idx(k)}, {"m", idx(m)}, {"n", idx(n)}}, lhs, rhs);
}

SymmetricTriangle::SymmetricTriangle(std::string name, EntryFn entry, long max_row)
    : name_(std::move(name)), entry_(std::move(entry)), max_row_(max_row) {
  if (max_row_ < 0) fail(errc::domain, "triangle needs at least row 0");
  for (long n = 0; n <= max_row_; ++n)
    for (long k = 0; k <= n; ++k)
      if (entry_(n, k) != entry_(n, n - k))
        fail(errc::constraint, "triangle '" + name_ + "' is not symmetric at (" + idx(n) + "," +
                                   idx(k) + ")");
}

Rational SymmetricTriangle::entry(long n, long k) const {
  if (n < 0 || n > max_row_) fail(errc::domain, "triangle '" + name_ + "' has no row " + idx(n));
  if (k < 0 || k > n) return Rational(0);
  return entry_(n, k);
}

Rational SymmetricTriangle::row_sum(long n) const {
  Rational sum(0);
  for (long k = 0; k <= n; ++k) sum += entry(n, k);
  return sum;
}

SymmetricTriangle pascal_triangle(long max_row) {
  return SymmetricTriangle(
      "pascal",
      [](long n, long k) {
        return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
      },
      max_row);
}

SymmetricTriangle central_binomial_squared_triangle(long max_row) {
  return SymmetricTriangle(
      "binomial-squared",
      [](long n, long k) {
        Integer b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(b * b);
      },
      max_row);
}

SymmetricTriangle eulerian_triangle(long max_row) {
  return SymmetricTriangle(
      "eulerian", [](long n, long k) { return Rational(eulerian_first(n, k)); }, max_row);
}

SymmetricTriangle leibniz_triangle(long max_row) {
  return SymmetricTriangle(
      "leibniz",
      [](long n, long k) {
        Integer denom = Integer(n + 1) * binomial(static_cast<unsigned long>(n),
                                                  static_cast<unsigned long>(k));
        return make_rational(Integer(1), denom);
      },
      max_row);
}

IdentityReport check_triangle(const SequenceParams& params, const SymmetricTriangle& t, long k,
                              long m, long n) {
  if (k < 0 || m < 0 || n < 0) fail(errc::constraint, "triangle identity needs k, m, n >= 0");
  if (n > t.max_row()) fail(errc::domain, "triangle '" + t.name() + "' has no row " + idx(n));
  Rational lhs = t.row_sum(n) * fib(params, k * n + 2 * m);
  Rational rhs(0);
  for (long i = 0; i <= n; ++i)
    rhs += t.entry(n, i) * fib(params, k * i + m) * lucas(params, k * (n - i) + m);
  return IdentityReport::make(
      "triangle", {{"t", t.name()}, {"k", idx(k)}, {"m", idx(m)}, {"n", idx(n)}}, lhs, rhs);
}

const std::vector<std::string>& symbolic_identity_names() {
  static const std::vector<std::string> names{"addition",       "two-fold", "doubling",
                                              "johnson",        "shift",    "multiple-angle"};
  return names;
}

IdentityReport check_symbolic(const std::string& identity, const std::vector<long>& v) {
  SymbolicFib ops;
  auto need = [&](size_t n) {
    if (v.size() != n)
      fail(errc::parse, identity + " expects " + std::to_string(n) + " indices");
  };
  Instance inst;
  std::pair<BivariatePoly, BivariatePoly> sides;
  if (identity == "addition") {
    need(2);
    sides = addition_sides(ops, v[0], v[1]);
    inst = {{"n", idx(v[0])}, {"m", idx(v[1])}};
  } else if (identity == "two-fold") {
    need(2);
    sides = two_fold_sides(ops, v[0], v[1]);
    inst = {{"n", idx(v[0])}, {"m", idx(v[1])}};
  } else if (identity == "doubling") {
    need(1);
    sides = doubling_sides(ops, v[0]);
    inst = {{"n", idx(v[0])}};
  } else if (identity == "johnson") {
    need(5);
    if (v[4] < 0) fail(errc::domain, "symbolic Johnson instances need r >= 0");
    sides = johnson_sides(ops, v[0], v[1], v[2], v[3], v[4]);
    inst = {{"p", idx(v[0])}, {"q", idx(v[1])}, {"c", idx(v[2])}, {"d", idx(v[3])},
            {"r", idx(v[4])}};
  } else if (identity == "multiple-angle") {
    need(3);
    sides = multiple_angle_sides(ops, v[0], v[1], v[2]);
    inst = {{"m", idx(v[0])}, {"n", idx(v[1])}, {"j", idx(v[2])}};
  } else if (identity == "shift") {
    need(3);
    sides = shift_sides(ops, v[0], v[1], v[2]);
    inst = {{"n", idx(v[0])}, {"m", idx(v[1])}, {"j", idx(v[2])}};
  } else {
    fail(errc::parse, "unknown symbolic identity '" + identity + "'");
  }
  return IdentityReport::make("symbolic " + identity, std::move(inst), std::move(sides.first),
                              std::move(sides.second));
}

}  // namespace fibprod
