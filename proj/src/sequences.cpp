#include "fibprod/sequences.hpp"

#include <mutex>
#include <vector>

namespace fibprod {

struct SequenceParams::TermCache {
  std::mutex mu;
  std::vector<Rational> forward;   // F(0), F(1), ...
  std::vector<Rational> backward;  // F(-1), F(-2), ...
};

SequenceParams::SequenceParams(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)), cache_(std::make_shared<TermCache>()) {
  if (b_ == 0) fail(errc::domain, "b must be nonzero (backward recurrence divides by b)");
  d_ = a_ * a_ + 4 * b_;
  if (d_ == 0) fail(errc::domain, "a^2 + 4b must be nonzero (closed forms divide by it)");
}

std::string SequenceParams::str() const {
  return "(a=" + to_string(a_) + ", b=" + to_string(b_) + ")";
}

Rational fib(const SequenceParams& params, long n) {
  auto& cache = *params.cache_;
  std::lock_guard<std::mutex> lock(cache.mu);
  if (n >= 0) {
    auto idx = static_cast<size_t>(n);
    if (cache.forward.empty()) {
      cache.forward.push_back(Rational(0));
      cache.forward.push_back(Rational(1));
    }
    while (cache.forward.size() <= idx) {
      size_t s = cache.forward.size();
      cache.forward.push_back(params.a() * cache.forward[s - 1] +
                              params.b() * cache.forward[s - 2]);
    }
    return cache.forward[idx];
  }
  // F(m-2) = (F(m) - a F(m-1)) / b, walking downward from F(1), F(0).
  auto idx = static_cast<size_t>(-n);
  while (cache.backward.size() < idx) {
    size_t s = cache.backward.size();  // computing F(-(s+1))
    Rational f_m = s >= 2 ? cache.backward[s - 2] : Rational(s == 1 ? 0 : 1);
    Rational f_m1 = s >= 1 ? cache.backward[s - 1] : Rational(0);
    cache.backward.push_back((f_m - params.a() * f_m1) / params.b());
  }
  return cache.backward[idx - 1];
}

Rational fib_fast(const SequenceParams& params, long n) {
  if (n < 0) fail(errc::domain, "fib_fast requires n >= 0");
  // Doubling on the pair (F(k), F(k+1)):
  //   F(2k)   = F(k) (2 F(k+1) - a F(k))
  //   F(2k+1) = b F(k)^2 + F(k+1)^2
  Rational f0(0), f1(1);  // F(0), F(1)
  if (n == 0) return f0;
  int bits = 0;
  for (unsigned long v = static_cast<unsigned long>(n); v > 0; v >>= 1) ++bits;
  for (int i = bits - 1; i >= 0; --i) {
    Rational even = f0 * (2 * f1 - params.a() * f0);
    Rational odd = params.b() * f0 * f0 + f1 * f1;
    if ((static_cast<unsigned long>(n) >> i) & 1) {
      f0 = odd;
      f1 = params.a() * odd + params.b() * even;
    } else {
      f0 = even;
      f1 = odd;
    }
  }
  return f0;
}

Rational lucas(const SequenceParams& params, long n) {
  return fib(params, n + 1) + params.b() * fib(params, n - 1);
}

namespace {
std::mutex harmonic_mu;
std::vector<Rational> harmonic_cache{Rational(0)};  // H(0) = 0

std::mutex eulerian_mu;
std::vector<std::vector<Integer>> eulerian_rows;  // rows_[n][k] = E1(n, k)
}  // namespace

Rational harmonic(long n) {
  if (n < 0) fail(errc::domain, "harmonic numbers need n >= 0");
  std::lock_guard<std::mutex> lock(harmonic_mu);
  while (harmonic_cache.size() <= static_cast<size_t>(n)) {
    long next = static_cast<long>(harmonic_cache.size());
    harmonic_cache.push_back(harmonic_cache.back() + make_rational(1, next));
  }
  return harmonic_cache[static_cast<size_t>(n)];
}

Integer catalan(long n) {
  if (n < 0) fail(errc::domain, "Catalan numbers need n >= 0");
  Integer b = binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return b / (n + 1);  // exact
}

Integer eulerian_first(long n, long k) {
  if (n < 0) fail(errc::domain, "Eulerian triangle needs n >= 0");
  if (k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(eulerian_mu);
  if (eulerian_rows.empty()) eulerian_rows.push_back({Integer(1)});
  // Row n here counts permutations of n+1 elements by descents:
  // E(n, k) = (k+1) E(n-1, k) + (n+1-k) E(n-1, k-1).
  while (eulerian_rows.size() <= static_cast<size_t>(n)) {
    size_t r = eulerian_rows.size();
    const auto& prev = eulerian_rows[r - 1];
    std::vector<Integer> row(r + 1);
    for (size_t i = 0; i <= r; ++i) {
      Integer v(0);
      if (i < prev.size()) v += Integer(static_cast<long>(i) + 1) * prev[i];
      if (i >= 1) v += Integer(static_cast<long>(r - i) + 1) * prev[i - 1];
      row[i] = v;
    }
    eulerian_rows.push_back(std::move(row));
  }
  return eulerian_rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Rational fib_convolution(const SequenceParams& params, long n, ConvMode mode) {
  if (n < 0) fail(errc::domain, "convolution needs n >= 0");
  if (mode == ConvMode::direct) {
    Rational sum(0);
    for (long i = 0; i <= n; ++i) sum += fib(params, i) * fib(params, n - i);
    return sum;
  }
  Rational num = Rational(n - 1) * fib(params, n + 1) +
                 params.b() * Rational(n + 1) * fib(params, n - 1);
  return num / params.discriminant();
}

Rational multisection_term(const SequenceParams& params, long m, long j, long n,
                           SeqFamily kind) {
  if (m < 1) fail(errc::domain, "multisection stride must be >= 1");
  long idx = m * n + j;
  return kind == SeqFamily::fib ? fib(params, idx) : lucas(params, idx);
}

namespace {
std::mutex symbolic_mu;
std::vector<BivariatePoly> symbolic_fib;  // F(0), F(1), ... as polynomials
}  // namespace

BivariatePoly fib_symbolic(long n) {
  if (n < 0) fail(errc::domain, "symbolic mode covers n >= 0 only");
  std::lock_guard<std::mutex> lock(symbolic_mu);
  if (symbolic_fib.empty()) {
    symbolic_fib.push_back(BivariatePoly());             // F(0) = 0
    symbolic_fib.push_back(BivariatePoly::constant(1));  // F(1) = 1
  }
  BivariatePoly a = BivariatePoly::var_a();
  BivariatePoly b = BivariatePoly::var_b();
  while (symbolic_fib.size() <= static_cast<size_t>(n)) {
    size_t s = symbolic_fib.size();
    symbolic_fib.push_back(a * symbolic_fib[s - 1] + b * symbolic_fib[s - 2]);
  }
  return symbolic_fib[static_cast<size_t>(n)];
}

BivariatePoly lucas_symbolic(long n) {
  if (n < 0) fail(errc::domain, "symbolic mode covers n >= 0 only");
  if (n == 0) return BivariatePoly::constant(2);
  // L(n) = F(n+1) + b F(n-1) = a F(n) + 2b F(n-1), polynomial for n >= 1.
  return BivariatePoly::var_a() * fib_symbolic(n) +
         BivariatePoly::constant(2) * BivariatePoly::var_b() * fib_symbolic(n - 1);
}

SeqKind SeqKind::make(Tag tag, std::optional<SequenceParams> params, long m, long j,
                      long shift) {
  if (tag_needs_params(tag) && !params)
    fail(errc::domain, "this sequence kind requires parameters (a, b)");
  return SeqKind{tag, std::move(params), m, j, shift};
}

bool SeqKind::tag_needs_params(Tag tag) {
  return tag != Tag::harmonic && tag != Tag::catalan;
}

Rational SeqKind::term(long n) const {
  switch (tag) {
    case Tag::gen_fib: return fib(*params, n);
    case Tag::gen_lucas: return lucas(*params, n);
    case Tag::harmonic: return harmonic(n);
    case Tag::catalan: return Rational(catalan(n));
    case Tag::convolution: return fib_convolution(*params, n, ConvMode::direct);
    case Tag::msec_fib: return multisection_term(*params, m, j, n, SeqFamily::fib);
    case Tag::msec_lucas: return multisection_term(*params, m, j, n, SeqFamily::lucas);
    case Tag::product_hf: return harmonic(n) * fib(*params, n + shift);
    case Tag::product_cf: return Rational(catalan(n)) * fib(*params, n + shift);
    case Tag::product_hl: return harmonic(n) * lucas(*params, n + shift);
    case Tag::product_cl: return Rational(catalan(n)) * lucas(*params, n + shift);
  }
  fail(errc::domain, "unknown sequence kind");
}

std::string SeqKind::describe() const {
  auto with_params = [this](const std::string& head) {
    return params ? head + params->str() : head;
  };
  switch (tag) {
    case Tag::gen_fib: return with_params("F");
    case Tag::gen_lucas: return with_params("L");
    case Tag::harmonic: return "H";
    case Tag::catalan: return "C";
    case Tag::convolution: return with_params("sum F(i)F(n-i) ");
    case Tag::msec_fib:
      return with_params("F") + "(" + std::to_string(m) + "n+" + std::to_string(j) + ")";
    case Tag::msec_lucas:
      return with_params("L") + "(" + std::to_string(m) + "n+" + std::to_string(j) + ")";
    case Tag::product_hf: return "H(n)*" + with_params("F") + "(n+" + std::to_string(shift) + ")";
    case Tag::product_cf: return "C(n)*" + with_params("F") + "(n+" + std::to_string(shift) + ")";
    case Tag::product_hl: return "H(n)*" + with_params("L") + "(n+" + std::to_string(shift) + ")";
    case Tag::product_cl: return "C(n)*" + with_params("L") + "(n+" + std::to_string(shift) + ")";
  }
  return "?";
}

}  // namespace fibprod
