#include "qschubert/closed_formulas.hpp"

#include <algorithm>
#include <numeric>

namespace qschubert {

namespace {

void for_each_weak_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> nu(static_cast<size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      nu[static_cast<size_t>(pos)] = remaining;
      visit(nu);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      nu[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

BigInt d_closed(int m, int p, int q) {
  PosetContext{m, p, q}.validate();
  const int n = m + p;
  const long big_n = static_cast<long>(q) * n + static_cast<long>(m) * p;
  Rational sum = 0;
  for_each_weak_composition(q, p, [&](const std::vector<int>& nu) {
    BigInt numerator = 1;
    for (int j = 1; j <= p; ++j)
      for (int k = j + 1; k <= p; ++k)
        numerator *= (k - j) + (nu[static_cast<size_t>(k - 1)] - nu[static_cast<size_t>(j - 1)]) * n;
    BigInt denominator = 1;
    for (int j = 1; j <= p; ++j) denominator *= factorial(m + j + static_cast<long>(nu[static_cast<size_t>(j - 1)]) * n - 1);
    Rational term(numerator, denominator);
    term.canonicalize();
    sum += term;
  });
  Rational total = Rational(factorial(big_n)) * sum;
  if (static_cast<long>(q) * (p + 1) % 2 != 0) total = -total;
  return to_bigint(total);
}

BigInt grassmann_degree(int m, int p) {
  if (m < 1 || p < 1) throw ValidationError("grassmann_degree requires m, p >= 1");
  BigInt numerator = factorial(static_cast<long>(m) * p);
  for (int j = 1; j <= p; ++j)
    for (int k = j + 1; k <= p; ++k) numerator *= (k - j);
  BigInt denominator = 1;
  for (int j = 1; j <= p; ++j) denominator *= factorial(m + j - 1);
  if (numerator % denominator != 0) throw InternalConsistencyError("non-integral Grassmannian degree");
  return numerator / denominator;
}

BigInt schubert_g(const std::vector<int>& seq) {
  std::vector<int> s = seq;
  int sign = 1;
  // insertion sort, tracking the permutation sign
  for (size_t i = 1; i < s.size(); ++i)
    for (size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1) return 0;
    if (i > 0 && s[i] == s[i - 1]) return 0;
  }
  long size = 0;
  for (size_t i = 0; i < s.size(); ++i) size += s[i] - static_cast<long>(i + 1);
  BigInt numerator = factorial(size);
  for (size_t j = 0; j < s.size(); ++j)
    for (size_t k = j + 1; k < s.size(); ++k) numerator *= (s[k] - s[j]);
  BigInt denominator = 1;
  for (int v : s) denominator *= factorial(v - 1);
  if (numerator % denominator != 0) throw InternalConsistencyError("non-integral Schubert degree");
  BigInt out = numerator / denominator;
  return sign > 0 ? out : BigInt(-out);
}

BigInt windowed_degree(const std::vector<int>& seq, int n, int slack) {
  if (n < 1) throw ValidationError("window width must be positive");
  const size_t p = seq.size();
  if (p == 0) return 1;
  // b_j >= lo_j keeps entry j positive; anything below contributes zero.
  std::vector<long> lo(p);
  for (size_t j = 0; j < p; ++j) lo[j] = ceil_div(1 - seq[j], n) - slack;
  std::vector<long> tail_lo(p + 1, 0);
  for (size_t j = p; j-- > 0;) tail_lo[j] = tail_lo[j + 1] + lo[j];

  BigInt total = 0;
  std::vector<int> shifted(p);
  auto rec = [&](auto&& self, size_t pos, long target) -> void {
    if (pos == p - 1) {
      if (target < lo[pos]) return;
      shifted[pos] = seq[pos] + static_cast<int>(target * n);
      total += schubert_g(shifted);
      return;
    }
    for (long b = lo[pos]; b <= target - tail_lo[pos + 1]; ++b) {
      shifted[pos] = seq[pos] + static_cast<int>(b * n);
      self(self, pos + 1, target - b);
    }
  };
  rec(rec, 0, 0);
  return total;
}

BigInt windowed_degree(const JSeq& seq, const PosetContext& ctx) {
  ctx.validate();
  if (static_cast<int>(seq.seq.size()) != ctx.p || !is_window_sequence(seq.seq, ctx.n()))
    throw ValidationError("windowed_degree: " + seq.str() + " is not a window sequence");
  return windowed_degree(seq.seq, ctx.n());
}

long RecursionReport::count(const std::string& condition) const {
  return static_cast<long>(std::count_if(violations.begin(), violations.end(),
                                         [&](const RecursionViolation& v) { return v.condition == condition; }));
}

RecursionReport recursion_oracle(const DegreeFunction& f, int m, int p, long max_rank) {
  PosetContext{m, p, 0}.validate();
  const int n = m + p;
  RecursionReport report;
  std::vector<int> initial(static_cast<size_t>(p));
  std::iota(initial.begin(), initial.end(), 1);

  auto check = [&](const std::vector<int>& s) {
    ++report.sequences_checked;
    const BigInt value = f(s);
    auto expect = [&](const char* cond, const BigInt& expected) {
      if (value != expected) report.violations.push_back({cond, s, value, expected});
    };
    bool repeated = false;
    for (size_t i = 1; i < s.size(); ++i) repeated = repeated || s[i] == s[i - 1];
    const bool leading_zero = s.front() == 0;
    const bool full_window = s.back() == s.front() + n;
    if (repeated) expect("A", 0);
    if (leading_zero) expect("B", 0);
    if (full_window) expect("C", 0);
    if (repeated || leading_zero || full_window) return;
    if (s == initial) {
      expect("initial", 1);
      return;
    }
    BigInt sum = 0;
    std::vector<int> t = s;
    for (size_t k = 0; k < t.size(); ++k) {
      --t[k];
      sum += f(t);
      ++t[k];
    }
    expect("recursion", sum);
  };

  // i_1 is bounded because rank >= p*i_1 - p(p+1)/2.
  const long first_max = (max_rank + static_cast<long>(p) * (p + 1) / 2) / p;
  std::vector<int> s(static_cast<size_t>(p));
  auto rec = [&](auto&& self, size_t pos, long partial_rank) -> void {
    if (pos == s.size()) {
      if (partial_rank <= max_rank) check(s);
      return;
    }
    const int lower = pos == 0 ? 0 : s[pos - 1];
    const int upper = pos == 0 ? static_cast<int>(first_max) : s[0] + n;
    for (int v = lower; v <= upper; ++v) {
      // remaining entries are >= v, so the rank only grows from here
      long min_rank = partial_rank;
      for (size_t k = pos; k < s.size(); ++k) min_rank += v - static_cast<long>(k + 1);
      if (min_rank > max_rank) break;
      s[pos] = v;
      self(self, pos + 1, partial_rank + v - static_cast<long>(pos + 1));
    }
  };
  rec(rec, 0, 0);
  return report;
}

}  // namespace qschubert
