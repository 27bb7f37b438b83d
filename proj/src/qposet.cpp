#include "qschubert/qposet.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

namespace qschubert {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i + 1) --i;
  if (i < 0) return false;
  ++c[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  return true;
}

int level_of_window(const std::vector<int>& s, int n) {
  const int p = static_cast<int>(s.size());
  const int l = (s.front() - 1) / n;
  const int r = static_cast<int>(std::count_if(s.begin(), s.end(), [&](int v) { return v > (l + 1) * n; }));
  return p * l + r;
}

// Chain counting on window sequences; memo keyed by J-sequence.
class ChainCounter {
 public:
  ChainCounter(std::vector<int> bottom, int n) : bottom_(std::move(bottom)), n_(n) {}

  BigInt count(const std::vector<int>& s) {
    if (s == bottom_) return 1;
    if (!componentwise_leq(bottom_, s)) return 0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    BigInt total = 0;
    std::vector<int> t = s;
    const size_t p = s.size();
    for (size_t k = 0; k < p; ++k) {
      --t[k];
      if (is_window_sequence(t, n_)) total += count(t);
      ++t[k];
    }
    memo_.emplace(s, total);
    return total;
  }

 private:
  std::vector<int> bottom_;
  int n_;
  std::map<std::vector<int>, BigInt> memo_;
};

}  // namespace

void PosetContext::validate() const {
  if (m < 1 || p < 1 || q < 0)
    throw ValidationError("poset context requires m >= 1, p >= 1, q >= 0 (got m=" + std::to_string(m) +
                          ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
}

std::string QIndex::str() const { return "(" + join_ints(alpha) + ")^(" + std::to_string(level) + ")"; }
std::string JSeq::str() const { return "(" + join_ints(seq) + ")"; }

void validate(const QIndex& x, int m, int p) {
  if (static_cast<int>(x.alpha.size()) != p)
    throw ValidationError("index " + x.str() + " must have exactly p=" + std::to_string(p) + " entries");
  for (size_t i = 0; i < x.alpha.size(); ++i) {
    if (x.alpha[i] < 1 || x.alpha[i] > m + p)
      throw ValidationError("index " + x.str() + " has an entry outside [1, m+p]");
    if (i > 0 && x.alpha[i] <= x.alpha[i - 1])
      throw ValidationError("index " + x.str() + " is not strictly increasing");
  }
  if (x.level < 0) throw ValidationError("index " + x.str() + " has negative level");
}

void validate(const QIndex& x, const PosetContext& ctx) {
  ctx.validate();
  validate(x, ctx.m, ctx.p);
  if (x.level > ctx.q)
    throw ValidationError("index " + x.str() + " has level above q=" + std::to_string(ctx.q));
}

bool is_window_sequence(const std::vector<int>& s, int n) {
  if (s.empty() || s.front() < 1) return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] <= s[i - 1]) return false;
  return s.back() < s.front() + n;
}

long rank(const QIndex& x, int n) {
  long r = static_cast<long>(x.level) * n;
  for (size_t i = 0; i < x.alpha.size(); ++i) r += x.alpha[i] - static_cast<long>(i + 1);
  return r;
}

long rank(const JSeq& s) {
  long r = 0;
  for (size_t i = 0; i < s.seq.size(); ++i) r += s.seq[i] - static_cast<long>(i + 1);
  return r;
}

JSeq to_jseq(const QIndex& x, int n) {
  const int p = static_cast<int>(x.alpha.size());
  const int l = x.level / p;
  const int r = x.level % p;
  JSeq out;
  out.seq.resize(static_cast<size_t>(p));
  for (int k = 1; k <= p; ++k) {
    out.seq[static_cast<size_t>(k - 1)] = (k <= p - r) ? l * n + x.alpha[static_cast<size_t>(r + k - 1)]
                                                       : (l + 1) * n + x.alpha[static_cast<size_t>(k - p + r - 1)];
  }
  return out;
}

QIndex from_jseq(const JSeq& s, int n) {
  if (!is_window_sequence(s.seq, n))
    throw ValidationError("sequence " + s.str() + " is not a window sequence for m+p=" + std::to_string(n));
  QIndex x;
  x.level = level_of_window(s.seq, n);
  x.alpha.reserve(s.seq.size());
  for (int v : s.seq) x.alpha.push_back((v - 1) % n + 1);
  std::sort(x.alpha.begin(), x.alpha.end());
  return x;
}

bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool leq(const QIndex& x, const QIndex& y) {
  if (x.level > y.level) return false;
  const int p = static_cast<int>(x.alpha.size());
  const int shift = y.level - x.level;
  for (int i = 0; i < p - shift; ++i)
    if (x.alpha[static_cast<size_t>(i)] > y.alpha[static_cast<size_t>(shift + i)]) return false;
  return true;
}

bool leq(const QIndex& x, const QIndex& y, const PosetContext& ctx) {
  validate(x, ctx);
  validate(y, ctx);
  return leq(x, y);
}

QIndex poset_minimum(const PosetContext& ctx) {
  ctx.validate();
  QIndex x;
  x.alpha.resize(static_cast<size_t>(ctx.p));
  std::iota(x.alpha.begin(), x.alpha.end(), 1);
  return x;
}

QIndex poset_maximum(const PosetContext& ctx) {
  ctx.validate();
  QIndex x;
  x.alpha.resize(static_cast<size_t>(ctx.p));
  std::iota(x.alpha.begin(), x.alpha.end(), ctx.m + 1);
  x.level = ctx.q;
  return x;
}

std::vector<QIndex> covers(const QIndex& x, const PosetContext& ctx) {
  validate(x, ctx);
  const int n = ctx.n();
  std::vector<int> s = to_jseq(x, n).seq;
  std::vector<JSeq> found;
  for (size_t k = 0; k < s.size(); ++k) {
    --s[k];
    if (is_window_sequence(s, n)) found.push_back(JSeq{s});
    ++s[k];
  }
  std::sort(found.begin(), found.end());
  std::vector<QIndex> out;
  for (const auto& j : found) out.push_back(from_jseq(j, n));
  return out;
}

std::vector<QIndex> upper_covers(const QIndex& x, const PosetContext& ctx) {
  validate(x, ctx);
  const int n = ctx.n();
  std::vector<int> s = to_jseq(x, n).seq;
  std::vector<JSeq> found;
  for (size_t k = 0; k < s.size(); ++k) {
    ++s[k];
    if (is_window_sequence(s, n) && level_of_window(s, n) <= ctx.q) found.push_back(JSeq{s});
    --s[k];
  }
  std::sort(found.begin(), found.end());
  std::vector<QIndex> out;
  for (const auto& j : found) out.push_back(from_jseq(j, n));
  return out;
}

std::vector<QIndex> poset_elements(const PosetContext& ctx) {
  ctx.validate();
  const int n = ctx.n();
  std::vector<std::pair<std::pair<long, JSeq>, QIndex>> keyed;
  std::vector<int> alpha(static_cast<size_t>(ctx.p));
  std::iota(alpha.begin(), alpha.end(), 1);
  do {
    for (int a = 0; a <= ctx.q; ++a) {
      QIndex x{alpha, a};
      keyed.push_back({{rank(x, n), to_jseq(x, n)}, x});
    }
  } while (next_combination(alpha, n));
  std::sort(keyed.begin(), keyed.end());
  std::vector<QIndex> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

QIndex meet_by_search(const QIndex& x, const QIndex& y, const PosetContext& ctx) {
  validate(x, ctx);
  validate(y, ctx);
  std::vector<QIndex> lower;
  for (const auto& z : poset_elements(ctx))
    if (leq(z, x) && leq(z, y)) lower.push_back(z);
  for (const auto& z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](const QIndex& w) { return leq(w, z); })) return z;
  throw InternalConsistencyError("no greatest lower bound of " + x.str() + " and " + y.str());
}

QIndex join_by_search(const QIndex& x, const QIndex& y, const PosetContext& ctx) {
  validate(x, ctx);
  validate(y, ctx);
  std::vector<QIndex> upper;
  for (const auto& z : poset_elements(ctx))
    if (leq(x, z) && leq(y, z)) upper.push_back(z);
  for (const auto& z : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](const QIndex& w) { return leq(z, w); })) return z;
  throw InternalConsistencyError("no least upper bound of " + x.str() + " and " + y.str());
}

QIndex meet(const QIndex& x, const QIndex& y, const PosetContext& ctx) {
  validate(x, ctx);
  validate(y, ctx);
  const int n = ctx.n();
  const auto a = to_jseq(x, n).seq;
  const auto b = to_jseq(y, n).seq;
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = std::min(a[i], b[i]);
  if (is_window_sequence(c, n)) return from_jseq(JSeq{c}, n);
  std::cerr << "qschubert: componentwise meet of " << x.str() << " and " << y.str()
            << " left the window; falling back to search\n";
  return meet_by_search(x, y, ctx);
}

QIndex join(const QIndex& x, const QIndex& y, const PosetContext& ctx) {
  validate(x, ctx);
  validate(y, ctx);
  const int n = ctx.n();
  const auto a = to_jseq(x, n).seq;
  const auto b = to_jseq(y, n).seq;
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  if (is_window_sequence(c, n) && level_of_window(c, n) <= ctx.q) return from_jseq(JSeq{c}, n);
  std::cerr << "qschubert: componentwise join of " << x.str() << " and " << y.str()
            << " left the window; falling back to search\n";
  return join_by_search(x, y, ctx);
}

BigInt chain_count(const QIndex& top, const QIndex& bottom, const PosetContext& ctx) {
  validate(top, ctx);
  validate(bottom, ctx);
  if (!leq(bottom, top)) return 0;
  const int n = ctx.n();
  ChainCounter counter(to_jseq(bottom, n).seq, n);
  return counter.count(to_jseq(top, n).seq);
}

BigInt degree(const PosetContext& ctx) { return chain_count(poset_maximum(ctx), poset_minimum(ctx), ctx); }

BigInt multichain_count(int t, const PosetContext& ctx) {
  if (t < 0) throw ValidationError("multichain size must be non-negative");
  if (t == 0) return 1;
  const auto elems = poset_elements(ctx);
  const size_t size = elems.size();
  // Canonical order is a linear extension, so y <= x implies index(y) <= index(x).
  std::vector<BigInt> ending(size, BigInt(1));
  for (int step = 2; step <= t; ++step) {
    std::vector<BigInt> next(size, BigInt(0));
    for (size_t i = 0; i < size; ++i)
      for (size_t j = 0; j <= i; ++j)
        if (leq(elems[j], elems[i])) next[i] += ending[j];
    ending = std::move(next);
  }
  BigInt total = 0;
  for (const auto& v : ending) total += v;
  return total;
}

Poset::Poset(const PosetContext& ctx) : ctx_(ctx), elements_(poset_elements(ctx)) {
  const int n = ctx_.n();
  for (size_t i = 0; i < elements_.size(); ++i) {
    jseqs_.push_back(to_jseq(elements_[i], n));
    ranks_.push_back(rank(elements_[i], n));
    index_.emplace(jseqs_.back().seq, i);
  }
  covers_.resize(elements_.size());
  chains_.assign(elements_.size(), BigInt(0));
  for (size_t i = 0; i < elements_.size(); ++i) {
    std::vector<int> s = jseqs_[i].seq;
    for (size_t k = 0; k < s.size(); ++k) {
      --s[k];
      if (is_window_sequence(s, n)) covers_[i].push_back(index_.at(s));
      ++s[k];
    }
    std::sort(covers_[i].begin(), covers_[i].end());
    if (covers_[i].empty()) {
      chains_[i] = 1;
    } else {
      for (size_t c : covers_[i]) chains_[i] += chains_[c];
    }
  }
}

size_t Poset::index_of(const QIndex& x) const {
  validate(x, ctx_);
  return index_.at(to_jseq(x, ctx_.n()).seq);
}

std::vector<BigInt> Poset::multichain_counts(int t_max) const {
  std::vector<BigInt> out{BigInt(1)};
  if (t_max <= 0) return out;
  const size_t size = elements_.size();
  std::vector<std::vector<size_t>> below(size);
  for (size_t i = 0; i < size; ++i)
    for (size_t j = 0; j <= i; ++j)
      if (componentwise_leq(jseqs_[j].seq, jseqs_[i].seq)) below[i].push_back(j);
  std::vector<BigInt> ending(size, BigInt(1));
  BigInt total = 0;
  for (const auto& v : ending) total += v;
  out.push_back(total);
  for (int t = 2; t <= t_max; ++t) {
    std::vector<BigInt> next(size, BigInt(0));
    for (size_t i = 0; i < size; ++i)
      for (size_t j : below[i]) next[i] += ending[j];
    ending = std::move(next);
    total = 0;
    for (const auto& v : ending) total += v;
    out.push_back(total);
  }
  return out;
}

}  // namespace qschubert
