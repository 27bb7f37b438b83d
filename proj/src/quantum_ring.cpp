#include "qschubert/quantum_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qschubert {

namespace {

void check_same_context(const RingElem& x, const RingElem& y) {
  if (x.m() != y.m() || x.p() != y.p()) throw ValidationError("ring elements from different Grassmannians");
}

}  // namespace

RingElem::RingElem(int m, int p) : m_(m), p_(p) { PosetContext{m, p, 0}.validate(); }

RingElem RingElem::identity(int m, int p) {
  std::vector<int> seq(static_cast<size_t>(p));
  std::iota(seq.begin(), seq.end(), 1);
  return basis(m, p, JSeq{seq});
}

RingElem RingElem::basis(int m, int p, const JSeq& key) {
  RingElem out(m, p);
  out.add(key, 1);
  return out;
}

RingElem RingElem::schubert(const QIndex& x, int m) {
  const int p = static_cast<int>(x.alpha.size());
  return basis(m, p, to_jseq(x, m + p));
}

BigInt RingElem::coeff(const JSeq& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void RingElem::add(const JSeq& key, const BigInt& c) {
  if (static_cast<int>(key.seq.size()) != p_ || !is_window_sequence(key.seq, n()))
    throw ValidationError("ring basis key " + key.str() + " is not a window sequence");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElem::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long r = rank(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return rank(t.first) == r; });
}

RingElem& RingElem::operator+=(const RingElem& o) {
  check_same_context(*this, o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

RingElem operator*(const BigInt& s, const RingElem& x) {
  RingElem out(x.m_, x.p_);
  if (s == 0) return out;
  for (const auto& [k, c] : x.terms_) out.terms_.emplace(k, s * c);
  return out;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const BigInt mag = abs(c);
    if (mag != 1) out << mag.get_str() << "*";
    out << "S" << k.str();
  }
  return out.str();
}

JSeq shift_level(const JSeq& key, int n, int levels) {
  if (levels < 0) throw ValidationError("shift_level: negative level shift");
  std::vector<int> s = key.seq;
  for (int k = 0; k < levels; ++k) {
    std::rotate(s.begin(), s.begin() + 1, s.end());
    s.back() += n;
  }
  return JSeq{s};
}

RingElem pieri_h(int a, const RingElem& x) {
  if (a < 0 || a > x.m()) throw ValidationError("pieri_h: a must lie in [0, m]");
  if (a == 0) return x;
  const int p = x.p(), n = x.n();
  RingElem out(x.m(), p);
  std::vector<int> j(static_cast<size_t>(p));
  for (const auto& [key, c] : x.terms()) {
    const auto& i = key.seq;
    // j_k ranges over [i_k, i_{k+1} - 1]; the last slot is capped by i_1 + n - 1
    auto rec = [&](auto&& self, int k, int left) -> void {
      const auto kk = static_cast<size_t>(k);
      const int hi = (k + 1 < p) ? i[kk + 1] - 1 : i[0] + n - 1;
      if (k == p - 1) {
        if (i[kk] + left <= hi) {
          j[kk] = i[kk] + left;
          out.add(JSeq{j}, c);
        }
        return;
      }
      for (int v = i[kk]; v <= hi && v - i[kk] <= left; ++v) {
        j[kk] = v;
        self(self, k + 1, left - (v - i[kk]));
      }
    };
    rec(rec, 0, a);
  }
  return out;
}

std::vector<GiambelliTerm> giambelli(const std::vector<int>& alpha, int m) {
  const int p = static_cast<int>(alpha.size());
  validate(QIndex{alpha, 0}, m, p);
  std::map<std::vector<int>, int> acc;
  std::vector<int> perm(static_cast<size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> h;
    bool zero = false;
    for (int i = 0; i < p; ++i) {
      const int b = alpha[static_cast<size_t>(i)] - (perm[static_cast<size_t>(i)] + 1);
      if (b < 0 || b > m) {
        zero = true;
        break;
      }
      h.push_back(b);
    }
    if (zero) continue;
    int inversions = 0;
    for (int i = 0; i < p; ++i)
      for (int k = i + 1; k < p; ++k) inversions += perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(k)];
    std::sort(h.begin(), h.end(), std::greater<>());
    acc[h] += sign_of_parity(inversions);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<GiambelliTerm> out;
  for (auto& [h, c] : acc)
    if (c != 0) out.push_back({c, h});
  return out;
}

RingElem apply_giambelli(const std::vector<GiambelliTerm>& terms, int m, int p) {
  RingElem out(m, p);
  for (const auto& t : terms) {
    RingElem x = RingElem::identity(m, p);
    for (int b : t.h_indices) x = pieri_h(b, x);
    out += BigInt(t.coefficient) * x;
  }
  return out;
}

RingElem quantum_product(const RingElem& x, const RingElem& y) {
  check_same_context(x, y);
  const int m = x.m(), p = x.p(), n = x.n();
  RingElem out(m, p);
  for (const auto& [key, c] : x.terms()) {
    const QIndex idx = from_jseq(key, n);
    RingElem partial(m, p);
    for (const auto& t : giambelli(idx.alpha, m)) {
      RingElem z = y;
      for (int b : t.h_indices) z = pieri_h(b, z);
      partial += BigInt(t.coefficient) * z;
    }
    RingElem shifted(m, p);
    for (const auto& [k, v] : partial.terms()) shifted.add(shift_level(k, n, idx.level), v);
    out += c * shifted;
  }
  return out;
}

BigInt QLRTable::coefficient(const std::vector<int>& gamma, int d) const {
  for (const auto& e : entries)
    if (e.gamma == gamma && e.d == d) return e.n;
  return 0;
}

QLRTable qlr(const std::vector<int>& alpha, const std::vector<int>& beta, int m, int p) {
  validate(QIndex{alpha, 0}, m, p);
  validate(QIndex{beta, 0}, m, p);
  const RingElem prod = quantum_product(RingElem::schubert({alpha, 0}, m), RingElem::schubert({beta, 0}, m));
  QLRTable table{alpha, beta, m, p, {}};
  for (const auto& [k, c] : prod.terms()) {
    const QIndex g = from_jseq(k, m + p);
    table.entries.push_back({g.alpha, g.level, c});
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const QLREntry& a, const QLREntry& b) { return std::tie(a.d, a.gamma) < std::tie(b.d, b.gamma); });
  return table;
}

Partition partition_of(const std::vector<int>& alpha) {
  const int p = static_cast<int>(alpha.size());
  Partition lambda(static_cast<size_t>(p));
  for (int k = 1; k <= p; ++k) lambda[static_cast<size_t>(k - 1)] = alpha[static_cast<size_t>(p - k)] - (p + 1 - k);
  return lambda;
}

std::vector<int> alpha_of(const Partition& lambda) {
  const int p = static_cast<int>(lambda.size());
  std::vector<int> alpha(static_cast<size_t>(p));
  for (int k = 1; k <= p; ++k) alpha[static_cast<size_t>(p - k)] = lambda[static_cast<size_t>(k - 1)] + (p + 1 - k);
  return alpha;
}

std::vector<int> dual_index(const std::vector<int>& alpha, int m) {
  const int p = static_cast<int>(alpha.size());
  validate(QIndex{alpha, 0}, m, p);
  std::vector<int> out(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) out[static_cast<size_t>(i)] = m + p + 1 - alpha[static_cast<size_t>(p - 1 - i)];
  return out;
}

namespace {

void check_partition(const Partition& lambda, int p, int m) {
  if (static_cast<int>(lambda.size()) != p) throw ValidationError("partition must have exactly p parts (pad with zeros)");
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || lambda[i] > m) throw ValidationError("partition does not fit in the p x m box");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw ValidationError("partition must be weakly decreasing");
  }
}

/// Number of LR tableaux of shape nu/lambda and content mu.
long count_lr_tableaux(const Partition& nu, const Partition& lambda, const Partition& mu) {
  const int rows = static_cast<int>(nu.size());
  const int letters = static_cast<int>(mu.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) t[static_cast<size_t>(r)].assign(static_cast<size_t>(nu[static_cast<size_t>(r)]), 0);
  std::vector<int> used(static_cast<size_t>(letters), 0);
  long count = 0;

  // cells visited in reverse reading order: rows top to bottom, right to left
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == rows) {
      ++count;
      return;
    }
    const int lo = lambda[static_cast<size_t>(r)];
    if (c < lo) {
      self(self, r + 1, r + 1 < rows ? nu[static_cast<size_t>(r + 1)] - 1 : 0);
      return;
    }
    const auto rr = static_cast<size_t>(r);
    const auto cc = static_cast<size_t>(c);
    for (int v = 1; v <= letters; ++v) {
      const auto vv = static_cast<size_t>(v - 1);
      if (used[vv] >= mu[vv]) continue;
      if (v > 1 && used[vv] + 1 > used[vv - 1]) continue;  // lattice word
      if (c + 1 < nu[rr] && v > t[rr][cc + 1]) continue;   // rows weakly increase
      if (r > 0 && c < nu[rr - 1] && c >= lambda[rr - 1] && v <= t[rr - 1][cc]) continue;  // columns strictly increase
      t[rr][cc] = v;
      ++used[vv];
      self(self, r, c - 1);
      --used[vv];
      t[rr][cc] = 0;
    }
  };
  rec(rec, 0, rows > 0 ? nu[0] - 1 : 0);
  return count;
}

}  // namespace

std::map<Partition, BigInt> classical_lr_oracle(const Partition& lambda, const Partition& mu, int p, int m) {
  check_partition(lambda, p, m);
  check_partition(mu, p, m);
  const int target = std::accumulate(lambda.begin(), lambda.end(), 0) + std::accumulate(mu.begin(), mu.end(), 0);
  std::map<Partition, BigInt> out;
  Partition nu(static_cast<size_t>(p));
  auto rec = [&](auto&& self, int k, int cap, int left) -> void {
    if (k == p) {
      if (left != 0) return;
      const long c = count_lr_tableaux(nu, lambda, mu);
      if (c != 0) out[nu] = c;
      return;
    }
    const auto kk = static_cast<size_t>(k);
    for (int v = std::min(cap, left); v >= lambda[kk]; --v) {
      nu[kk] = v;
      self(self, k + 1, v, left - v);
    }
  };
  rec(rec, 0, m, target);
  return out;
}

std::vector<RingElem> h1_powers(int m, int p, long l_max) {
  std::vector<RingElem> out{RingElem::identity(m, p)};
  for (long l = 1; l <= l_max; ++l) out.push_back(pieri_h(1, out.back()));
  return out;
}

BigInt h1_power_degree(int m, int p, int q) {
  const PosetContext ctx{m, p, q};
  ctx.validate();
  const auto powers = h1_powers(m, p, ctx.N());
  return powers.back().coeff(to_jseq(poset_maximum(ctx), ctx.n()));
}

ChainIdentity chain_identity_check(const QIndex& beta, long l, const QIndex& gamma, int m, int p) {
  const int n = m + p;
  validate(beta, m, p);
  validate(gamma, m, p);
  if (rank(gamma, n) != rank(beta, n) + l) throw ValidationError("chain_identity_check: rank(gamma) must equal rank(beta) + l");
  const int q = std::max(gamma.level, static_cast<int>(l / n) + 1);
  const PosetContext ctx{m, p, q};
  const QIndex lo = poset_minimum(ctx);
  const RingElem beta_class = RingElem::schubert(beta, m);
  const JSeq target = to_jseq(gamma, n);

  ChainIdentity out;
  for (const auto& x : poset_elements(ctx)) {
    if (rank(x, n) != l) continue;
    const BigInt f = chain_count(x, lo, ctx);
    if (f == 0) continue;
    out.lhs += f * quantum_product(RingElem::schubert(x, m), beta_class).coeff(target);
  }
  out.rhs = chain_count(gamma, beta, ctx);
  return out;
}

WaltonScan walton_scan(const std::vector<int>& alpha, const std::vector<int>& beta, const std::vector<int>& gamma,
                       int d, int m_lo, int m_hi, int p) {
  if (m_hi < m_lo) throw ValidationError("walton_scan: empty m range");
  validate(QIndex{gamma, 0}, m_lo, p);
  WaltonScan out;
  for (int m = m_lo; m <= m_hi; ++m) {
    out.m_values.push_back(m);
    out.values.push_back(qlr(alpha, beta, m, p).coefficient(gamma, d));
    if (out.values.size() > 1 && out.values.back() < out.values[out.values.size() - 2]) out.decreases.push_back(m);
  }
  return out;
}

}  // namespace qschubert
