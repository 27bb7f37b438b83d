// The poset C^q_{m,p} of quantum Plücker coordinates and its window-sequence
// avatar. Elements are alpha^(a): a p-subset alpha of [m+p] together with a
// level 0 <= a <= q.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qschubert/scalar.hpp"

namespace qschubert {

struct PosetContext {
  int m = 1;
  int p = 1;
  int q = 0;

  int n() const { return m + p; }
  /// Dimension of the quantum Grassmannian, q(m+p) + mp; the rank of the maximum.
  long N() const { return static_cast<long>(q) * n() + static_cast<long>(m) * p; }
  /// Number of elements, (q+1) * binomial(m+p, p).
  BigInt size() const { return BigInt(q + 1) * binomial(n(), p); }

  void validate() const;
  friend bool operator==(const PosetContext&, const PosetContext&) = default;
};

struct QIndex {
  std::vector<int> alpha;
  int level = 0;

  friend auto operator<=>(const QIndex&, const QIndex&) = default;
  std::string str() const;
};

/// Strictly increasing positive p-tuple with seq.back() < seq.front() + m + p.
struct JSeq {
  std::vector<int> seq;

  friend auto operator<=>(const JSeq&, const JSeq&) = default;
  std::string str() const;
};

/// Throws ValidationError unless alpha is a strictly increasing p-subset of [m+p]
/// and 0 <= level <= ctx.q.
void validate(const QIndex& x, const PosetContext& ctx);
/// Same check without an upper bound on the level.
void validate(const QIndex& x, int m, int p);
bool is_window_sequence(const std::vector<int>& s, int n);

long rank(const QIndex& x, int n);
long rank(const JSeq& s);

JSeq to_jseq(const QIndex& x, int n);
QIndex from_jseq(const JSeq& s, int n);

/// The defining order on alpha^(a) (no context validation).
bool leq(const QIndex& x, const QIndex& y);
bool leq(const QIndex& x, const QIndex& y, const PosetContext& ctx);
/// Componentwise order on sequences of equal length.
bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b);

QIndex poset_minimum(const PosetContext& ctx);
QIndex poset_maximum(const PosetContext& ctx);

/// Lower covers y of x, in canonical order.
std::vector<QIndex> covers(const QIndex& x, const PosetContext& ctx);
/// Upper covers of x inside C^q_{m,p}.
std::vector<QIndex> upper_covers(const QIndex& x, const PosetContext& ctx);

QIndex meet(const QIndex& x, const QIndex& y, const PosetContext& ctx);
QIndex join(const QIndex& x, const QIndex& y, const PosetContext& ctx);
/// Exhaustive lattice oracles: scan every element of the poset.
QIndex meet_by_search(const QIndex& x, const QIndex& y, const PosetContext& ctx);
QIndex join_by_search(const QIndex& x, const QIndex& y, const PosetContext& ctx);

/// All elements ordered by (rank, lexicographic J-sequence).
std::vector<QIndex> poset_elements(const PosetContext& ctx);

/// Number of saturated chains from bottom up to top; 0 when bottom is not <= top.
BigInt chain_count(const QIndex& top, const QIndex& bottom, const PosetContext& ctx);

/// d(m,p;q): the number of maximal chains of C^q_{m,p}.
BigInt degree(const PosetContext& ctx);

/// Number of multichains x_1 <= x_2 <= ... <= x_t.
BigInt multichain_count(int t, const PosetContext& ctx);

/// A fully materialised poset: canonical element order, cover lists as
/// indices, and chain counts from the minimum.
class Poset {
 public:
  explicit Poset(const PosetContext& ctx);

  const PosetContext& context() const { return ctx_; }
  const std::vector<QIndex>& elements() const { return elements_; }
  const std::vector<JSeq>& jseqs() const { return jseqs_; }
  const std::vector<long>& ranks() const { return ranks_; }
  const std::vector<std::vector<size_t>>& lower_covers() const { return covers_; }
  const std::vector<BigInt>& chains_from_minimum() const { return chains_; }
  size_t index_of(const QIndex& x) const;
  size_t size() const { return elements_.size(); }

  /// Hilbert values H(0..t_max) of the Stanley-Reisner ring of the order complex.
  std::vector<BigInt> multichain_counts(int t_max) const;

 private:
  PosetContext ctx_;
  std::vector<QIndex> elements_;
  std::vector<JSeq> jseqs_;
  std::vector<long> ranks_;
  std::vector<std::vector<size_t>> covers_;
  std::vector<BigInt> chains_;
  std::map<std::vector<int>, size_t> index_;
};

}  // namespace qschubert
