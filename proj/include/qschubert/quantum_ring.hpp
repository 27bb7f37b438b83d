// The small quantum cohomology ring of Grass(p, m+p) in the basis S_I indexed
// by window sequences, with q^a sigma_alpha = S_{J(alpha^(a))}.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschubert/qposet.hpp"
#include "qschubert/scalar.hpp"

namespace qschubert {

class RingElem {
 public:
  RingElem(int m, int p);

  static RingElem identity(int m, int p);
  static RingElem basis(int m, int p, const JSeq& key);
  /// q^level sigma_alpha.
  static RingElem schubert(const QIndex& x, int m);

  int m() const { return m_; }
  int p() const { return p_; }
  int n() const { return m_ + p_; }
  const std::map<JSeq, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coeff(const JSeq& key) const;
  void add(const JSeq& key, const BigInt& c);
  /// True when all keys share one rank (vacuously for zero).
  bool is_homogeneous() const;

  RingElem& operator+=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator*(const BigInt& s, const RingElem& x);
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  /// e.g. "S(1,3) + 2*S(2,4)"
  std::string str() const;

 private:
  int m_;
  int p_;
  std::map<JSeq, BigInt> terms_;
};

/// q * S_I = S_{(i_2, ..., i_p, i_1 + n)}.
JSeq shift_level(const JSeq& key, int n, int levels = 1);

/// h_a * x by the window Pieri rule; a in [0, m].
RingElem pieri_h(int a, const RingElem& x);

struct GiambelliTerm {
  int coefficient = 0;
  std::vector<int> h_indices;  // weakly decreasing, length p

  friend bool operator==(const GiambelliTerm&, const GiambelliTerm&) = default;
};

/// Expansion of det(h_{alpha_i - j}) into monomials in h_0..h_m; monomials
/// containing h_b with b < 0 or b > m are dropped.
std::vector<GiambelliTerm> giambelli(const std::vector<int>& alpha, int m);

/// Evaluate a Giambelli expansion on the identity class by repeated Pieri.
RingElem apply_giambelli(const std::vector<GiambelliTerm>& terms, int m, int p);

RingElem quantum_product(const RingElem& x, const RingElem& y);

struct QLREntry {
  std::vector<int> gamma;
  int d = 0;
  BigInt n;
};

struct QLRTable {
  std::vector<int> alpha;
  std::vector<int> beta;
  int m = 0;
  int p = 0;
  std::vector<QLREntry> entries;  // sorted by (d, gamma), zero entries omitted

  BigInt coefficient(const std::vector<int>& gamma, int d) const;
};

/// All N^gamma_{alpha beta}(m,p) from sigma_alpha * sigma_beta.
QLRTable qlr(const std::vector<int>& alpha, const std::vector<int>& beta, int m, int p);

using Partition = std::vector<int>;  // weakly decreasing, padded with zeros to length p

/// lambda_k = alpha_{p+1-k} - (p+1-k).
Partition partition_of(const std::vector<int>& alpha);
std::vector<int> alpha_of(const Partition& lambda);
/// alpha^vee_i = m+p+1 - alpha_{p+1-i}.
std::vector<int> dual_index(const std::vector<int>& alpha, int m);

/// Littlewood-Richardson coefficients c^nu_{lambda mu} for every nu inside the
/// p x m box, by enumerating LR skew tableaux of shape nu/lambda and weight mu.
std::map<Partition, BigInt> classical_lr_oracle(const Partition& lambda, const Partition& mu, int p, int m);

/// h_1^l for l = 0..l_max.
std::vector<RingElem> h1_powers(int m, int p, long l_max);
/// Coefficient of S_{J(max)} in h_1^N.
BigInt h1_power_degree(int m, int p, int q);

struct ChainIdentity {
  BigInt lhs;  // sum over rank-l alpha^(a) of f^{alpha^(a)} times the product coefficient
  BigInt rhs;  // chains from beta^(b) up to gamma^(c)
  bool ok() const { return lhs == rhs; }
};

ChainIdentity chain_identity_check(const QIndex& beta, long l, const QIndex& gamma, int m, int p);

struct WaltonScan {
  std::vector<int> m_values;
  std::vector<BigInt> values;
  std::vector<int> decreases;  // m where N(m) < N(m-1): counterexample candidates
};

/// N^gamma_{alpha beta}(m,p) across m in [m_lo, m_hi], with the index
/// sequences held fixed.
WaltonScan walton_scan(const std::vector<int>& alpha, const std::vector<int>& beta, const std::vector<int>& gamma,
                       int d, int m_lo, int m_hi, int p);

}  // namespace qschubert
