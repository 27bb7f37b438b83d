// Closed and semi-closed evaluations of d(m,p;q) and of Schubert degrees.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qschubert/qposet.hpp"
#include "qschubert/scalar.hpp"

namespace qschubert {

/// Alternating-sum closed formula for d(m,p;q), summed over weak compositions
/// of q into p parts. Exact rational evaluation, integrality asserted.
BigInt d_closed(int m, int p, int q);

/// Degree of Grass(p, m+p) in its Plücker embedding.
BigInt grassmann_degree(int m, int p);

/// Schubert's degree g(I), extended to all integer sequences as an alternating
/// function with 1/l! = 0 for l < 0. Zero on repeats and on non-positive entries.
BigInt schubert_g(const std::vector<int>& seq);

/// Sum of g(i_1 + b_1 n, ..., i_p + b_p n) over integer b with b_1 + ... + b_p = 0.
/// `slack` widens the enumeration box beyond the positivity bound; the extra
/// summands all vanish.
BigInt windowed_degree(const std::vector<int>& seq, int n, int slack = 0);
/// Same, with window validation against the context.
BigInt windowed_degree(const JSeq& seq, const PosetContext& ctx);

/// A degree function on arbitrary integer p-tuples.
using DegreeFunction = std::function<BigInt(const std::vector<int>&)>;

struct RecursionViolation {
  std::string condition;  // "recursion", "initial", "A", "B" or "C"
  std::vector<int> seq;
  BigInt value;
  BigInt expected;
};

struct RecursionReport {
  long sequences_checked = 0;
  std::vector<RecursionViolation> violations;
  bool ok() const { return violations.empty(); }
  long count(const std::string& condition) const;
};

/// Checks the recursion, the initial condition d(1..p) = 1 and the boundary
/// conditions (A) repeats, (B) leading zero, (C) i_p = i_1 + m + p on every
/// weakly increasing non-negative sequence with i_p <= i_1 + m + p and
/// sum(i_j - j) <= max_rank.
RecursionReport recursion_oracle(const DegreeFunction& f, int m, int p, long max_rank);

}  // namespace qschubert
