// Dense exact linear algebra on Eigen matrices, plus Laplace-expansion
// determinants over arbitrary commutative rings.
#pragma once

#include <bit>
#include <cstdint>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "qschubert/scalar.hpp"

namespace qschubert {

/// Determinant by Gaussian elimination; exact for field scalars such as Rational.
template <typename Scalar>
Scalar determinant(MatrixX<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ValidationError("determinant of a non-square matrix");
  Scalar det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Scalar f = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

/// Exact elimination for Rational; partial pivoting on magnitude for floating
/// and complex scalars.
template <typename Scalar>
Scalar dense_determinant(MatrixX<Scalar> a) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return determinant(std::move(a));
  } else {
    using std::abs;
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw ValidationError("determinant of a non-square matrix");
    Scalar det = Scalar(1);
    for (Eigen::Index col = 0; col < n; ++col) {
      Eigen::Index pivot = col;
      for (Eigen::Index r = col + 1; r < n; ++r)
        if (abs(a(r, col)) > abs(a(pivot, col))) pivot = r;
      if (a(pivot, col) == Scalar(0)) return Scalar(0);
      if (pivot != col) {
        a.row(pivot).swap(a.row(col));
        det = -det;
      }
      det *= a(col, col);
      for (Eigen::Index r = col + 1; r < n; ++r) {
        const Scalar f = a(r, col) / a(col, col);
        for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      }
    }
    return det;
  }
}

/// Reduced row echelon form in place. `pivots[k]` is the pivot column of row k.
template <typename Scalar>
void reduce_row_echelon(MatrixX<Scalar>& a, std::vector<Eigen::Index>& pivots) {
  pivots.clear();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
}

template <typename Scalar>
Eigen::Index rank(MatrixX<Scalar> a) {
  std::vector<Eigen::Index> pivots;
  reduce_row_echelon(a, pivots);
  return static_cast<Eigen::Index>(pivots.size());
}

/// Basis of the right null space, one basis vector per column.
template <typename Scalar>
MatrixX<Scalar> kernel_basis(MatrixX<Scalar> a) {
  std::vector<Eigen::Index> pivots;
  reduce_row_echelon(a, pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free.push_back(c);

  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    const auto f = free[k];
    basis(f, static_cast<Eigen::Index>(k)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -a(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

/// Laplace expansion along rows with memoisation on the set of unused columns.
/// Works over any commutative ring; `one` is the ring's unit. Limited to 31 columns.
template <typename Ring>
Ring cofactor_determinant(const std::vector<std::vector<Ring>>& a, const Ring& one) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return one;
  if (n > 31) throw ValidationError("cofactor_determinant: matrix too large");
  std::unordered_map<std::uint32_t, Ring> memo;
  // det of rows [n - popcount(mask), n) restricted to the columns in mask
  auto rec = [&](auto&& self, std::uint32_t mask) -> Ring {
    const int k = std::popcount(mask);
    if (k == 0) return one;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int row = n - k;
    Ring acc = one - one;
    int position = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Ring& entry = a[static_cast<size_t>(row)][static_cast<size_t>(c)];
      if (!(entry == (one - one))) {
        Ring minor = self(self, mask & ~(1u << c));
        if (position % 2 == 0)
          acc = acc + entry * minor;
        else
          acc = acc - entry * minor;
      }
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n == 32) ? ~0u : ((1u << n) - 1u));
}

}  // namespace qschubert
