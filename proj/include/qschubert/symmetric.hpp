// Exact symmetric polynomials in p variables: the c-basis (elementary
// symmetric generators c_i, graded deg c_i = i) and the x-basis.
#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "qschubert/linalg.hpp"
#include "qschubert/scalar.hpp"

namespace qschubert {

/// Sparse multivariate polynomial with BigInt coefficients and a weighted
/// grading. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<int> weights) : weights_(std::move(weights)) {}

  static MultiPoly constant(std::vector<int> weights, const BigInt& c);
  static MultiPoly variable(std::vector<int> weights, int var);

  int num_vars() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const BigInt& c);

  long weighted_degree(const Exponents& e) const;
  /// Largest weighted degree of a term; -1 for zero.
  long degree() const;
  bool is_homogeneous() const;

  MultiPoly derivative(int var) const;
  MultiPoly swap_variables(int i, int j) const;
  /// Substitute images[k] for variable k.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;

  template <typename T>
  T evaluate(std::span<const T> point) const {
    T acc = T(0);
    for (const auto& [e, c] : terms_) {
      T term = T(c.get_d());
      if constexpr (std::is_same_v<T, Rational>) term = Rational(c);
      for (size_t k = 0; k < e.size(); ++k)
        for (int r = 0; r < e[k]; ++r) term *= point[k];
      acc += term;
    }
    return acc;
  }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const BigInt& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in graded-lexicographic order, e.g. "c1^2 - 2*c2".
  std::string str(const std::string& var = "c") const;

 private:
  std::vector<int> weights_;
  std::map<Exponents, BigInt> terms_;
};

/// Polynomial in c_1..c_p with deg c_i = i.
using SymPoly = MultiPoly;

/// Polynomial in x_1..x_p; `symmetric` records the claim that it is invariant
/// under permutations of the variables.
struct XPoly {
  MultiPoly poly;
  bool symmetric = false;

  /// Checks invariance under every adjacent transposition.
  bool is_invariant_under_transpositions() const;
};

std::vector<int> c_weights(int p);
std::vector<int> x_weights(int p);

/// h_j in the c-basis via h_j = sum_{i>=1} (-1)^(i+1) c_i h_{j-i}; h_0 = 1, h_j = 0 for j < 0.
SymPoly h_in_c(int j, int p);
/// Power sum P_r in the c-basis via Newton's identities.
SymPoly p_in_c(int r, int p);
/// e_i(x_1..x_p).
XPoly e_in_x(int i, int p);
/// e_i of all x-variables except `omitted`.
XPoly e_in_x_omitting(int i, int p, int omitted);
/// Substitute c_i = e_i(x).
XPoly c_to_x(const SymPoly& f);

/// Jacobi-Trudi determinant det(h_{I_i - j}), i.e. the Schur polynomial of the
/// partition (i_p - p, ..., i_1 - 1), in the c-basis.
SymPoly schur_jt(const std::vector<int>& seq);

/// Quotient of alternants for the same Schur polynomial evaluated at `pts`.
/// Throws ValidationError when two points coincide.
template <typename T>
T schur_alternant_eval(const std::vector<int>& seq, std::span<const T> pts) {
  const int p = static_cast<int>(seq.size());
  if (static_cast<int>(pts.size()) != p) throw ValidationError("schur_alternant_eval: need p points");
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (pts[static_cast<size_t>(i)] == pts[static_cast<size_t>(j)])
        throw ValidationError("schur_alternant_eval: coincident points (division by zero)");
  auto power = [](const T& x, int e) {
    T r = T(1);
    for (int k = 0; k < e; ++k) r *= x;
    return r;
  };
  MatrixX<T> num(p, p), den(p, p);
  for (int k = 0; k < p; ++k)
    for (int j = 0; j < p; ++j) {
      num(k, j) = power(pts[static_cast<size_t>(j)], seq[static_cast<size_t>(p - 1 - k)] - 1);
      den(k, j) = power(pts[static_cast<size_t>(j)], p - 1 - k);
    }
  return dense_determinant(num) / dense_determinant(den);
}

struct GradientCheck {
  int m = 0;
  int p = 0;
  std::vector<bool> pass;  // pass[j-1] for the partial with respect to c_j
  bool ok() const;
};

/// Verifies dW/dc_j = (-1)^(1+j) h_{m+p+1-j} with W = P_{m+p+1}/(m+p+1),
/// exactly, for every j.
GradientCheck power_sum_gradient_check(int m, int p);

struct JacobianCheck {
  XPoly determinant;
  XPoly vandermonde;
  bool equal = false;
};

/// det(dc_i/dx_j) against prod_{i<j}(x_i - x_j), as exact polynomials.
JacobianCheck vandermonde_jacobian(int p);

/// Degrees k in [1, max_degree] where sum_r (-1)^r h_r c_{k-r} fails to vanish.
std::vector<int> eh_identity_failures(int p, int max_degree);

}  // namespace qschubert
