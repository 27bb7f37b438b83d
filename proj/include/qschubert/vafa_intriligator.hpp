// Residue sums over the critical points of the quantum potential
//   QW = P_{m+p+1}/(m+p+1) + (-1)^p c_1,
// which are the p-subsets of the (m+p)-th roots of (-1)^{p+1}.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qschubert/qposet.hpp"
#include "qschubert/scalar.hpp"

namespace qschubert {

/// Working precision of the floating pathway. High is a 50-digit binary float.
enum class Precision { Double, Extended, High };

/// A floating value carried at 256 bits regardless of the working precision.
struct NumericValue {
  mpf_class real{0, 256};
  mpf_class imag{0, 256};

  BigInt nearest() const;
  /// |real - nearest()|
  double residual() const;
  double imag_abs() const;
  /// |value - exact|, imaginary part included.
  double deviation(const BigInt& exact) const;
  std::string str(int digits = 12) const;
};

struct CriticalPoint {
  std::vector<int> subset;                    // indices into the roots, increasing
  std::vector<std::complex<double>> numeric;  // the roots themselves
};

/// Root k (0-based) has argument (2k + delta) pi / n; delta = 0 for odd p, 1 for even p.
std::vector<CriticalPoint> critical_points(int m, int p);

/// Largest |.| among h_{m+1}, ..., h_{m+p-1}, h_{m+p} + (-1)^p at the point.
double dqw_residual(const CriticalPoint& x, int m, int p);

/// Exact D(K). Multiplying the alternant by (sum x)^{|K|} distributes over rows,
/// so D(K) = sum_b multinomial(|K|; b) D_0(K - b), and D_0 collapses to the
/// power-sum determinant (-1)^{C(p,2)} n^{-p} det[P(n+p+1-k_i-j)].
BigInt D_exact(const std::vector<int>& k, int m, int p);

/// The same quantity summed over critical points. Requires sum(k_j - j) >= 0.
NumericValue D_numeric(const std::vector<int>& k, int m, int p, Precision prec = Precision::High);

/// delta(alpha^(a)) = D(J(alpha^(a))).
BigInt delta(const QIndex& x, int m);
/// The residue-sum form: (-1)^{C(p,2)} sum c_1^{|x|} S_{alpha vee} / Jacobian.
NumericValue delta_numeric(const QIndex& x, int m, Precision prec = Precision::High);

struct InsertedClass {
  enum class Kind { Special, Schur, Jacobian };
  Kind kind = Kind::Special;
  int index = 1;          // i for the special class c_i
  std::vector<int> seq;   // strictly increasing positive sequence for S_I

  static InsertedClass special(int i);
  static InsertedClass schur(std::vector<int> seq);
  static InsertedClass jacobian();

  long codim(int m, int p) const;
  std::string str() const;
};

struct Correlator {
  std::vector<InsertedClass> classes;
  int genus = 0;
  int m = 0;
  int p = 0;
  /// Curve degree d solving sum(codim) = d(m+p) + mp(1-g); empty when none exists
  /// and the correlator is zero by convention.
  std::optional<long> degree;
  /// Present for genus 0 with insertions c_1^r and at most one S_I, I inside [m+p].
  std::optional<BigInt> exact;
  NumericValue numeric;
};

/// (-1)^{C(p,2)(g-1)} sum over critical points of Jac^{g-1} times the product of classes.
Correlator correlator(const std::vector<InsertedClass>& classes, int genus, int m, int p,
                      Precision prec = Precision::High);

/// Jacobian at a critical point two ways: det of the c-Hessian of QW, and the
/// closed form n^p / ((x_1...x_p) Vandermonde^2). Returns the largest relative gap.
double jacobian_identity_residual(int m, int p);

}  // namespace qschubert
