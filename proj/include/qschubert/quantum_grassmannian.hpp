// The quantum Grassmannian K^q_{m,p} inside P(wedge^p K^{m+p} (x) K^{q+1}):
// Plücker vectors of polynomial curves, Schubert hyperplanes, the boundary map,
// initial-ideal combinatorics, and the static Grass(2,4) pole-placement solver.
#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qschubert/qposet.hpp"
#include "qschubert/scalar.hpp"
#include "qschubert/unipoly.hpp"

namespace qschubert {

/// A rows x cols matrix of polynomials in s, stored as coefficient matrices:
/// M(s) = sum_k s^k coefficients[k].
class PolyMatrixCurve {
 public:
  PolyMatrixCurve(Eigen::Index rows, Eigen::Index cols);
  explicit PolyMatrixCurve(std::vector<MatrixXq> coefficients);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  /// Highest stored power of s; -1 when empty.
  int degree_bound() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<MatrixXq>& coefficients() const { return coefficients_; }

  RationalPoly entry(Eigen::Index i, Eigen::Index j) const;
  void set_entry(Eigen::Index i, Eigen::Index j, const RationalPoly& f);
  /// Entries with s replaced by s^k.
  PolyMatrixCurve compose_power(int k) const;
  MatrixXq evaluate(const Rational& s) const;

  /// det of the square submatrix on `rows` (1-based) and all columns.
  RationalPoly minor(const std::vector<int>& rows) const;
  /// Column block [this : other].
  PolyMatrixCurve hstack(const PolyMatrixCurve& other) const;
  RationalPoly determinant() const;

 private:
  Eigen::Index rows_;
  Eigen::Index cols_;
  std::vector<MatrixXq> coefficients_;
};

/// Coordinates z_{alpha^(a)} on C^q_{m,p}; missing keys are zero.
struct PluckerVector {
  PosetContext ctx;
  std::map<QIndex, Rational> coords;

  Rational at(const QIndex& x) const;
  bool is_zero() const;
  /// Equality up to a nonzero global scalar.
  bool projectively_equal(const PluckerVector& other) const;
};

struct LinearForm {
  std::map<QIndex, Rational> coeffs;

  Rational evaluate(const PluckerVector& z) const;
};

/// z_{alpha^(a)} is the s^a coefficient of the alpha-th maximal minor. The curve
/// must be (m+p) x p with every minor of degree <= q and some minor nonzero.
PluckerVector plucker_coords(const PolyMatrixCurve& curve, const PosetContext& ctx);

/// Throws unless L is (m+p) x m of full rank m.
void validate_plane(const MatrixXq& plane, int m, int p);
/// No maximal minor of L vanishes.
bool is_totally_generic(const MatrixXq& plane);

/// Row i (1-based) multiplied by s^{m+p-i}.
MatrixXq torus_scale(const Rational& s, const MatrixXq& plane);

/// (-1)^{sum(alpha) - C(p+1,2)} times the minor of L on the rows outside alpha;
/// the cofactor of M_alpha in the Laplace expansion of det[M : L].
Rational complementary_minor(const MatrixXq& plane, const std::vector<int>& alpha);
RationalPoly complementary_minor(const PolyMatrixCurve& plane, const std::vector<int>& alpha);

/// Phi(s, L): coefficient of z_{alpha^(a)} is L_alpha s^{rank(alpha^(a))}.
LinearForm hyperplane_form(const Rational& s, const MatrixXq& plane, const PosetContext& ctx);
/// Phi(s, L)(z) as a polynomial in s.
RationalPoly hyperplane_polynomial(const MatrixXq& plane, const PluckerVector& z);

/// (A x_{alpha^(a)} - B x_{alpha^(a-1)}) on C^q, for x on C^{q-1}.
PluckerVector boundary_map(const Rational& a, const Rational& b, const PluckerVector& x);

/// Incomparable pairs {x, y} with x before y in canonical order.
std::vector<std::pair<QIndex, QIndex>> initial_ideal_gens(const PosetContext& ctx);

struct SRDecomposition {
  BigInt degree;                              // number of facets (maximal chains)
  bool facets_enumerated = false;             // false when degree exceeds the cap
  std::vector<std::vector<QIndex>> facets;    // each listed bottom to top
  std::vector<BigInt> hilbert;                // H(0..t_max)
};

SRDecomposition sr_decomposition(const PosetContext& ctx, long facet_cap = 10000, int t_max = 4);

/// A quadratic form on Plücker space: coefficient per unordered pair (x <= y in canonical order).
using Quadric = std::map<std::pair<QIndex, QIndex>, Rational>;

Rational evaluate_quadric(const Quadric& f, const PluckerVector& z);

struct QuadricInterpolation {
  PosetContext ctx;
  std::vector<Quadric> basis;   // rows of the reduced echelon form, leading term an incomparable pair
  long monomial_count = 0;
  long incomparable_pairs = 0;
  long samples_used = 0;
  bool dimension_matches = false;  // kernel dimension == incomparable pairs
  bool batches_agree = false;      // a second independent batch gives the same kernel
  bool straightening_form = false; // every basis element has the z_g z_d - z_join z_meet + lower shape
};

/// Random curve with column degrees floor/ceil(q/p), integer coefficients in
/// [-20, 20], resampled until the minors have no common factor and some minor
/// reaches degree q.
PolyMatrixCurve random_curve(const PosetContext& ctx, std::mt19937_64& rng);
/// Random full-rank (m+p) x m integer plane with entries in [-20, 20].
MatrixXq random_plane(int m, int p, std::mt19937_64& rng);

/// Kernel of the degree-2 evaluation matrix over `samples` random curves
/// (0 picks twice the monomial count).
QuadricInterpolation interpolate_quadrics(const PosetContext& ctx, std::mt19937_64& rng, long samples = 0);

struct PolePlacementMap {
  PosetContext ctx;
  std::map<QIndex, RationalPoly> images;  // z_{alpha^(a)} maps to s^a L_alpha(s)

  RationalPoly apply(const PluckerVector& z) const;
};

/// Lambda_L for an (m+p) x m polynomial plane L(s).
PolePlacementMap pole_placement_map(const PolyMatrixCurve& plane, const PosetContext& ctx);

/// r + w sqrt(D), componentwise.
struct SurdVector {
  VectorXq rational;
  VectorXq surd;
};

struct StaticPolePlacement {
  std::vector<std::vector<int>> coordinates;  // 12, 13, 14, 23, 24, 34
  MatrixXq system;                            // 4 x 6 complementary minors of s_i.L_i
  long kernel_dimension = 0;
  std::optional<std::string> degeneracy;
  Rational quad_a, quad_b, quad_c;  // Q(x u + y v) = a x^2 + b x y + c y^2
  Rational discriminant;
  int solutions_with_multiplicity = 0;
  int real_solutions = 0;
  bool rational_solutions = false;
  std::vector<SurdVector> solutions;  // over Q(sqrt(discriminant))
  bool verified = false;
};

/// Four Schubert conditions on Grass(2,4): z must lie on each hyperplane
/// sum_alpha z_alpha (s_i.L_i)_alpha = 0 and on the Plücker quadric.
StaticPolePlacement static_compensators_grass24(const std::vector<MatrixXq>& planes, const std::vector<Rational>& s);

}  // namespace qschubert
