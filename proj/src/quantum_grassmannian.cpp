#include "qschubert/quantum_grassmannian.hpp"

#include <algorithm>
#include <numeric>

#include "qschubert/linalg.hpp"

namespace qschubert {

namespace {

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      out.push_back(s);
      return;
    }
    for (int v = start; v <= n - (k - pos - 1); ++v) {
      s[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

std::vector<int> complement(const std::vector<int>& alpha, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(alpha.begin(), alpha.end(), i)) out.push_back(i);
  return out;
}

int complement_sign(const std::vector<int>& alpha) {
  const long p = static_cast<long>(alpha.size());
  const long total = std::accumulate(alpha.begin(), alpha.end(), 0L);
  return sign_of_parity(total - p * (p + 1) / 2);
}

Rational power(const Rational& s, long e) {
  Rational r = 1;
  for (long k = 0; k < e; ++k) r *= s;
  return r;
}

MatrixXq rows_of(const MatrixXq& a, const std::vector<int>& rows) {
  MatrixXq out(static_cast<Eigen::Index>(rows.size()), a.cols());
  for (size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = a.row(rows[i] - 1);
  return out;
}

}  // namespace

PolyMatrixCurve::PolyMatrixCurve(Eigen::Index rows, Eigen::Index cols) : rows_(rows), cols_(cols) {}

PolyMatrixCurve::PolyMatrixCurve(std::vector<MatrixXq> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw ValidationError("PolyMatrixCurve needs at least one coefficient matrix");
  rows_ = coefficients_.front().rows();
  cols_ = coefficients_.front().cols();
  for (const auto& c : coefficients_)
    if (c.rows() != rows_ || c.cols() != cols_) throw ValidationError("PolyMatrixCurve: coefficient shapes differ");
}

RationalPoly PolyMatrixCurve::entry(Eigen::Index i, Eigen::Index j) const {
  std::vector<Rational> c;
  for (const auto& m : coefficients_) c.push_back(m(i, j));
  return RationalPoly(std::move(c));
}

void PolyMatrixCurve::set_entry(Eigen::Index i, Eigen::Index j, const RationalPoly& f) {
  while (static_cast<int>(coefficients_.size()) <= f.degree()) coefficients_.push_back(MatrixXq::Zero(rows_, cols_));
  for (size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k](i, j) = f.coeff(static_cast<int>(k));
}

PolyMatrixCurve PolyMatrixCurve::compose_power(int k) const {
  if (k < 1) throw ValidationError("compose_power: exponent must be positive");
  PolyMatrixCurve out(rows_, cols_);
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index j = 0; j < cols_; ++j) out.set_entry(i, j, entry(i, j).compose_power(k));
  return out;
}

MatrixXq PolyMatrixCurve::evaluate(const Rational& s) const {
  MatrixXq out = MatrixXq::Zero(rows_, cols_);
  Rational sk = 1;
  for (const auto& c : coefficients_) {
    out += sk * c;
    sk *= s;
  }
  return out;
}

RationalPoly PolyMatrixCurve::minor(const std::vector<int>& rows) const {
  if (static_cast<Eigen::Index>(rows.size()) != cols_) throw ValidationError("minor: need as many rows as columns");
  std::vector<std::vector<RationalPoly>> a(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (Eigen::Index j = 0; j < cols_; ++j) a[i].push_back(entry(rows[i] - 1, j));
  return cofactor_determinant(a, RationalPoly::constant(1));
}

PolyMatrixCurve PolyMatrixCurve::hstack(const PolyMatrixCurve& other) const {
  if (other.rows_ != rows_) throw ValidationError("hstack: row counts differ");
  PolyMatrixCurve out(rows_, cols_ + other.cols_);
  for (Eigen::Index i = 0; i < rows_; ++i) {
    for (Eigen::Index j = 0; j < cols_; ++j) out.set_entry(i, j, entry(i, j));
    for (Eigen::Index j = 0; j < other.cols_; ++j) out.set_entry(i, cols_ + j, other.entry(i, j));
  }
  return out;
}

RationalPoly PolyMatrixCurve::determinant() const {
  if (rows_ != cols_) throw ValidationError("determinant of a non-square polynomial matrix");
  std::vector<int> all(static_cast<size_t>(rows_));
  std::iota(all.begin(), all.end(), 1);
  return minor(all);
}

Rational PluckerVector::at(const QIndex& x) const {
  auto it = coords.find(x);
  return it == coords.end() ? Rational(0) : it->second;
}

bool PluckerVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& kv) { return kv.second == 0; });
}

bool PluckerVector::projectively_equal(const PluckerVector& other) const {
  if (!(ctx == other.ctx) || is_zero() || other.is_zero()) return false;
  std::optional<Rational> ratio;
  for (const auto& x : poset_elements(ctx)) {
    const Rational a = at(x), b = other.at(x);
    if ((a == 0) != (b == 0)) return false;
    if (a == 0) continue;
    const Rational r = b / a;
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

Rational LinearForm::evaluate(const PluckerVector& z) const {
  Rational acc = 0;
  for (const auto& [x, c] : coeffs) acc += c * z.at(x);
  return acc;
}

PluckerVector plucker_coords(const PolyMatrixCurve& curve, const PosetContext& ctx) {
  ctx.validate();
  if (curve.rows() != ctx.n() || curve.cols() != ctx.p) throw ValidationError("plucker_coords: curve must be (m+p) x p");
  PluckerVector out{ctx, {}};
  for (const auto& alpha : subsets_of(ctx.n(), ctx.p)) {
    const RationalPoly minor = curve.minor(alpha);
    if (minor.degree() > ctx.q) throw ValidationError("plucker_coords: a maximal minor exceeds degree q");
    for (int a = 0; a <= minor.degree(); ++a)
      if (minor.coeff(a) != 0) out.coords[QIndex{alpha, a}] = minor.coeff(a);
  }
  if (out.is_zero()) throw ValidationError("plucker_coords: every maximal minor vanishes");
  return out;
}

void validate_plane(const MatrixXq& plane, int m, int p) {
  if (plane.rows() != m + p || plane.cols() != m) throw ValidationError("plane must be (m+p) x m");
  if (rank(plane) != m) throw ValidationError("plane is not of full rank m");
}

bool is_totally_generic(const MatrixXq& plane) {
  for (const auto& rows : subsets_of(static_cast<int>(plane.rows()), static_cast<int>(plane.cols())))
    if (determinant(rows_of(plane, rows)) == 0) return false;
  return true;
}

MatrixXq torus_scale(const Rational& s, const MatrixXq& plane) {
  if (s == 0) throw ValidationError("torus_scale: s must be nonzero");
  const Eigen::Index n = plane.rows();
  MatrixXq out = plane;
  for (Eigen::Index i = 0; i < n; ++i) out.row(i) *= power(s, n - 1 - i);
  return out;
}

Rational complementary_minor(const MatrixXq& plane, const std::vector<int>& alpha) {
  const auto rest = complement(alpha, static_cast<int>(plane.rows()));
  if (static_cast<Eigen::Index>(rest.size()) != plane.cols()) throw ValidationError("complementary_minor: shape mismatch");
  return complement_sign(alpha) * determinant(rows_of(plane, rest));
}

RationalPoly complementary_minor(const PolyMatrixCurve& plane, const std::vector<int>& alpha) {
  const auto rest = complement(alpha, static_cast<int>(plane.rows()));
  if (static_cast<Eigen::Index>(rest.size()) != plane.cols()) throw ValidationError("complementary_minor: shape mismatch");
  return Rational(complement_sign(alpha)) * plane.minor(rest);
}

LinearForm hyperplane_form(const Rational& s, const MatrixXq& plane, const PosetContext& ctx) {
  validate_plane(plane, ctx.m, ctx.p);
  LinearForm out;
  for (const auto& x : poset_elements(ctx)) {
    const Rational c = complementary_minor(plane, x.alpha) * power(s, rank(x, ctx.n()));
    if (c != 0) out.coeffs[x] = c;
  }
  return out;
}

RationalPoly hyperplane_polynomial(const MatrixXq& plane, const PluckerVector& z) {
  validate_plane(plane, z.ctx.m, z.ctx.p);
  RationalPoly out;
  for (const auto& [x, c] : z.coords)
    out += RationalPoly::monomial(c * complementary_minor(plane, x.alpha), static_cast<int>(rank(x, z.ctx.n())));
  return out;
}

PluckerVector boundary_map(const Rational& a, const Rational& b, const PluckerVector& x) {
  if (a == 0 && b == 0) throw ValidationError("boundary_map: (A, B) must not both vanish");
  const PosetContext target{x.ctx.m, x.ctx.p, x.ctx.q + 1};
  PluckerVector out{target, {}};
  for (const auto& y : poset_elements(target)) {
    Rational v = 0;
    if (y.level <= x.ctx.q) v += a * x.at(y);
    if (y.level >= 1) v -= b * x.at(QIndex{y.alpha, y.level - 1});
    if (v != 0) out.coords[y] = v;
  }
  return out;
}

std::vector<std::pair<QIndex, QIndex>> initial_ideal_gens(const PosetContext& ctx) {
  const auto all = poset_elements(ctx);
  std::vector<std::pair<QIndex, QIndex>> out;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!leq(all[i], all[j]) && !leq(all[j], all[i])) out.emplace_back(all[i], all[j]);
  return out;
}

SRDecomposition sr_decomposition(const PosetContext& ctx, long facet_cap, int t_max) {
  const Poset poset(ctx);
  SRDecomposition out;
  out.degree = poset.chains_from_minimum().back();
  out.hilbert = poset.multichain_counts(t_max);
  if (out.degree > facet_cap) return out;
  out.facets_enumerated = true;
  std::vector<QIndex> chain;
  auto rec = [&](auto&& self, size_t idx) -> void {
    chain.push_back(poset.elements()[idx]);
    if (poset.lower_covers()[idx].empty()) {
      out.facets.emplace_back(chain.rbegin(), chain.rend());
    } else {
      for (size_t below : poset.lower_covers()[idx]) self(self, below);
    }
    chain.pop_back();
  };
  rec(rec, poset.size() - 1);
  return out;
}

Rational evaluate_quadric(const Quadric& f, const PluckerVector& z) {
  Rational acc = 0;
  for (const auto& [pair, c] : f) acc += c * z.at(pair.first) * z.at(pair.second);
  return acc;
}

PolyMatrixCurve random_curve(const PosetContext& ctx, std::mt19937_64& rng) {
  ctx.validate();
  std::uniform_int_distribution<int> coeff(-20, 20);
  const int n = ctx.n(), p = ctx.p;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PolyMatrixCurve curve(n, p);
    for (int j = 0; j < p; ++j) {
      const int deg = ctx.q / p + (j < ctx.q % p ? 1 : 0);
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> c(static_cast<size_t>(deg) + 1);
        for (auto& v : c) v = coeff(rng);
        curve.set_entry(i, j, RationalPoly(std::move(c)));
      }
    }
    // interior points only: minors without a common root and reaching degree q
    RationalPoly g;
    int top = -1;
    for (const auto& alpha : subsets_of(n, p)) {
      const RationalPoly minor = curve.minor(alpha);
      top = std::max(top, minor.degree());
      g = poly_gcd(g, minor);
    }
    if (top == ctx.q && g.degree() == 0) return curve;
  }
  throw InternalConsistencyError("random_curve: no interior sample in 1000 attempts");
}

MatrixXq random_plane(int m, int p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-20, 20);
  while (true) {
    MatrixXq plane(m + p, m);
    for (Eigen::Index i = 0; i < plane.rows(); ++i)
      for (Eigen::Index j = 0; j < plane.cols(); ++j) plane(i, j) = coeff(rng);
    if (rank(plane) == m) return plane;
  }
}

namespace {

struct MonomialLayout {
  std::vector<QIndex> coords;
  std::vector<std::pair<size_t, size_t>> monomials;  // incomparable first, then comparable
  long incomparable = 0;
};

MonomialLayout layout_for(const PosetContext& ctx) {
  MonomialLayout out;
  out.coords = poset_elements(ctx);
  std::vector<std::pair<size_t, size_t>> comparable;
  for (size_t i = 0; i < out.coords.size(); ++i)
    for (size_t j = i; j < out.coords.size(); ++j) {
      if (leq(out.coords[i], out.coords[j]) || leq(out.coords[j], out.coords[i]))
        comparable.emplace_back(i, j);
      else
        out.monomials.emplace_back(i, j);
    }
  out.incomparable = static_cast<long>(out.monomials.size());
  out.monomials.insert(out.monomials.end(), comparable.begin(), comparable.end());
  return out;
}

/// Reduced row echelon basis of the degree-2 relations seen on `samples` curves.
MatrixXq relation_basis(const PosetContext& ctx, const MonomialLayout& layout, std::mt19937_64& rng, long samples) {
  const auto cols = static_cast<Eigen::Index>(layout.monomials.size());
  MatrixXq eval(samples, cols);
  for (Eigen::Index r = 0; r < samples; ++r) {
    const PluckerVector z = plucker_coords(random_curve(ctx, rng), ctx);
    std::vector<Rational> v;
    for (const auto& x : layout.coords) v.push_back(z.at(x));
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto [i, j] = layout.monomials[static_cast<size_t>(c)];
      eval(r, c) = v[i] * v[j];
    }
  }
  MatrixXq kernel = kernel_basis(eval).transpose();
  std::vector<Eigen::Index> pivots;
  reduce_row_echelon(kernel, pivots);
  return kernel.topRows(static_cast<Eigen::Index>(pivots.size()));
}

std::pair<QIndex, QIndex> ordered_pair(const QIndex& x, const QIndex& y, const std::vector<QIndex>& coords) {
  const auto ix = std::find(coords.begin(), coords.end(), x) - coords.begin();
  const auto iy = std::find(coords.begin(), coords.end(), y) - coords.begin();
  return ix <= iy ? std::pair{x, y} : std::pair{y, x};
}

bool strictly_below(const QIndex& x, const QIndex& y) { return x != y && leq(x, y); }

}  // namespace

QuadricInterpolation interpolate_quadrics(const PosetContext& ctx, std::mt19937_64& rng, long samples) {
  ctx.validate();
  const MonomialLayout layout = layout_for(ctx);
  QuadricInterpolation out;
  out.ctx = ctx;
  out.monomial_count = static_cast<long>(layout.monomials.size());
  out.incomparable_pairs = layout.incomparable;
  out.samples_used = samples > 0 ? samples : 2 * out.monomial_count;

  const MatrixXq basis = relation_basis(ctx, layout, rng, out.samples_used);
  const MatrixXq second = relation_basis(ctx, layout, rng, out.samples_used);
  out.batches_agree = basis.rows() == second.rows() && basis == second;
  out.dimension_matches = basis.rows() == layout.incomparable;

  bool straight = out.dimension_matches;
  for (Eigen::Index r = 0; r < basis.rows(); ++r) {
    Quadric f;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      if (basis(r, c) == 0) continue;
      const auto [i, j] = layout.monomials[static_cast<size_t>(c)];
      f[{layout.coords[i], layout.coords[j]}] = basis(r, c);
    }
    out.basis.push_back(f);
    if (!straight) continue;
    // row r leads with the r-th incomparable pair
    if (basis(r, r) != 1) {
      straight = false;
      continue;
    }
    const auto [gi, di] = layout.monomials[static_cast<size_t>(r)];
    const QIndex& g = layout.coords[gi];
    const QIndex& d = layout.coords[di];
    const QIndex lo = meet(g, d, ctx), hi = join(g, d, ctx);
    const auto swap_term = ordered_pair(lo, hi, layout.coords);
    auto it = f.find(swap_term);
    if (it == f.end() || it->second != -1) straight = false;
    for (const auto& [pair, c] : f) {
      if (pair == std::pair{g, d} || pair == swap_term) continue;
      const QIndex& a = leq(pair.first, pair.second) ? pair.first : pair.second;
      const QIndex& b = leq(pair.first, pair.second) ? pair.second : pair.first;
      if (!leq(a, b) || !strictly_below(a, lo) || !strictly_below(hi, b)) straight = false;
    }
  }
  out.straightening_form = straight;
  return out;
}

RationalPoly PolePlacementMap::apply(const PluckerVector& z) const {
  if (!(z.ctx == ctx)) throw ValidationError("pole placement map applied to a vector from another context");
  RationalPoly out;
  for (const auto& [x, c] : z.coords) {
    auto it = images.find(x);
    if (it != images.end()) out += c * it->second;
  }
  return out;
}

PolePlacementMap pole_placement_map(const PolyMatrixCurve& plane, const PosetContext& ctx) {
  ctx.validate();
  if (plane.rows() != ctx.n() || plane.cols() != ctx.m) throw ValidationError("pole_placement_map: plane must be (m+p) x m");
  PolePlacementMap out{ctx, {}};
  for (const auto& x : poset_elements(ctx))
    out.images[x] = RationalPoly::monomial(1, x.level) * complementary_minor(plane, x.alpha);
  return out;
}

namespace {

Rational plucker_quadric(const VectorXq& z) { return z(0) * z(5) - z(1) * z(4) + z(2) * z(3); }

Rational polarization(const VectorXq& r, const VectorXq& w) {
  return plucker_quadric(r + w) - plucker_quadric(r) - plucker_quadric(w);
}

/// Exact square root of a non-negative rational, if it has one.
std::optional<Rational> rational_sqrt(const Rational& d) {
  if (d < 0) return std::nullopt;
  BigInt num = d.get_num(), den = d.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

StaticPolePlacement static_compensators_grass24(const std::vector<MatrixXq>& planes, const std::vector<Rational>& s) {
  if (planes.size() != 4 || s.size() != 4) throw ValidationError("static_compensators_grass24 needs four planes and four parameters");
  for (size_t i = 0; i < 4; ++i) {
    validate_plane(planes[i], 2, 2);
    for (size_t j = i + 1; j < 4; ++j)
      if (s[i] == s[j]) throw ValidationError("static_compensators_grass24: parameters must be distinct");
  }
  StaticPolePlacement out;
  out.coordinates = subsets_of(4, 2);
  out.system = MatrixXq(4, 6);
  for (Eigen::Index i = 0; i < 4; ++i) {
    const MatrixXq scaled = torus_scale(s[static_cast<size_t>(i)], planes[static_cast<size_t>(i)]);
    for (Eigen::Index j = 0; j < 6; ++j) out.system(i, j) = complementary_minor(scaled, out.coordinates[static_cast<size_t>(j)]);
  }
  const MatrixXq kernel = kernel_basis(out.system);
  out.kernel_dimension = kernel.cols();
  if (out.kernel_dimension != 2) {
    out.degeneracy = "kernel dimension " + std::to_string(out.kernel_dimension) + " (expected 2)";
    return out;
  }
  const VectorXq u = kernel.col(0), v = kernel.col(1);
  out.quad_a = plucker_quadric(u);
  out.quad_c = plucker_quadric(v);
  out.quad_b = polarization(u, v);
  if (out.quad_a == 0 && out.quad_b == 0 && out.quad_c == 0) {
    out.degeneracy = "Plücker quadric vanishes on the kernel line";
    return out;
  }
  out.discriminant = out.quad_b * out.quad_b - 4 * out.quad_a * out.quad_c;
  out.solutions_with_multiplicity = 2;
  out.real_solutions = out.discriminant >= 0 ? 2 : 0;
  const auto root = rational_sqrt(out.discriminant);
  out.rational_solutions = root.has_value();

  const VectorXq zero = VectorXq::Zero(6);
  auto push = [&](const VectorXq& r, const VectorXq& w) { out.solutions.push_back({r, w}); };
  if (out.quad_a == 0) {
    // Q = y (b x + c y): y = 0 and (x, y) = (c, -b)
    push(u, zero);
    if (out.quad_b != 0) push(VectorXq(out.quad_c * u - out.quad_b * v), zero);
  } else {
    const Rational half = Rational(1) / (2 * out.quad_a);
    const VectorXq base = VectorXq(-out.quad_b * half * u + v);
    if (out.discriminant == 0) {
      push(base, zero);
    } else if (root) {
      push(VectorXq(base + (*root * half) * u), zero);
      push(VectorXq(base - (*root * half) * u), zero);
    } else {
      push(base, VectorXq(half * u));
      push(base, VectorXq(-half * u));
    }
  }

  bool ok = true;
  for (const auto& sol : out.solutions) {
    ok = ok && !(sol.rational.isZero() && sol.surd.isZero());
    ok = ok && (out.system * sol.rational).isZero() && (out.system * sol.surd).isZero();
    ok = ok && plucker_quadric(sol.rational) + out.discriminant * plucker_quadric(sol.surd) == 0;
    ok = ok && polarization(sol.rational, sol.surd) == 0;
  }
  out.verified = ok;
  return out;
}

}  // namespace qschubert
