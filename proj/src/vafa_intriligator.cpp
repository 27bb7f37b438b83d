#include "qschubert/vafa_intriligator.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "qschubert/linalg.hpp"
#include "qschubert/quantum_ring.hpp"
#include "qschubert/symmetric.hpp"

namespace qschubert {

namespace {

using HighReal = boost::multiprecision::cpp_bin_float_50;
using HighComplex = boost::multiprecision::cpp_complex_50;

template <typename Real>
struct ComplexOf {
  using type = std::complex<Real>;
};
template <>
struct ComplexOf<HighReal> {
  using type = HighComplex;
};

template <typename Real>
mpf_class to_mpf(const Real& v) {
  std::ostringstream out;
  if constexpr (std::is_same_v<Real, HighReal>)
    out << v.str(60, std::ios_base::scientific);
  else
    out << std::setprecision(std::numeric_limits<Real>::max_digits10) << std::scientific << v;
  return mpf_class(out.str(), 256);
}

long binomial2(int p) { return static_cast<long>(p) * (p - 1) / 2; }

long floor_mod(long a, long b) { return ((a % b) + b) % b; }

void require_context(int m, int p) { PosetContext{m, p, 0}.validate(); }

std::vector<std::vector<int>> index_subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<size_t>(p));
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = p - 1;
    while (i >= 0 && s[static_cast<size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++s[static_cast<size_t>(i)];
    for (int j = i + 1; j < p; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

/// Root powers are taken through exact angle reduction: x_k^e = exp(i pi t / n)
/// with t = (2k + delta) e mod 2n.
template <typename Real>
class RootTable {
 public:
  using Complex = typename ComplexOf<Real>::type;

  RootTable(int m, int p) : n_(m + p), shift_(p % 2 == 0 ? 1 : 0) {
    const Real pi = boost::math::constants::pi<Real>();
    using std::cos;
    using std::sin;
    for (int t = 0; t < 2 * n_; ++t) {
      const Real angle = pi * Real(t) / Real(n_);
      unit_.push_back(Complex(cos(angle), sin(angle)));
    }
  }

  const Complex& power(int root, long e) const {
    const long t = floor_mod((2L * root + shift_) * e, 2L * n_);
    return unit_[static_cast<size_t>(t)];
  }

  /// det(x_{subset[j]}^{e_i}) over rows i.
  Complex alternant(const std::vector<long>& exps, const std::vector<int>& subset) const {
    std::vector<std::vector<Complex>> a(exps.size());
    for (size_t i = 0; i < exps.size(); ++i)
      for (int r : subset) a[i].push_back(power(r, exps[i]));
    return cofactor_determinant(a, Complex(1));
  }

  Complex product(const std::vector<int>& subset) const {
    Complex acc(1);
    for (int r : subset) acc *= power(r, 1);
    return acc;
  }

  Complex sum(const std::vector<int>& subset) const {
    Complex acc(0);
    for (int r : subset) acc += power(r, 1);
    return acc;
  }

  /// Vandermonde prod_{i<j}(x_i - x_j) as det(x_j^{p-i}).
  Complex vandermonde(const std::vector<int>& subset) const {
    const int p = static_cast<int>(subset.size());
    std::vector<long> exps;
    for (int i = 1; i <= p; ++i) exps.push_back(p - i);
    return alternant(exps, subset);
  }

  Complex elementary(int i, const std::vector<int>& subset) const {
    std::vector<Complex> e(subset.size() + 1, Complex(0));
    e[0] = Complex(1);
    for (size_t k = 0; k < subset.size(); ++k)
      for (size_t j = k + 1; j > 0; --j) e[j] += e[j - 1] * power(subset[k], 1);
    return (i < 0 || i > static_cast<int>(subset.size())) ? Complex(0) : e[static_cast<size_t>(i)];
  }

  /// n^p / ((x_1...x_p) Vandermonde^2)
  Complex jacobian(const std::vector<int>& subset) const {
    const Complex v = vandermonde(subset);
    Complex np(1);
    for (size_t k = 0; k < subset.size(); ++k) np *= Complex(Real(n_));
    return np / (product(subset) * v * v);
  }

  Complex schur(const std::vector<int>& seq, const std::vector<int>& subset) const {
    const int p = static_cast<int>(seq.size());
    std::vector<long> exps;
    for (int k = 0; k < p; ++k) exps.push_back(seq[static_cast<size_t>(p - 1 - k)] - 1);
    return alternant(exps, subset) / vandermonde(subset);
  }

 private:
  int n_;
  int shift_;
  std::vector<Complex> unit_;
};

template <typename Real>
NumericValue to_numeric(const typename ComplexOf<Real>::type& z) {
  using std::imag;
  using std::real;
  return NumericValue{to_mpf<Real>(real(z)), to_mpf<Real>(imag(z))};
}

template <typename Real>
NumericValue d_numeric_impl(const std::vector<int>& k, int m, int p, long size) {
  using Complex = typename ComplexOf<Real>::type;
  const int n = m + p;
  const RootTable<Real> roots(m, p);
  std::vector<long> exps;
  for (int v : k) exps.push_back(n - v);
  Complex total(0);
  for (const auto& subset : index_subsets(n, p)) {
    Complex sum_power(1);
    const Complex s = roots.sum(subset);
    for (long r = 0; r < size; ++r) sum_power *= s;
    total += roots.product(subset) * sum_power * roots.alternant(exps, subset) * roots.vandermonde(subset);
  }
  Real scale = Real(sign_of_parity(binomial2(p)));
  for (int i = 0; i < p; ++i) scale /= Real(n);
  return to_numeric<Real>(total * Complex(scale));
}

template <typename Real>
NumericValue correlator_impl(const std::vector<InsertedClass>& classes, int genus, int m, int p) {
  using Complex = typename ComplexOf<Real>::type;
  const int n = m + p;
  const RootTable<Real> roots(m, p);
  Complex total(0);
  for (const auto& subset : index_subsets(n, p)) {
    const Complex jac = roots.jacobian(subset);
    Complex term(1);
    if (genus >= 1)
      for (int g = 1; g < genus; ++g) term *= jac;
    else
      term /= jac;
    for (const auto& c : classes) {
      switch (c.kind) {
        case InsertedClass::Kind::Special:
          term *= roots.elementary(c.index, subset);
          break;
        case InsertedClass::Kind::Schur:
          term *= roots.schur(c.seq, subset);
          break;
        case InsertedClass::Kind::Jacobian:
          term *= jac;
          break;
      }
    }
    total += term;
  }
  const Real sign = Real(sign_of_parity(binomial2(p) * (genus - 1)));
  return to_numeric<Real>(total * Complex(sign));
}

long sequence_rank(const std::vector<int>& k) {
  long r = 0;
  for (size_t i = 0; i < k.size(); ++i) r += k[i] - static_cast<long>(i + 1);
  return r;
}

}  // namespace

BigInt NumericValue::nearest() const {
  mpf_class shifted(real + 0.5, 256);
  mpf_class fl(0, 256);
  mpf_floor(fl.get_mpf_t(), shifted.get_mpf_t());
  return BigInt(fl);
}

double NumericValue::residual() const {
  mpf_class diff(real - mpf_class(nearest(), 256), 256);
  return std::abs(diff.get_d());
}

double NumericValue::imag_abs() const { return std::abs(imag.get_d()); }

double NumericValue::deviation(const BigInt& exact) const {
  mpf_class diff(real - mpf_class(exact, 256), 256);
  return std::hypot(diff.get_d(), imag.get_d());
}

std::string NumericValue::str(int digits) const {
  std::ostringstream out;
  // gmp_snprintf rounds to nearest; get_d() would truncate 8 - 1e-49 to 7.99...
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Ff", digits, real.get_mpf_t());
  out << buf.data();
  if (imag_abs() > 0) out << (imag < 0 ? " - " : " + ") << std::scientific << std::setprecision(2) << imag_abs() << "i";
  return out.str();
}

std::vector<CriticalPoint> critical_points(int m, int p) {
  require_context(m, p);
  const int n = m + p;
  const RootTable<double> roots(m, p);
  std::vector<CriticalPoint> out;
  for (const auto& subset : index_subsets(n, p)) {
    CriticalPoint c{subset, {}};
    for (int r : subset) c.numeric.push_back(roots.power(r, 1));
    out.push_back(std::move(c));
  }
  return out;
}

double dqw_residual(const CriticalPoint& x, int m, int p) {
  using C = std::complex<double>;
  std::vector<C> c;
  for (int i = 1; i <= p; ++i) c.push_back(e_in_x(i, p).poly.evaluate<C>(x.numeric));
  double worst = 0;
  for (int j = m + 1; j <= m + p; ++j) {
    C v = h_in_c(j, p).evaluate<C>(c);
    if (j == m + p) v += C(sign_of_parity(p));
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

BigInt D_exact(const std::vector<int>& k, int m, int p) {
  require_context(m, p);
  if (static_cast<int>(k.size()) != p) throw ValidationError("D_exact: K must have p entries");
  const int n = m + p;
  const long size = sequence_rank(k);
  if (size < 0) return 0;  // no term of (sum x)^{|K|}; matches the vanishing of g for |K| < 0

  // Row i of the power-sum matrix has entries P(n+p+1-k'_i-j), j = 1..p; at most
  // one column is a multiple of n since p < n.
  BigInt total = 0;
  std::vector<int> column(static_cast<size_t>(p));
  std::vector<bool> used(static_cast<size_t>(p), false);
  std::vector<long> parts(static_cast<size_t>(p));
  auto rec = [&](auto&& self, int row, long left, BigInt entries) -> void {
    if (row == p) {
      if (left != 0) return;
      int inversions = 0;
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) inversions += column[static_cast<size_t>(i)] > column[static_cast<size_t>(j)];
      BigInt multinomial = factorial(size);
      for (long b : parts) multinomial /= factorial(b);
      total += multinomial * sign_of_parity(inversions) * entries;
      return;
    }
    const long b_lo = (row == p - 1) ? left : 0;
    for (long b = b_lo; b <= left; ++b) {
      const long kk = k[static_cast<size_t>(row)] - b;
      for (int j = 1; j <= p; ++j) {
        const long arg = n + p + 1 - kk - j;
        if (floor_mod(arg, n) != 0 || used[static_cast<size_t>(j - 1)]) continue;
        const long a = (arg - floor_mod(arg, n)) / n;
        used[static_cast<size_t>(j - 1)] = true;
        column[static_cast<size_t>(row)] = j;
        parts[static_cast<size_t>(row)] = b;
        self(self, row + 1, left - b, BigInt(entries * n * sign_of_parity((p + 1) * a)));
        used[static_cast<size_t>(j - 1)] = false;
      }
    }
  };
  rec(rec, 0, size, BigInt(1));

  BigInt scale = 1;
  for (int i = 0; i < p; ++i) scale *= n;
  if (total % scale != 0) throw InternalConsistencyError("D_exact: power-sum determinant not divisible by n^p");
  return sign_of_parity(binomial2(p)) * (total / scale);
}

NumericValue D_numeric(const std::vector<int>& k, int m, int p, Precision prec) {
  require_context(m, p);
  if (static_cast<int>(k.size()) != p) throw ValidationError("D_numeric: K must have p entries");
  const long size = sequence_rank(k);
  if (size < 0) throw ValidationError("D_numeric: requires sum(k_j - j) >= 0");
  switch (prec) {
    case Precision::Double:
      return d_numeric_impl<double>(k, m, p, size);
    case Precision::Extended:
      return d_numeric_impl<long double>(k, m, p, size);
    case Precision::High:
      break;
  }
  return d_numeric_impl<HighReal>(k, m, p, size);
}

BigInt delta(const QIndex& x, int m) {
  const int p = static_cast<int>(x.alpha.size());
  validate(x, m, p);
  return D_exact(to_jseq(x, m + p).seq, m, p);
}

NumericValue delta_numeric(const QIndex& x, int m, Precision prec) {
  const int p = static_cast<int>(x.alpha.size());
  validate(x, m, p);
  std::vector<InsertedClass> classes(static_cast<size_t>(rank(x, m + p)), InsertedClass::special(1));
  classes.push_back(InsertedClass::schur(dual_index(x.alpha, m)));
  return correlator(classes, 0, m, p, prec).numeric;
}

InsertedClass InsertedClass::special(int i) {
  if (i < 1) throw ValidationError("special class c_i needs i >= 1");
  return InsertedClass{Kind::Special, i, {}};
}

InsertedClass InsertedClass::schur(std::vector<int> seq) {
  for (size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < 1 || (i > 0 && seq[i] <= seq[i - 1]))
      throw ValidationError("Schur class index must be strictly increasing and positive");
  return InsertedClass{Kind::Schur, 0, std::move(seq)};
}

InsertedClass InsertedClass::jacobian() { return InsertedClass{Kind::Jacobian, 0, {}}; }

long InsertedClass::codim(int m, int p) const {
  switch (kind) {
    case Kind::Special:
      return index;
    case Kind::Schur:
      return sequence_rank(seq);
    case Kind::Jacobian:
      return static_cast<long>(m) * p;
  }
  return 0;
}

std::string InsertedClass::str() const {
  switch (kind) {
    case Kind::Special:
      return "c" + std::to_string(index);
    case Kind::Schur:
      return "S" + JSeq{seq}.str();
    case Kind::Jacobian:
      return "Jac";
  }
  return "?";
}

Correlator correlator(const std::vector<InsertedClass>& classes, int genus, int m, int p, Precision prec) {
  require_context(m, p);
  if (genus < 0) throw ValidationError("correlator: genus must be non-negative");
  for (const auto& c : classes)
    if (c.kind == InsertedClass::Kind::Schur && static_cast<int>(c.seq.size()) != p)
      throw ValidationError("correlator: Schur class index must have p entries");
  const int n = m + p;
  Correlator out{classes, genus, m, p, std::nullopt, std::nullopt, {}};

  long total = 0;
  for (const auto& c : classes) total += c.codim(m, p);
  const long excess = total - static_cast<long>(m) * p * (1 - genus);
  if (excess < 0 || excess % n != 0) {
    out.exact = BigInt(0);
    return out;
  }
  out.degree = excess / n;

  switch (prec) {
    case Precision::Double:
      out.numeric = correlator_impl<double>(classes, genus, m, p);
      break;
    case Precision::Extended:
      out.numeric = correlator_impl<long double>(classes, genus, m, p);
      break;
    case Precision::High:
      out.numeric = correlator_impl<HighReal>(classes, genus, m, p);
      break;
  }

  // genus 0 with c_1^r and one Schur class S_I, I inside [n]: the sum is D at the
  // level-d shift of the dual index.
  if (genus != 0) return out;
  std::vector<int> schur_index(static_cast<size_t>(p));
  std::iota(schur_index.begin(), schur_index.end(), 1);
  int schur_count = 0;
  for (const auto& c : classes) {
    if (c.kind == InsertedClass::Kind::Special && c.index == 1) continue;
    if (c.kind == InsertedClass::Kind::Schur && schur_count == 0 && c.seq.back() <= n) {
      schur_index = c.seq;
      ++schur_count;
      continue;
    }
    return out;
  }
  const JSeq k = shift_level(JSeq{dual_index(schur_index, m)}, n, static_cast<int>(*out.degree));
  out.exact = D_exact(k.seq, m, p);
  return out;
}

double jacobian_identity_residual(int m, int p) {
  require_context(m, p);
  using C = std::complex<long double>;
  const int n = m + p;
  const SymPoly big_p = p_in_c(n + 1, p);
  std::vector<std::vector<SymPoly>> hessian(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) hessian[static_cast<size_t>(i)].push_back(big_p.derivative(i).derivative(j));

  const RootTable<long double> roots(m, p);
  double worst = 0;
  for (const auto& subset : index_subsets(n, p)) {
    std::vector<C> pts;
    for (int r : subset) pts.push_back(roots.power(r, 1));
    std::vector<C> c;
    for (int i = 1; i <= p; ++i) c.push_back(e_in_x(i, p).poly.evaluate<C>(pts));
    MatrixX<C> h(p, p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        h(i, j) = hessian[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate<C>(c) / C(static_cast<long double>(n + 1));
    const C direct = dense_determinant(h);
    const C closed = roots.jacobian(subset);
    worst = std::max(worst, static_cast<double>(std::abs(direct - closed) / std::abs(closed)));
  }
  return worst;
}

}  // namespace qschubert
