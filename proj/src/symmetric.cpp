#include "qschubert/symmetric.hpp"

#include <algorithm>
#include <sstream>

namespace qschubert {

MultiPoly MultiPoly::constant(std::vector<int> weights, const BigInt& c) {
  MultiPoly out(std::move(weights));
  out.add_term(Exponents(static_cast<size_t>(out.num_vars()), 0), c);
  return out;
}

MultiPoly MultiPoly::variable(std::vector<int> weights, int var) {
  MultiPoly out(std::move(weights));
  if (var < 0 || var >= out.num_vars()) throw ValidationError("MultiPoly::variable: index out of range");
  Exponents e(static_cast<size_t>(out.num_vars()), 0);
  e[static_cast<size_t>(var)] = 1;
  out.add_term(e, 1);
  return out;
}

BigInt MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != num_vars()) throw ValidationError("MultiPoly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long MultiPoly::weighted_degree(const Exponents& e) const {
  long d = 0;
  for (size_t k = 0; k < e.size(); ++k) d += static_cast<long>(e[k]) * weights_[k];
  return d;
}

long MultiPoly::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree(e));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long d = weighted_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return weighted_degree(t.first) == d; });
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= num_vars()) throw ValidationError("MultiPoly::derivative: index out of range");
  MultiPoly out(weights_);
  const auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents f = e;
    --f[v];
    out.add_term(f, c * e[v]);
  }
  return out;
}

MultiPoly MultiPoly::swap_variables(int i, int j) const {
  MultiPoly out(weights_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]);
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != num_vars()) throw ValidationError("MultiPoly::compose: arity mismatch");
  if (images.empty()) return *this;
  const auto& target = images.front().weights();
  // cache powers of each image
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](size_t k, int e) -> const MultiPoly& {
    auto& pw = powers[k];
    if (pw.empty()) pw.push_back(constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[k]);
    return pw[static_cast<size_t>(e)];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) term = term * power(k, e[k]);
    out += term;
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (weights_.empty() && terms_.empty()) weights_ = o.weights_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (weights_.empty() && terms_.empty()) weights_ = o.weights_;
  for (const auto& [e, c] : o.terms_) add_term(e, BigInt(-c));
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(a.weights_.empty() ? b.weights_ : a.weights_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e = ea;
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly operator*(const BigInt& s, const MultiPoly& a) {
  MultiPoly out(a.weights_);
  if (s == 0) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
  return out;
}

std::string MultiPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    const long dx = weighted_degree(x.first), dy = weighted_degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    bool wrote = false;
    if (mag != 1 || constant_term) {
      out << mag.get_str();
      wrote = true;
    }
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) out << "*";
      out << var << (k + 1);
      if (e[k] > 1) out << "^" << e[k];
      wrote = true;
    }
  }
  return out.str();
}

bool XPoly::is_invariant_under_transpositions() const {
  for (int i = 0; i + 1 < poly.num_vars(); ++i)
    if (!(poly.swap_variables(i, i + 1) == poly)) return false;
  return true;
}

std::vector<int> c_weights(int p) {
  std::vector<int> w(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) w[static_cast<size_t>(i)] = i + 1;
  return w;
}

std::vector<int> x_weights(int p) { return std::vector<int>(static_cast<size_t>(p), 1); }

namespace {

void require_p(int p) {
  if (p < 1) throw ValidationError("symmetric: p must be positive");
}

/// c_i as a SymPoly; c_0 = 1, zero outside [0, p].
SymPoly c_generator(int i, int p) {
  if (i == 0) return SymPoly::constant(c_weights(p), 1);
  if (i < 0 || i > p) return SymPoly(c_weights(p));
  return SymPoly::variable(c_weights(p), i - 1);
}

}  // namespace

SymPoly h_in_c(int j, int p) {
  require_p(p);
  if (j < 0) return SymPoly(c_weights(p));
  std::vector<SymPoly> h{SymPoly::constant(c_weights(p), 1)};
  for (int k = 1; k <= j; ++k) {
    SymPoly acc(c_weights(p));
    for (int i = 1; i <= std::min(k, p); ++i) {
      SymPoly term = c_generator(i, p) * h[static_cast<size_t>(k - i)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    h.push_back(std::move(acc));
  }
  return h.back();
}

SymPoly p_in_c(int r, int p) {
  require_p(p);
  if (r < 1) throw ValidationError("p_in_c: power sums are indexed from 1");
  std::vector<SymPoly> ps{SymPoly(c_weights(p))};  // unused slot 0
  for (int k = 1; k <= r; ++k) {
    SymPoly acc(c_weights(p));
    for (int i = 1; i < k; ++i) {
      SymPoly term = c_generator(i, p) * ps[static_cast<size_t>(k - i)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    SymPoly last = BigInt(k) * c_generator(k, p);
    if (k % 2 == 1)
      acc += last;
    else
      acc -= last;
    ps.push_back(std::move(acc));
  }
  return ps.back();
}

XPoly e_in_x_omitting(int i, int p, int omitted) {
  require_p(p);
  MultiPoly out(x_weights(p));
  if (i < 0) return {out, omitted < 0};
  std::vector<int> e(static_cast<size_t>(p), 0);
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      out.add_term(e, 1);
      return;
    }
    for (int v = start; v < p; ++v) {
      if (v == omitted) continue;
      e[static_cast<size_t>(v)] = 1;
      self(self, v + 1, left - 1);
      e[static_cast<size_t>(v)] = 0;
    }
  };
  rec(rec, 0, i);
  return {out, omitted < 0};
}

XPoly e_in_x(int i, int p) { return e_in_x_omitting(i, p, -1); }

XPoly c_to_x(const SymPoly& f) {
  const int p = f.num_vars();
  std::vector<MultiPoly> images;
  for (int i = 1; i <= p; ++i) images.push_back(e_in_x(i, p).poly);
  return {f.compose(images), true};
}

SymPoly schur_jt(const std::vector<int>& seq) {
  const int p = static_cast<int>(seq.size());
  require_p(p);
  std::vector<std::vector<SymPoly>> a(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a[static_cast<size_t>(i)].push_back(h_in_c(seq[static_cast<size_t>(i)] - (j + 1), p));
  return cofactor_determinant(a, SymPoly::constant(c_weights(p), 1));
}

bool GradientCheck::ok() const {
  return !pass.empty() && std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
}

GradientCheck power_sum_gradient_check(int m, int p) {
  if (m < 1) throw ValidationError("power_sum_gradient_check: m must be positive");
  require_p(p);
  const int n = m + p;
  GradientCheck out{m, p, {}};
  // (n+1) dW/dc_j = dP_{n+1}/dc_j; compare against (n+1)(-1)^(1+j) h_{n+1-j}
  const SymPoly big_p = p_in_c(n + 1, p);
  for (int j = 1; j <= p; ++j) {
    SymPoly lhs = big_p.derivative(j - 1);
    SymPoly rhs = BigInt((n + 1) * sign_of_parity(1 + j)) * h_in_c(n + 1 - j, p);
    out.pass.push_back(lhs == rhs);
  }
  return out;
}

JacobianCheck vandermonde_jacobian(int p) {
  require_p(p);
  const MultiPoly one = MultiPoly::constant(x_weights(p), 1);
  // dc_i/dx_j = e_{i-1}(x without x_j)
  std::vector<std::vector<MultiPoly>> a(static_cast<size_t>(p));
  for (int i = 1; i <= p; ++i)
    for (int j = 0; j < p; ++j) a[static_cast<size_t>(i - 1)].push_back(e_in_x_omitting(i - 1, p, j).poly);
  MultiPoly det = cofactor_determinant(a, one);

  MultiPoly vdm = one;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      vdm = vdm * (MultiPoly::variable(x_weights(p), i) - MultiPoly::variable(x_weights(p), j));
  JacobianCheck out{{det, false}, {vdm, false}, det == vdm};
  return out;
}

std::vector<int> eh_identity_failures(int p, int max_degree) {
  require_p(p);
  std::vector<int> failures;
  for (int k = 1; k <= max_degree; ++k) {
    SymPoly acc(c_weights(p));
    for (int r = 0; r <= k; ++r) {
      SymPoly term = h_in_c(r, p) * c_generator(k - r, p);
      if (r % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (!acc.is_zero()) failures.push_back(k);
  }
  return failures;
}

}  // namespace qschubert
