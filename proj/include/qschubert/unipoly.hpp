// Dense univariate polynomials over an exact coefficient ring.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "qschubert/scalar.hpp"

namespace qschubert {

template <typename Coeff>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Coeff> c) : coeffs_(c) { trim(); }
  explicit UniPoly(std::vector<Coeff> c) : coeffs_(std::move(c)) { trim(); }

  static UniPoly constant(const Coeff& c) { return UniPoly(std::vector<Coeff>{c}); }
  static UniPoly monomial(const Coeff& c, int degree) {
    std::vector<Coeff> v(static_cast<size_t>(degree) + 1, Coeff(0));
    v.back() = c;
    return UniPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Coeff(0);
    return coeffs_[static_cast<size_t>(k)];
  }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff leading() const { return is_zero() ? Coeff(0) : coeffs_.back(); }

  template <typename T>
  T eval(const T& x) const {
    T acc = T(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const Coeff& s, UniPoly a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// p(s) -> p(s^k)
  UniPoly compose_power(int k) const {
    if (is_zero()) return {};
    std::vector<Coeff> r(static_cast<size_t>(degree() * k) + 1, Coeff(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i * static_cast<size_t>(k)] = coeffs_[i];
    return UniPoly(std::move(r));
  }

  std::string str(const std::string& var = "s") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Coeff& c = coeffs_[static_cast<size_t>(k)];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")";
      if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

using RationalPoly = UniPoly<Rational>;

/// Remainder of a by b over a field.
inline RationalPoly poly_remainder(RationalPoly a, const RationalPoly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rational f = a.leading() / b.leading();
    a -= RationalPoly::monomial(f, a.degree() - b.degree()) * b;
  }
  return a;
}

/// Monic gcd over the rationals; gcd(0, 0) = 0.
inline RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = poly_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational inv = 1 / a.leading();
  return inv * a;
}

}  // namespace qschubert
