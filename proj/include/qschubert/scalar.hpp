// Exact scalar types and the Eigen glue that lets them live in dense matrices.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschubert {

using BigInt = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;

/// Raised when caller-supplied data violates an operation's precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exactness check that must always hold fails.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt factorial(long n) {
  if (n < 0) throw ValidationError("factorial of negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt to_bigint(const Rational& r) {
  if (r.get_den() != 1) throw InternalConsistencyError("expected an integer, got " + r.get_str());
  return r.get_num();
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "num/den" or "num" when the denominator is one.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw ValidationError("malformed rational '" + s + "'");
  r.canonicalize();
  return r;
}

inline int sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace qschubert

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
