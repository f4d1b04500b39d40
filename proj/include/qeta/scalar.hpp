#ifndef QETA_SCALAR_HPP
#define QETA_SCALAR_HPP

#include <string>

#include "qeta/polynomial.hpp"

namespace qeta {

/// A rational function in the formal parameter q, kept in canonical form:
/// num/den with gcd(num, den) = 1 over the rationals, jointly coprime
/// integer contents, and a positive leading coefficient in den.  Equality
/// of Scalars is structural equality of the canonical forms.
class Scalar {
public:
  Scalar() : num_(), den_(IntPolynomial::constant(1)) {}
  Scalar(IntPolynomial num, IntPolynomial den);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return integer(1); }
  static Scalar integer(Int value);
  static Scalar from_rational(const Rational& value);
  /// The formal parameter q.
  static Scalar q();
  /// r = q + 1.
  static Scalar r();

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  bool operator==(const Scalar& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  /// Throws ArithmeticError on division by zero.
  Scalar operator/(const Scalar& other) const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  /// x^k for any integer k; throws ArithmeticError on 0^negative.
  Scalar power(int exponent) const;

  /// The rational function x(1/q), renormalized.  An involution on
  /// nonzero Scalars.
  Scalar substitute_reciprocal() const;

  /// Exact value at q = q0; throws PoleError if the denominator vanishes.
  Rational evaluate(const Rational& q0) const;

  /// "q^2-1", or "(q^2-1)/(q+1)" when the denominator is nontrivial.
  std::string to_string() const;

private:
  void normalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

inline Scalar operator*(const Int& lhs, const Scalar& rhs) {
  return Scalar::integer(lhs) * rhs;
}

}  // namespace qeta

#endif
