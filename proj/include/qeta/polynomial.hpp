#ifndef QETA_POLYNOMIAL_HPP
#define QETA_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qeta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over the integers, coefficients in
/// ascending degree with no trailing zero.  The zero polynomial is the
/// empty coefficient list.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial constant(Int value);
  /// The monomial value * x^degree.
  static IntPolynomial monomial(Int value, int degree);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int degree) const;
  const Int& leading() const;

  bool operator==(const IntPolynomial& other) const {
    return coeffs_ == other.coeffs_;
  }
  bool operator!=(const IntPolynomial& other) const {
    return !(*this == other);
  }

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator*(const Int& scalar) const;

  /// gcd of the absolute values of the coefficients; 0 for the zero
  /// polynomial.
  Int content() const;
  /// this / content, with positive leading coefficient preserved as-is.
  IntPolynomial primitive_part() const;
  /// Exact division; throws ArithmeticError if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  Rational evaluate(const Rational& x) const;

  /// Human form in the variable 'q', highest degree first ("q^2-1").
  std::string to_string() const;

private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Primitive polynomial gcd (positive leading coefficient); gcd(0,0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace qeta

#endif
