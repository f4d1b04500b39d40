#include "qeta/scalar.hpp"

#include "qeta/errors.hpp"

namespace qeta {

Scalar::Scalar(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("scalar with zero denominator");
  normalize();
}

Scalar Scalar::integer(Int value) {
  return Scalar(IntPolynomial::constant(std::move(value)),
                IntPolynomial::constant(1));
}

Scalar Scalar::from_rational(const Rational& value) {
  return Scalar(IntPolynomial::constant(boost::multiprecision::numerator(value)),
                IntPolynomial::constant(
                    boost::multiprecision::denominator(value)));
}

Scalar Scalar::q() {
  return Scalar(IntPolynomial::monomial(1, 1), IntPolynomial::constant(1));
}

Scalar Scalar::r() {
  return Scalar(IntPolynomial({1, 1}), IntPolynomial::constant(1));
}

bool Scalar::is_one() const {
  return num_ == IntPolynomial::constant(1) &&
         den_ == IntPolynomial::constant(1);
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  const IntPolynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    // Both primitive parts are exactly divisible by the primitive gcd.
    num_ = (num_.primitive_part().divide_exact(g)) * num_.content();
    den_ = (den_.primitive_part().divide_exact(g)) * den_.content();
  }
  const Int joint =
      boost::multiprecision::gcd(num_.content(), den_.content());
  if (joint > 1) {
    std::vector<Int> nc = num_.coeffs();
    for (Int& c : nc) c /= joint;
    std::vector<Int> dc = den_.coeffs();
    for (Int& c : dc) c /= joint;
    num_ = IntPolynomial(std::move(nc));
    den_ = IntPolynomial(std::move(dc));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator-() const {
  Scalar result = *this;
  result.num_ = -result.num_;
  return result;
}

Scalar Scalar::operator+(const Scalar& other) const {
  return Scalar(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Scalar Scalar::operator-(const Scalar& other) const {
  return Scalar(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

Scalar Scalar::operator*(const Scalar& other) const {
  return Scalar(num_ * other.num_, den_ * other.den_);
}

Scalar Scalar::operator/(const Scalar& other) const {
  if (other.is_zero()) throw ArithmeticError("scalar division by zero");
  return Scalar(num_ * other.den_, den_ * other.num_);
}

Scalar Scalar::power(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw ArithmeticError("zero scalar raised to negative power");
    return Scalar(den_, num_).power(-exponent);
  }
  Scalar result = one();
  Scalar base = *this;
  int k = exponent;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Scalar Scalar::substitute_reciprocal() const {
  if (is_zero()) return zero();
  const int dn = num_.degree();
  const int dd = den_.degree();
  const int m = std::max(dn, dd);
  // num(1/q)/den(1/q) scaled by q^m: reversed coefficients padded to degree m.
  auto reversed_padded = [m](const IntPolynomial& p) {
    std::vector<Int> result(static_cast<size_t>(m) + 1, Int(0));
    for (int d = 0; d <= p.degree(); ++d) {
      result[static_cast<size_t>(m - d)] = p.coeff(d);
    }
    return IntPolynomial(std::move(result));
  };
  return Scalar(reversed_padded(num_), reversed_padded(den_));
}

Rational Scalar::evaluate(const Rational& q0) const {
  const Rational bottom = den_.evaluate(q0);
  if (bottom == 0) {
    throw PoleError("scalar " + to_string() + " has a pole at q = " +
                    q0.str());
  }
  return num_.evaluate(q0) / bottom;
}

std::string Scalar::to_string() const {
  if (den_ == IntPolynomial::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qeta
