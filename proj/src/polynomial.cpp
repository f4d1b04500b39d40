#include "qeta/polynomial.hpp"

#include <sstream>

#include "qeta/errors.hpp"

namespace qeta {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(Int value) {
  IntPolynomial p;
  if (value != 0) p.coeffs_.push_back(std::move(value));
  return p;
}

IntPolynomial IntPolynomial::monomial(Int value, int degree) {
  IntPolynomial p;
  if (value != 0) {
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.coeffs_.back() = std::move(value);
  }
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPolynomial::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<size_t>(degree)];
}

const Int& IntPolynomial::leading() const {
  if (is_zero()) throw ArithmeticError("zero polynomial has no leading term");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> result = coeffs_;
  for (Int& c : result) c = -c;
  return IntPolynomial(std::move(result));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<Int> result(std::max(coeffs_.size(), other.coeffs_.size()),
                          Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) result[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) {
    result[i] += other.coeffs_[i];
  }
  return IntPolynomial(std::move(result));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  return *this + (-other);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return IntPolynomial();
  std::vector<Int> result(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      result[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(result));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
  std::vector<Int> result = coeffs_;
  for (Int& c : result) c *= scalar;
  return IntPolynomial(std::move(result));
}

Int IntPolynomial::content() const {
  Int g(0);
  for (const Int& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  const Int g = content();
  std::vector<Int> result = coeffs_;
  for (Int& c : result) c /= g;
  return IntPolynomial(std::move(result));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (is_zero()) return IntPolynomial();
  std::vector<Int> rem = coeffs_;
  const int dd = divisor.degree();
  const int dq = degree() - dd;
  if (dq < 0) throw ArithmeticError("inexact polynomial division");
  std::vector<Int> quot(static_cast<size_t>(dq) + 1, Int(0));
  for (int k = dq; k >= 0; --k) {
    const Int& top = rem[static_cast<size_t>(k + dd)];
    if (top % divisor.leading() != 0) {
      throw ArithmeticError("inexact polynomial division");
    }
    const Int q = top / divisor.leading();
    quot[static_cast<size_t>(k)] = q;
    if (q != 0) {
      for (int j = 0; j <= dd; ++j) {
        rem[static_cast<size_t>(k + j)] -= q * divisor.coeff(j);
      }
    }
  }
  for (const Int& c : rem) {
    if (c != 0) throw ArithmeticError("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& c = coeff(d);
    if (c == 0) continue;
    const Int abs_c = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (d == 0) {
      out << abs_c.str();
    } else {
      if (abs_c != 1) out << abs_c.str() << '*';
      out << 'q';
      if (d > 1) out << '^' << d;
    }
  }
  return out.str();
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    IntPolynomial scaled = a * b.leading();
    IntPolynomial subtract = b * IntPolynomial::monomial(a.leading(), shift);
    a = scaled - subtract;
  }
  return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  if (!u.is_zero() && u.leading() < 0) u = -u;
  return u;
}

}  // namespace qeta
