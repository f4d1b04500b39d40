#ifndef QETA_ORACLE_HPP
#define QETA_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "qeta/qsym.hpp"

namespace qeta {

/// A monomial's exponents, stored sparsely as (variable index, exponent)
/// pairs with indices increasing and exponents positive.
using Exponents = std::vector<std::pair<int, int>>;

/// A polynomial in nvars commuting variables, truncated at total degree
/// maxdeg, with Scalar coefficients.  No zero coefficients are stored.
class TruncatedPolynomial {
public:
  TruncatedPolynomial(int nvars, int maxdeg);

  int nvars() const { return nvars_; }
  int maxdeg() const { return maxdeg_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * monomial; monomials beyond maxdeg are discarded.
  void add(const Exponents& monomial, const Scalar& coeff);
  Scalar coeff(const Exponents& monomial) const;

  bool operator==(const TruncatedPolynomial& other) const;
  bool operator!=(const TruncatedPolynomial& other) const {
    return !(*this == other);
  }

  TruncatedPolynomial operator+(const TruncatedPolynomial& other) const;
  TruncatedPolynomial operator-(const TruncatedPolynomial& other) const;

  /// One "coeff * x1^a1*x2^a2" line per term, in term order.
  std::string to_string() const;

private:
  int nvars_;
  int maxdeg_;
  std::map<Exponents, Scalar> terms_;
};

/// Expands a QSym element (any declared basis) in nvars variables.
/// Throws DomainError if the element's degree exceeds maxdeg.
TruncatedPolynomial expand(const QSymElement& f, int nvars, int maxdeg);

/// Direct expansion of eta_alpha over weakly increasing index tuples
/// weighted by r^(number of distinct indices); bypasses the M expansion.
TruncatedPolynomial expand_eta_direct(const Composition& alpha, int nvars,
                                      int maxdeg);

/// Exact truncated product; the factors must agree on nvars, and the
/// result is truncated at the smaller maxdeg.
TruncatedPolynomial poly_product(const TruncatedPolynomial& p,
                                 const TruncatedPolynomial& q);

/// Recovers the M-basis element whose expansion p is.  Validates
/// quasisymmetry first (pack-equivalent monomials must carry equal
/// coefficients) and throws ValidationError if it fails.
QSymElement extract_m(const TruncatedPolynomial& p);

}  // namespace qeta

#endif
