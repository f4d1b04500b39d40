#ifndef QETA_NSYM_HPP
#define QETA_NSYM_HPP

#include <vector>

#include "qeta/qsym.hpp"

namespace qeta {

/// The single H-basis term H_alpha = H_alpha1 ... H_alphak.
NSymElement h_basis(const Composition& alpha);

/// Concatenation product on the H basis (noncommutative).
NSymElement h_product(const NSymElement& f, const NSymElement& g);

/// Coproduct on the H basis: Delta(H_n) = sum_i H_i (x) H_{n-i}, extended
/// as an algebra morphism.
NTensor coproduct_h(const NSymElement& f);

/// The dual eta element expanded in the H basis:
/// sum over refinements beta of alpha of r^{-l(beta)} (-1)^{l(beta)-l(alpha)} H_beta.
NSymElement eta_star(const Composition& alpha);

/// Converts EtaStar-tagged elements to their H expansion.
NSymElement to_h(const NSymElement& f);

/// Converts H-basis elements to the EtaStar basis via the triangular
/// system H_gamma = r^l(gamma) * sum of eta*_alpha over refinements alpha.
NSymElement to_eta_star(const NSymElement& f);

/// The duality pairing <H_alpha, M_beta> = [alpha = beta], extended
/// bilinearly; other declared bases are converted first.
Scalar pairing(const NSymElement& h, const QSymElement& f);

/// True iff eta_star(alpha) eta_star(beta) = eta_star(alpha beta).
bool eta_star_multiplicativity_check(const Composition& alpha,
                                     const Composition& beta);

/// Coproduct of eta*_n in the EtaStar (x) EtaStar basis (n >= 1):
/// the sum over splittings |beta|+|gamma| = n with nearly equal lengths.
NTensor coproduct_eta_star_n(int n);

/// Coproduct of eta*_alpha in the EtaStar (x) EtaStar basis, via the
/// entrywise splitting formula.
NTensor coproduct_eta_star(const Composition& alpha);

/// Converts both legs of an NSym tensor to the H basis.
NTensor tensor_to_h(const NTensor& t);

/// Truncated power series over NSym; coefficient d is homogeneous of
/// NSym-degree d for the series this module constructs.
class NSymSeries {
public:
  explicit NSymSeries(int trunc);

  int trunc() const { return trunc_; }
  const NSymElement& coeff(int d) const;
  void set_coeff(int d, NSymElement value);

  bool operator==(const NSymSeries& other) const;
  bool operator!=(const NSymSeries& other) const { return !(*this == other); }

  NSymSeries operator+(const NSymSeries& other) const;
  NSymSeries operator-(const NSymSeries& other) const;
  NSymSeries operator*(const NSymSeries& other) const;
  /// Adds c * 1 to the t^0 coefficient.
  NSymSeries add_constant(const Scalar& c) const;
  NSymSeries sub_constant(const Scalar& c) const;
  /// Multiplicative inverse; requires the t^0 coefficient to be an
  /// invertible Scalar multiple of 1 (throws ArithmeticError otherwise).
  NSymSeries invert() const;
  NSymSeries power(int exponent) const;

private:
  int trunc_;
  std::vector<NSymElement> coeffs_;
};

/// H(t) = sum_{n=0}^{N} H_n t^n.
NSymSeries series_h(int trunc);

/// G(t) = sum_{n=1}^{N} eta*_n t^n, coefficients expanded in H.
NSymSeries series_g(int trunc);

}  // namespace qeta

#endif
