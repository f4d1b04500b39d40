#ifndef QETA_ELEMENTS_HPP
#define QETA_ELEMENTS_HPP

#include <map>
#include <string>
#include <utility>

#include "qeta/composition.hpp"
#include "qeta/scalar.hpp"

namespace qeta {

enum class QBasis { M, L, Eta };
enum class NBasis { H, EtaStar };

std::string basis_name(QBasis b);
std::string basis_name(NBasis b);

using TermMap = std::map<Composition, Scalar>;
using PairKey = std::pair<Composition, Composition>;
using PairTermMap = std::map<PairKey, Scalar>;

/// Adds coeff to the entry at key, erasing the entry if the sum is zero.
void add_term(TermMap& terms, const Composition& key, const Scalar& coeff);
void add_term(PairTermMap& terms, const PairKey& key, const Scalar& coeff);

/// A finitely supported Scalar-weighted combination of compositions,
/// interpreted in a declared basis of QSym.  Zero coefficients are never
/// stored.
template <class BasisT>
class BasedElement {
public:
  BasedElement() = default;
  explicit BasedElement(BasisT basis) : basis_(basis) {}
  BasedElement(BasisT basis, const Composition& comp, const Scalar& coeff)
      : basis_(basis) {
    add(comp, coeff);
  }

  BasisT basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  void add(const Composition& comp, const Scalar& coeff) {
    add_term(terms_, comp, coeff);
  }
  Scalar coeff(const Composition& comp) const {
    auto it = terms_.find(comp);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  bool operator==(const BasedElement& other) const {
    return basis_ == other.basis_ && terms_ == other.terms_;
  }
  bool operator!=(const BasedElement& other) const {
    return !(*this == other);
  }

  BasedElement operator+(const BasedElement& other) const {
    require_same_basis(other);
    BasedElement result = *this;
    for (const auto& [comp, c] : other.terms_) result.add(comp, c);
    return result;
  }
  BasedElement operator-(const BasedElement& other) const {
    require_same_basis(other);
    BasedElement result = *this;
    for (const auto& [comp, c] : other.terms_) result.add(comp, -c);
    return result;
  }
  BasedElement operator*(const Scalar& scalar) const {
    BasedElement result(basis_);
    for (const auto& [comp, c] : terms_) result.add(comp, c * scalar);
    return result;
  }

private:
  void require_same_basis(const BasedElement& other) const {
    if (basis_ != other.basis_) {
      throw UsageError("basis mismatch between elements");
    }
  }
  BasisT basis_{};
  TermMap terms_;
};

using QSymElement = BasedElement<QBasis>;
using NSymElement = BasedElement<NBasis>;

/// A finitely supported mapping from pairs of compositions to Scalars,
/// with a declared basis for each tensor leg.
template <class BasisT>
class TensorElement {
public:
  TensorElement() = default;
  TensorElement(BasisT left, BasisT right) : left_(left), right_(right) {}

  BasisT left_basis() const { return left_; }
  BasisT right_basis() const { return right_; }
  const PairTermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Composition& left, const Composition& right,
           const Scalar& coeff) {
    add_term(terms_, {left, right}, coeff);
  }

  bool operator==(const TensorElement& other) const {
    return left_ == other.left_ && right_ == other.right_ &&
           terms_ == other.terms_;
  }
  bool operator!=(const TensorElement& other) const {
    return !(*this == other);
  }

  TensorElement operator+(const TensorElement& other) const {
    if (left_ != other.left_ || right_ != other.right_) {
      throw UsageError("basis mismatch between tensors");
    }
    TensorElement result = *this;
    for (const auto& [key, c] : other.terms_) add_term(result.terms_, key, c);
    return result;
  }
  TensorElement operator*(const Scalar& scalar) const {
    TensorElement result(left_, right_);
    for (const auto& [key, c] : terms_) result.terms_.emplace(key, c * scalar);
    if (scalar.is_zero()) result.terms_.clear();
    return result;
  }

  /// Legwise product: (a (x) b) * (c (x) d) = prod(a,c) (x) prod(b,d),
  /// where prod maps a pair of compositions to an element in this basis.
  template <class ProductFn>
  TensorElement multiply(const TensorElement& other, ProductFn prod) const {
    if (left_ != other.left_ || right_ != other.right_) {
      throw UsageError("basis mismatch between tensors");
    }
    TensorElement result(left_, right_);
    for (const auto& [lhs, lc] : terms_) {
      for (const auto& [rhs, rc] : other.terms_) {
        const Scalar c = lc * rc;
        const BasedElement<BasisT> lefts = prod(lhs.first, rhs.first);
        const BasedElement<BasisT> rights = prod(lhs.second, rhs.second);
        for (const auto& [lcomp, lcoef] : lefts.terms()) {
          for (const auto& [rcomp, rcoef] : rights.terms()) {
            result.add(lcomp, rcomp, c * lcoef * rcoef);
          }
        }
      }
    }
    return result;
  }

private:
  BasisT left_{};
  BasisT right_{};
  PairTermMap terms_;
};

using QTensor = TensorElement<QBasis>;
using NTensor = TensorElement<NBasis>;

/// A Scalar-weighted combination of words x_gamma in the free algebra,
/// indexed by the compositions gamma.
class FreeWordElement {
public:
  FreeWordElement() = default;
  FreeWordElement(const Composition& word, const Scalar& coeff) {
    add(word, coeff);
  }
  static FreeWordElement unit() {
    return FreeWordElement(Composition(), Scalar::one());
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Composition& word, const Scalar& coeff) {
    add_term(terms_, word, coeff);
  }
  Scalar coeff(const Composition& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  bool operator==(const FreeWordElement& other) const {
    return terms_ == other.terms_;
  }
  bool operator!=(const FreeWordElement& other) const {
    return !(*this == other);
  }

  FreeWordElement operator+(const FreeWordElement& other) const;
  FreeWordElement operator-(const FreeWordElement& other) const;
  FreeWordElement operator*(const Scalar& scalar) const;

private:
  TermMap terms_;
};

/// Tensor square of the free algebra (no basis tags needed).
class FreeTensor {
public:
  const PairTermMap& terms() const { return terms_; }
  void add(const Composition& left, const Composition& right,
           const Scalar& coeff) {
    add_term(terms_, {left, right}, coeff);
  }
  bool operator==(const FreeTensor& other) const {
    return terms_ == other.terms_;
  }
  bool operator!=(const FreeTensor& other) const { return !(*this == other); }

private:
  PairTermMap terms_;
};

}  // namespace qeta

#endif
