#include "qeta/elements.hpp"

namespace qeta {

std::string basis_name(QBasis b) {
  switch (b) {
    case QBasis::M: return "M";
    case QBasis::L: return "L";
    case QBasis::Eta: return "Eta";
  }
  return "?";
}

std::string basis_name(NBasis b) {
  switch (b) {
    case NBasis::H: return "H";
    case NBasis::EtaStar: return "EtaStar";
  }
  return "?";
}

void add_term(TermMap& terms, const Composition& key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void add_term(PairTermMap& terms, const PairKey& key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

FreeWordElement FreeWordElement::operator+(const FreeWordElement& other) const {
  FreeWordElement result = *this;
  for (const auto& [word, c] : other.terms_) result.add(word, c);
  return result;
}

FreeWordElement FreeWordElement::operator-(const FreeWordElement& other) const {
  FreeWordElement result = *this;
  for (const auto& [word, c] : other.terms_) result.add(word, -c);
  return result;
}

FreeWordElement FreeWordElement::operator*(const Scalar& scalar) const {
  FreeWordElement result;
  for (const auto& [word, c] : terms_) result.add(word, c * scalar);
  return result;
}

}  // namespace qeta
