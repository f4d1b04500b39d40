#include "qeta/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace qeta {

namespace {

int total_degree(const Exponents& monomial) {
  int d = 0;
  for (const auto& [idx, e] : monomial) d += e;
  return d;
}

// The composition of exponents read in increasing variable order.
Composition packed_composition(const Exponents& monomial) {
  std::vector<int> entries;
  entries.reserve(monomial.size());
  for (const auto& [idx, e] : monomial) entries.push_back(e);
  return Composition(std::move(entries));
}

// x_1^{a_1} ... x_l^{a_l} for the composition (a_1, ..., a_l).
Exponents packed_monomial(const Composition& alpha) {
  Exponents monomial;
  monomial.reserve(static_cast<size_t>(alpha.length()));
  for (int i = 0; i < alpha.length(); ++i) monomial.push_back({i + 1, alpha[i]});
  return monomial;
}

// All strictly increasing index tuples i_1 < ... < i_l inside [1, nvars].
void choose_indices(int nvars, int l, int next, std::vector<int>& acc,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(acc.size()) == l) {
    emit(acc);
    return;
  }
  for (int i = next; i <= nvars; ++i) {
    acc.push_back(i);
    choose_indices(nvars, l, i + 1, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

TruncatedPolynomial::TruncatedPolynomial(int nvars, int maxdeg)
    : nvars_(nvars), maxdeg_(maxdeg) {
  if (nvars < 0 || maxdeg < 0) {
    throw DomainError("polynomial shape parameters must be >= 0");
  }
}

void TruncatedPolynomial::add(const Exponents& monomial, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  for (size_t i = 0; i < monomial.size(); ++i) {
    const auto& [idx, e] = monomial[i];
    if (idx < 1 || idx > nvars_ || e < 1 ||
        (i > 0 && monomial[i - 1].first >= idx)) {
      throw DomainError("malformed monomial exponent vector");
    }
  }
  if (total_degree(monomial) > maxdeg_) return;
  auto [it, inserted] = terms_.emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar TruncatedPolynomial::coeff(const Exponents& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

bool TruncatedPolynomial::operator==(const TruncatedPolynomial& other) const {
  return nvars_ == other.nvars_ && maxdeg_ == other.maxdeg_ &&
         terms_ == other.terms_;
}

TruncatedPolynomial TruncatedPolynomial::operator+(
    const TruncatedPolynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw UsageError("polynomial variable counts differ");
  }
  TruncatedPolynomial result(nvars_, std::min(maxdeg_, other.maxdeg_));
  for (const auto& [mono, c] : terms_) result.add(mono, c);
  for (const auto& [mono, c] : other.terms_) result.add(mono, c);
  return result;
}

TruncatedPolynomial TruncatedPolynomial::operator-(
    const TruncatedPolynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw UsageError("polynomial variable counts differ");
  }
  TruncatedPolynomial result(nvars_, std::min(maxdeg_, other.maxdeg_));
  for (const auto& [mono, c] : terms_) result.add(mono, c);
  for (const auto& [mono, c] : other.terms_) result.add(mono, -c);
  return result;
}

std::string TruncatedPolynomial::to_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [mono, c] : terms_) {
    out << c.to_string();
    if (!mono.empty()) out << " *";
    for (size_t i = 0; i < mono.size(); ++i) {
      out << (i ? "*" : " ");
      out << 'x' << mono[i].first;
      if (mono[i].second > 1) out << '^' << mono[i].second;
    }
    out << '\n';
  }
  return out.str();
}

TruncatedPolynomial expand(const QSymElement& f, int nvars, int maxdeg) {
  const QSymElement fm = to_m(f);
  if (fm.degree() > maxdeg) {
    throw DomainError("truncation order below element degree");
  }
  TruncatedPolynomial result(nvars, maxdeg);
  for (const auto& [alpha, c] : fm.terms()) {
    const int l = alpha.length();
    std::vector<int> acc;
    choose_indices(nvars, l, 1, acc, [&](const std::vector<int>& indices) {
      Exponents monomial;
      monomial.reserve(static_cast<size_t>(l));
      for (int i = 0; i < l; ++i) monomial.push_back({indices[static_cast<size_t>(i)], alpha[i]});
      result.add(monomial, c);
    });
  }
  return result;
}

TruncatedPolynomial expand_eta_direct(const Composition& alpha, int nvars,
                                      int maxdeg) {
  if (alpha.degree() > maxdeg) {
    throw DomainError("truncation order below element degree");
  }
  TruncatedPolynomial result(nvars, maxdeg);
  const Scalar r = Scalar::r();
  const int l = alpha.length();
  // Weakly increasing tuples i_1 <= ... <= i_l; equal indices merge
  // exponents; the weight counts the distinct indices.
  std::vector<int> tuple;
  std::function<void(int)> recurse = [&](int next) {
    if (static_cast<int>(tuple.size()) == l) {
      Exponents monomial;
      int distinct = 0;
      for (int i = 0; i < l; ++i) {
        const int idx = tuple[static_cast<size_t>(i)];
        if (!monomial.empty() && monomial.back().first == idx) {
          monomial.back().second += alpha[i];
        } else {
          monomial.push_back({idx, alpha[i]});
          ++distinct;
        }
      }
      result.add(monomial, r.power(distinct));
      return;
    }
    for (int i = next; i <= nvars; ++i) {
      tuple.push_back(i);
      recurse(i);
      tuple.pop_back();
    }
  };
  if (l == 0) {
    result.add({}, Scalar::one());
  } else {
    recurse(1);
  }
  return result;
}

TruncatedPolynomial poly_product(const TruncatedPolynomial& p,
                                 const TruncatedPolynomial& q) {
  if (p.nvars() != q.nvars()) {
    throw UsageError("polynomial variable counts differ");
  }
  TruncatedPolynomial result(p.nvars(), std::min(p.maxdeg(), q.maxdeg()));
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      Exponents merged;
      merged.reserve(mp.size() + mq.size());
      size_t i = 0, j = 0;
      while (i < mp.size() || j < mq.size()) {
        if (j == mq.size() ||
            (i < mp.size() && mp[i].first < mq[j].first)) {
          merged.push_back(mp[i++]);
        } else if (i == mp.size() || mq[j].first < mp[i].first) {
          merged.push_back(mq[j++]);
        } else {
          merged.push_back({mp[i].first, mp[i].second + mq[j].second});
          ++i;
          ++j;
        }
      }
      result.add(merged, cp * cq);
    }
  }
  return result;
}

QSymElement extract_m(const TruncatedPolynomial& p) {
  QSymElement result(QBasis::M);
  for (const auto& [mono, c] : p.terms()) {
    const Composition alpha = packed_composition(mono);
    const Scalar reference = p.coeff(packed_monomial(alpha));
    if (c != reference) {
      throw ValidationError(
          "polynomial is not quasisymmetric: pack-equivalent monomials "
          "carry different coefficients");
    }
    if (mono == packed_monomial(alpha)) result.add(alpha, c);
  }
  return result;
}

}  // namespace qeta
