#include "qeta/nsym.hpp"

#include <algorithm>

namespace qeta {

namespace {

void require_h(const NSymElement& f, const char* where) {
  if (f.basis() != NBasis::H) {
    throw UsageError(std::string(where) + " expects the H basis, got " +
                     basis_name(f.basis()));
  }
}

}  // namespace

NSymElement h_basis(const Composition& alpha) {
  return NSymElement(NBasis::H, alpha, Scalar::one());
}

NSymElement h_product(const NSymElement& f, const NSymElement& g) {
  require_h(f, "h_product");
  require_h(g, "h_product");
  NSymElement result(NBasis::H);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      result.add(concat(a, b), ca * cb);
    }
  }
  return result;
}

NTensor coproduct_h(const NSymElement& f) {
  require_h(f, "coproduct_h");
  NTensor result(NBasis::H, NBasis::H);
  for (const auto& [alpha, c] : f.terms()) {
    // Delta(H_alpha) = prod_s Delta(H_{alpha_s}); expand the product of
    // the per-entry splittings H_i (x) H_{n-i} by concatenating legs.
    PairTermMap acc;
    acc.emplace(PairKey{Composition(), Composition()}, Scalar::one());
    for (int entry : alpha.entries()) {
      PairTermMap next;
      for (const auto& [key, coeff] : acc) {
        for (int i = 0; i <= entry; ++i) {
          Composition left = key.first;
          Composition right = key.second;
          if (i > 0) left = concat(left, Composition({i}));
          if (entry - i > 0) {
            right = concat(right, Composition({entry - i}));
          }
          add_term(next, {left, right}, coeff);
        }
      }
      acc = std::move(next);
    }
    for (const auto& [key, coeff] : acc) {
      result.add(key.first, key.second, c * coeff);
    }
  }
  return result;
}

NSymElement eta_star(const Composition& alpha) {
  NSymElement result(NBasis::H);
  const Scalar r = Scalar::r();
  for (const Composition& beta : refinements(alpha)) {
    const int sign_exp = beta.length() - alpha.length();
    const Scalar sign = Scalar::integer(sign_exp % 2 == 0 ? 1 : -1);
    result.add(beta, sign * r.power(-beta.length()));
  }
  return result;
}

NSymElement to_h(const NSymElement& f) {
  if (f.basis() == NBasis::H) return f;
  NSymElement result(NBasis::H);
  for (const auto& [alpha, c] : f.terms()) {
    const NSymElement expanded = eta_star(alpha);
    for (const auto& [beta, d] : expanded.terms()) {
      result.add(beta, c * d);
    }
  }
  return result;
}

NSymElement to_eta_star(const NSymElement& f) {
  if (f.basis() == NBasis::EtaStar) return f;
  NSymElement result(NBasis::EtaStar);
  const Scalar r = Scalar::r();
  for (const auto& [gamma, c] : f.terms()) {
    const Scalar scaled = c * r.power(gamma.length());
    for (const Composition& alpha : refinements(gamma)) {
      result.add(alpha, scaled);
    }
  }
  return result;
}

Scalar pairing(const NSymElement& h, const QSymElement& f) {
  const NSymElement hh = to_h(h);
  const QSymElement fm = to_m(f);
  Scalar acc = Scalar::zero();
  for (const auto& [alpha, c] : hh.terms()) {
    auto it = fm.terms().find(alpha);
    if (it != fm.terms().end()) acc += c * it->second;
  }
  return acc;
}

bool eta_star_multiplicativity_check(const Composition& alpha,
                                     const Composition& beta) {
  return h_product(eta_star(alpha), eta_star(beta)) ==
         eta_star(concat(alpha, beta));
}

NTensor coproduct_eta_star_n(int n) {
  if (n < 1) throw DomainError("coproduct_eta_star_n needs n >= 1");
  NTensor result(NBasis::EtaStar, NBasis::EtaStar);
  const Scalar minus_q = -Scalar::q();
  const Scalar q_minus_1 = Scalar::q() - Scalar::one();
  for (int size_b = 0; size_b <= n; ++size_b) {
    for (const Composition& beta : compositions_of(size_b)) {
      for (const Composition& gamma : compositions_of(n - size_b)) {
        const int lb = beta.length();
        const int lg = gamma.length();
        if (std::abs(lb - lg) > 1) continue;
        const Scalar coeff = minus_q.power(std::max(lb, lg) - 1) *
                             q_minus_1.power(lb == lg ? 1 : 0);
        result.add(beta, gamma, coeff);
      }
    }
  }
  return result;
}

NTensor coproduct_eta_star(const Composition& alpha) {
  NTensor result(NBasis::EtaStar, NBasis::EtaStar);
  // Entrywise splittings (beta_s, gamma_s) with |beta_s| + |gamma_s| =
  // alpha_s and nearly equal lengths; legs concatenate.
  struct State {
    Composition left;
    Composition right;
    Scalar coeff;
  };
  std::vector<State> states{{Composition(), Composition(), Scalar::one()}};
  const Scalar minus_q = -Scalar::q();
  const Scalar q_minus_1 = Scalar::q() - Scalar::one();
  for (int entry : alpha.entries()) {
    std::vector<State> next;
    for (const State& st : states) {
      for (int size_b = 0; size_b <= entry; ++size_b) {
        for (const Composition& beta : compositions_of(size_b)) {
          for (const Composition& gamma : compositions_of(entry - size_b)) {
            const int lb = beta.length();
            const int lg = gamma.length();
            if (std::abs(lb - lg) > 1) continue;
            const Scalar coeff = st.coeff *
                                 minus_q.power(std::max(lb, lg) - 1) *
                                 q_minus_1.power(lb == lg ? 1 : 0);
            next.push_back(
                {concat(st.left, beta), concat(st.right, gamma), coeff});
          }
        }
      }
    }
    states = std::move(next);
  }
  for (const State& st : states) result.add(st.left, st.right, st.coeff);
  return result;
}

NTensor tensor_to_h(const NTensor& t) {
  NTensor result(NBasis::H, NBasis::H);
  for (const auto& [key, c] : t.terms()) {
    const NSymElement left =
        to_h(NSymElement(t.left_basis(), key.first, Scalar::one()));
    const NSymElement right =
        to_h(NSymElement(t.right_basis(), key.second, Scalar::one()));
    for (const auto& [lc, lv] : left.terms()) {
      for (const auto& [rc, rv] : right.terms()) {
        result.add(lc, rc, c * lv * rv);
      }
    }
  }
  return result;
}

NSymSeries::NSymSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw DomainError("series truncation order must be >= 0");
  coeffs_.assign(static_cast<size_t>(trunc) + 1, NSymElement(NBasis::H));
}

const NSymElement& NSymSeries::coeff(int d) const {
  if (d < 0 || d > trunc_) {
    throw DomainError("series coefficient index out of range");
  }
  return coeffs_[static_cast<size_t>(d)];
}

void NSymSeries::set_coeff(int d, NSymElement value) {
  if (d < 0 || d > trunc_) {
    throw DomainError("series coefficient index out of range");
  }
  coeffs_[static_cast<size_t>(d)] = std::move(value);
}

bool NSymSeries::operator==(const NSymSeries& other) const {
  return trunc_ == other.trunc_ && coeffs_ == other.coeffs_;
}

NSymSeries NSymSeries::operator+(const NSymSeries& other) const {
  if (trunc_ != other.trunc_) {
    throw UsageError("series truncation orders differ");
  }
  NSymSeries result(trunc_);
  for (int d = 0; d <= trunc_; ++d) {
    result.set_coeff(d, coeff(d) + other.coeff(d));
  }
  return result;
}

NSymSeries NSymSeries::operator-(const NSymSeries& other) const {
  if (trunc_ != other.trunc_) {
    throw UsageError("series truncation orders differ");
  }
  NSymSeries result(trunc_);
  for (int d = 0; d <= trunc_; ++d) {
    result.set_coeff(d, coeff(d) - other.coeff(d));
  }
  return result;
}

NSymSeries NSymSeries::operator*(const NSymSeries& other) const {
  if (trunc_ != other.trunc_) {
    throw UsageError("series truncation orders differ");
  }
  NSymSeries result(trunc_);
  for (int d = 0; d <= trunc_; ++d) {
    NSymElement acc(NBasis::H);
    for (int i = 0; i <= d; ++i) {
      acc = acc + h_product(coeff(i), other.coeff(d - i));
    }
    result.set_coeff(d, std::move(acc));
  }
  return result;
}

NSymSeries NSymSeries::add_constant(const Scalar& c) const {
  NSymSeries result = *this;
  NSymElement head = coeff(0);
  head.add(Composition(), c);
  result.set_coeff(0, std::move(head));
  return result;
}

NSymSeries NSymSeries::sub_constant(const Scalar& c) const {
  return add_constant(-c);
}

NSymSeries NSymSeries::invert() const {
  // The constant term must be c * 1 with c an invertible Scalar; the
  // inverse then comes from the usual coefficient recursion (c is central,
  // so no noncommutative inversion is needed).
  const NSymElement& head = coeff(0);
  if (head.terms().size() != 1 ||
      head.terms().begin()->first != Composition()) {
    throw ArithmeticError(
        "series inversion needs a scalar multiple of 1 as constant term");
  }
  const Scalar c = head.terms().begin()->second;
  if (c.is_zero()) {
    throw ArithmeticError("series inversion with zero constant term");
  }
  const Scalar c_inv = Scalar::one() / c;
  NSymSeries result(trunc_);
  NSymElement b0(NBasis::H);
  b0.add(Composition(), c_inv);
  result.set_coeff(0, std::move(b0));
  for (int d = 1; d <= trunc_; ++d) {
    NSymElement acc(NBasis::H);
    for (int j = 1; j <= d; ++j) {
      acc = acc + h_product(coeff(j), result.coeff(d - j));
    }
    result.set_coeff(d, acc * (-c_inv));
  }
  return result;
}

NSymSeries NSymSeries::power(int exponent) const {
  if (exponent < 0) throw DomainError("series power expects exponent >= 0");
  NSymSeries result(trunc_);
  NSymElement one(NBasis::H);
  one.add(Composition(), Scalar::one());
  result.set_coeff(0, std::move(one));
  for (int e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

NSymSeries series_h(int trunc) {
  NSymSeries result(trunc);
  for (int n = 0; n <= trunc; ++n) {
    NSymElement term(NBasis::H);
    term.add(n == 0 ? Composition() : Composition({n}), Scalar::one());
    result.set_coeff(n, std::move(term));
  }
  return result;
}

NSymSeries series_g(int trunc) {
  NSymSeries result(trunc);
  for (int n = 1; n <= trunc; ++n) {
    result.set_coeff(n, eta_star(Composition({n})));
  }
  return result;
}

}  // namespace qeta
