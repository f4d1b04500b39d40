#include "qeta/qsym.hpp"

#include <algorithm>

namespace qeta {

namespace {

// |X \ Y| and |X n Y| for sorted member vectors.
int count_difference(const std::vector<int>& x, const std::vector<int>& y) {
  int count = 0;
  for (int v : x) {
    if (!std::binary_search(y.begin(), y.end(), v)) ++count;
  }
  return count;
}

int count_intersection(const std::vector<int>& x, const std::vector<int>& y) {
  int count = 0;
  for (int v : x) {
    if (std::binary_search(y.begin(), y.end(), v)) ++count;
  }
  return count;
}

Composition prefix_of(const Composition& alpha, int len) {
  return Composition(std::vector<int>(alpha.entries().begin(),
                                      alpha.entries().begin() + len));
}

Composition suffix_of(const Composition& alpha, int from) {
  return Composition(std::vector<int>(alpha.entries().begin() + from,
                                      alpha.entries().end()));
}

// M_u M_v as a map Composition -> integer multiplicity, by the
// quasi-shuffle recursion on the leading entries.
void quasi_shuffle(const std::vector<int>& u, size_t iu,
                   const std::vector<int>& v, size_t iv,
                   std::vector<int>& acc,
                   std::map<Composition, Int>& out) {
  if (iu == u.size() && iv == v.size()) {
    out[Composition(acc)] += 1;
    return;
  }
  if (iu < u.size()) {
    acc.push_back(u[iu]);
    quasi_shuffle(u, iu + 1, v, iv, acc, out);
    acc.pop_back();
  }
  if (iv < v.size()) {
    acc.push_back(v[iv]);
    quasi_shuffle(u, iu, v, iv + 1, acc, out);
    acc.pop_back();
  }
  if (iu < u.size() && iv < v.size()) {
    acc.push_back(u[iu] + v[iv]);
    quasi_shuffle(u, iu + 1, v, iv + 1, acc, out);
    acc.pop_back();
  }
}

void require_basis(const QSymElement& f, QBasis expected, const char* where) {
  if (f.basis() != expected) {
    throw UsageError(std::string(where) + " expects the " +
                     basis_name(expected) + " basis, got " +
                     basis_name(f.basis()));
  }
}

}  // namespace

QSymElement m_basis(const Composition& alpha) {
  return QSymElement(QBasis::M, alpha, Scalar::one());
}

std::vector<Composition> refinements(const Composition& alpha) {
  const int n = alpha.degree();
  const DescentSet d = descent_set(alpha);
  std::vector<int> free_slots;
  for (int x = 1; x <= n - 1; ++x) {
    if (!d.contains(x)) free_slots.push_back(x);
  }
  const size_t k = free_slots.size();
  std::vector<Composition> result;
  result.reserve(size_t{1} << k);
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    std::vector<int> members = d.members();
    for (size_t bit = 0; bit < k; ++bit) {
      if (mask & (size_t{1} << bit)) members.push_back(free_slots[bit]);
    }
    result.push_back(comp_of_subset(DescentSet(n, std::move(members))));
  }
  std::sort(result.begin(), result.end());
  return result;
}

QSymElement l_basis(const Composition& alpha) {
  QSymElement result(QBasis::M);
  for (const Composition& beta : refinements(alpha)) {
    result.add(beta, Scalar::one());
  }
  return result;
}

QSymElement eta_basis(const Composition& alpha) {
  QSymElement result(QBasis::M);
  const Scalar r = Scalar::r();
  for (const Composition& beta : coarsenings(alpha)) {
    result.add(beta, r.power(beta.length()));
  }
  return result;
}

QSymElement m_product(const QSymElement& f, const QSymElement& g) {
  require_basis(f, QBasis::M, "m_product");
  require_basis(g, QBasis::M, "m_product");
  QSymElement result(QBasis::M);
  for (const auto& [u, cu] : f.terms()) {
    for (const auto& [v, cv] : g.terms()) {
      std::map<Composition, Int> expansion;
      std::vector<int> acc;
      quasi_shuffle(u.entries(), 0, v.entries(), 0, acc, expansion);
      const Scalar c = cu * cv;
      for (const auto& [comp, mult] : expansion) {
        result.add(comp, c * Scalar::integer(mult));
      }
    }
  }
  return result;
}

QSymElement from_eta(const QSymElement& g) {
  require_basis(g, QBasis::Eta, "from_eta");
  QSymElement result(QBasis::M);
  const Scalar r = Scalar::r();
  for (const auto& [alpha, c] : g.terms()) {
    for (const Composition& beta : coarsenings(alpha)) {
      result.add(beta, c * r.power(beta.length()));
    }
  }
  return result;
}

QSymElement to_eta(const QSymElement& f) {
  require_basis(f, QBasis::M, "to_eta");
  QSymElement result(QBasis::Eta);
  const Scalar r = Scalar::r();
  for (const auto& [beta, c] : f.terms()) {
    const Scalar scaled = c * r.power(-beta.length());
    for (const Composition& alpha : coarsenings(beta)) {
      const int sign_exp = beta.length() - alpha.length();
      const Scalar sign = Scalar::integer(sign_exp % 2 == 0 ? 1 : -1);
      result.add(alpha, scaled * sign);
    }
  }
  return result;
}

QSymElement to_m(const QSymElement& f) {
  switch (f.basis()) {
    case QBasis::M:
      return f;
    case QBasis::Eta:
      return from_eta(f);
    case QBasis::L: {
      QSymElement result(QBasis::M);
      for (const auto& [gamma, c] : f.terms()) {
        const QSymElement expanded = l_basis(gamma);
        for (const auto& [beta, d] : expanded.terms()) {
          result.add(beta, c * d);
        }
      }
      return result;
    }
  }
  throw UsageError("unknown basis");
}

QSymElement to_basis(const QSymElement& f, QBasis target) {
  if (f.basis() == target) return f;
  const QSymElement in_m = to_m(f);
  switch (target) {
    case QBasis::M:
      return in_m;
    case QBasis::Eta:
      return to_eta(in_m);
    case QBasis::L: {
      // Moebius inversion of the refinement sum:
      // M_alpha = sum over refinements beta of (-1)^(l(beta)-l(alpha)) L_beta.
      QSymElement result(QBasis::L);
      for (const auto& [alpha, c] : in_m.terms()) {
        for (const Composition& beta : refinements(alpha)) {
          const int sign_exp = beta.length() - alpha.length();
          const Scalar sign = Scalar::integer(sign_exp % 2 == 0 ? 1 : -1);
          result.add(beta, c * sign);
        }
      }
      return result;
    }
  }
  throw UsageError("unknown basis");
}

QSymElement eta_to_l(const Composition& alpha) {
  const int n = alpha.degree();
  if (n < 1) throw DomainError("eta_to_l needs a composition of size >= 1");
  const std::vector<int> da = descent_set(alpha).members();
  QSymElement result(QBasis::L);
  const Scalar q = Scalar::q();
  const Scalar r = Scalar::r();
  for (const Composition& gamma : compositions_of(n)) {
    const std::vector<int> dg = descent_set(gamma).members();
    const int minus_exp = count_difference(dg, da);
    const int q_exp = count_intersection(dg, da);
    const Scalar sign = Scalar::integer(minus_exp % 2 == 0 ? 1 : -1);
    result.add(gamma, r * sign * q.power(q_exp));
  }
  return result;
}

QSymElement l_to_eta(const Composition& gamma) {
  const int n = gamma.degree();
  if (n < 1) throw DomainError("l_to_eta needs a composition of size >= 1");
  const std::vector<int> dg = descent_set(gamma).members();
  QSymElement result(QBasis::Eta);
  const Scalar q = Scalar::q();
  for (const Composition& alpha : compositions_of(n)) {
    const std::vector<int> da = descent_set(alpha).members();
    const int minus_exp = count_difference(dg, da);
    int outside = 0;  // |[n-1] \ (D(gamma) u D(alpha))|
    for (int x = 1; x <= n - 1; ++x) {
      if (!std::binary_search(dg.begin(), dg.end(), x) &&
          !std::binary_search(da.begin(), da.end(), x)) {
        ++outside;
      }
    }
    const Scalar sign = Scalar::integer(minus_exp % 2 == 0 ? 1 : -1);
    result.add(alpha, sign * q.power(outside));
  }
  return result;
}

QTensor coproduct_m(const QSymElement& f) {
  require_basis(f, QBasis::M, "coproduct_m");
  QTensor result(QBasis::M, QBasis::M);
  for (const auto& [alpha, c] : f.terms()) {
    for (int cut = 0; cut <= alpha.length(); ++cut) {
      result.add(prefix_of(alpha, cut), suffix_of(alpha, cut), c);
    }
  }
  return result;
}

QTensor coproduct_eta(const Composition& alpha) {
  QTensor result(QBasis::Eta, QBasis::Eta);
  for (int cut = 0; cut <= alpha.length(); ++cut) {
    result.add(prefix_of(alpha, cut), suffix_of(alpha, cut), Scalar::one());
  }
  return result;
}

QSymElement antipode_m(const QSymElement& f) {
  require_basis(f, QBasis::M, "antipode_m");
  QSymElement result(QBasis::M);
  for (const auto& [alpha, c] : f.terms()) {
    const Scalar sign = Scalar::integer(alpha.length() % 2 == 0 ? 1 : -1);
    for (const Composition& gamma : coarsenings(reverse(alpha))) {
      result.add(gamma, c * sign);
    }
  }
  return result;
}

QSymElement antipode_eta_s2(const Composition& alpha) {
  QSymElement result(QBasis::Eta);
  const Scalar sign = Scalar::integer(alpha.length() % 2 == 0 ? 1 : -1);
  const Scalar q_minus_1 = Scalar::q() - Scalar::one();
  for (const Composition& beta : coarsenings(reverse(alpha))) {
    result.add(beta, sign * q_minus_1.power(alpha.length() - beta.length()));
  }
  return result;
}

QSymElement antipode_eta_s(const Composition& alpha) {
  QSymElement result(QBasis::M);
  const Scalar minus_q = -Scalar::q();
  // p + 1 = (q+1)/q for the reciprocal parameter p = 1/q.
  const Scalar p_plus_1 = Scalar::r() / Scalar::q();
  const Scalar outer = minus_q.power(alpha.length());
  for (const Composition& beta : coarsenings(reverse(alpha))) {
    result.add(beta, outer * p_plus_1.power(beta.length()));
  }
  return result;
}

QSymElement t_r(const QSymElement& f) {
  require_basis(f, QBasis::M, "t_r");
  QSymElement result(QBasis::M);
  const Scalar r = Scalar::r();
  for (const auto& [alpha, c] : f.terms()) {
    result.add(alpha, c * r.power(alpha.length()));
  }
  return result;
}

QSymElement r_q(const QSymElement& f) {
  require_basis(f, QBasis::M, "r_q");
  QSymElement result(QBasis::M);
  const Scalar r = Scalar::r();
  for (const auto& [alpha, c] : f.terms()) {
    const Composition bar = complement(alpha);
    result.add(bar, c * r.power(bar.length()));
  }
  return result;
}

Scalar counit_q(const QSymElement& f) {
  return to_m(f).coeff(Composition());
}

bool eta_support_in(const QSymElement& f,
                    const std::function<bool(int)>& allowed, int maxdeg) {
  if (f.degree() > maxdeg) {
    throw DomainError("eta_support_in: element degree exceeds the bound");
  }
  return eta_support_in(f, allowed);
}

bool eta_support_in(const QSymElement& f,
                    const std::function<bool(int)>& allowed) {
  const QSymElement in_eta =
      f.basis() == QBasis::Eta ? f : to_eta(to_m(f));
  for (const auto& [alpha, c] : in_eta.terms()) {
    for (int entry : alpha.entries()) {
      if (!allowed(entry)) return false;
    }
  }
  return true;
}

QSymElement specialize(const QSymElement& f, const Rational& q0) {
  QSymElement result(f.basis());
  for (const auto& [comp, c] : f.terms()) {
    result.add(comp, Scalar::from_rational(c.evaluate(q0)));
  }
  return result;
}

NSymElement specialize(const NSymElement& f, const Rational& q0) {
  NSymElement result(f.basis());
  for (const auto& [comp, c] : f.terms()) {
    result.add(comp, Scalar::from_rational(c.evaluate(q0)));
  }
  return result;
}

QTensor tensor_to_m(const QTensor& t) {
  QTensor result(QBasis::M, QBasis::M);
  for (const auto& [key, c] : t.terms()) {
    const QSymElement left =
        to_m(QSymElement(t.left_basis(), key.first, Scalar::one()));
    const QSymElement right =
        to_m(QSymElement(t.right_basis(), key.second, Scalar::one()));
    for (const auto& [lc, lv] : left.terms()) {
      for (const auto& [rc, rv] : right.terms()) {
        result.add(lc, rc, c * lv * rv);
      }
    }
  }
  return result;
}

}  // namespace qeta
