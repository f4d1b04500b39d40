#include "qeta/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qeta/fshuffle.hpp"
#include "qeta/nsym.hpp"
#include "qeta/oracle.hpp"
#include "qeta/products.hpp"

namespace qeta {

namespace {

constexpr int kMaxReportedFailures = 8;

std::string pair_label(const Composition& a, const Composition& b) {
  return "(" + a.to_string() + ")x(" + b.to_string() + ")";
}

std::vector<std::pair<Composition, Composition>> composition_pairs(
    int maxdeg) {
  std::vector<std::pair<Composition, Composition>> pairs;
  for (int total = 0; total <= maxdeg; ++total) {
    for (int left = 0; left <= total; ++left) {
      for (const Composition& a : compositions_of(left)) {
        for (const Composition& b : compositions_of(total - left)) {
          pairs.emplace_back(a, b);
        }
      }
    }
  }
  return pairs;
}

// ----- compositions ---------------------------------------------------

Family family_d_comp_roundtrip(int maxdeg) {
  Family fam{"compositions/d-comp-roundtrip", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({"comp(D(" + alpha.to_string() + "))", [alpha] {
                              return comp_of_subset(descent_set(alpha)) ==
                                     alpha;
                            }});
    }
    // Every subset of [n-1] directly, by bitmask.
    for (size_t mask = 0; mask < (size_t{1} << std::max(0, n - 1)); ++mask) {
      std::vector<int> members;
      for (int bit = 0; bit < n - 1; ++bit) {
        if (mask & (size_t{1} << bit)) members.push_back(bit + 1);
      }
      const DescentSet subset(n, std::move(members));
      fam.checks.push_back({"D(comp(" + subset.to_string() + "))", [subset] {
                              return descent_set(comp_of_subset(subset)) ==
                                     subset;
                            }});
    }
  }
  return fam;
}

Family family_length_law(int maxdeg) {
  Family fam{"compositions/length-vs-descents", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
                              const int expected =
                                  descent_set(alpha).count() +
                                  (alpha.degree() != 0 ? 1 : 0);
                              return alpha.length() == expected;
                            }});
    }
  }
  return fam;
}

Family family_involutions(int maxdeg) {
  Family fam{"compositions/involutions", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        if (reverse(reverse(alpha)) != alpha) return false;
        if (complement(complement(alpha)) != alpha) return false;
        if (omega(omega(alpha)) != alpha) return false;
        if (reverse_subset(reverse_subset(descent_set(alpha))) !=
            descent_set(alpha)) {
          return false;
        }
        return reverse_subset(descent_set(alpha)) ==
               descent_set(reverse(alpha));
      }});
    }
  }
  return fam;
}

Family family_complement_length(int maxdeg) {
  Family fam{"compositions/complement-length", {}};
  for (int n = 1; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
                              return complement(alpha).length() +
                                         alpha.length() ==
                                     alpha.degree() + 1;
                            }});
    }
  }
  return fam;
}

Family family_coarsening_count(int maxdeg) {
  Family fam{"compositions/coarsening-count", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& gamma : compositions_of(n)) {
      fam.checks.push_back({gamma.to_string(), [gamma] {
        const size_t expected =
            gamma.length() >= 1 ? (size_t{1} << (gamma.length() - 1)) : 1;
        return coarsenings(gamma).size() == expected;
      }});
    }
  }
  return fam;
}

Family family_concat_descents(int maxdeg) {
  Family fam{"compositions/concat-descents", {}};
  for (const auto& [beta, gamma] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(beta, gamma), [beta, gamma] {
      const Composition joined = concat(beta, gamma);
      if (joined.length() != beta.length() + gamma.length()) return false;
      if (joined.degree() != beta.degree() + gamma.degree()) return false;
      const int m = beta.degree();
      const DescentSet dj = descent_set(joined);
      std::vector<int> head, tail;
      for (int x : dj.members()) {
        if (x <= m - 1) head.push_back(x);
        if (x >= m + 1) tail.push_back(x - m);
      }
      return DescentSet(beta.degree(), head) == descent_set(beta) &&
             DescentSet(gamma.degree(), tail) == descent_set(gamma);
    }});
  }
  return fam;
}

// ----- bases -----------------------------------------------------------

Family family_eta_triangular(int maxdeg) {
  Family fam{"bases/eta-triangular", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        const QSymElement eta = eta_basis(alpha);
        if (eta.coeff(alpha) != Scalar::r().power(alpha.length())) {
          return false;
        }
        for (const auto& [beta, c] : eta.terms()) {
          if (beta != alpha && beta.length() >= alpha.length()) return false;
        }
        return true;
      }});
    }
  }
  return fam;
}

Family family_eta_roundtrip(int maxdeg) {
  Family fam{"bases/eta-roundtrip", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        const QSymElement m_elem = m_basis(alpha);
        if (from_eta(to_eta(m_elem)) != m_elem) return false;
        const QSymElement eta_elem(QBasis::Eta, alpha, Scalar::one());
        return to_eta(from_eta(eta_elem)) == eta_elem;
      }});
    }
  }
  return fam;
}

Family family_eta_vs_fundamental(int maxdeg) {
  Family fam{"bases/eta-vs-fundamental", {}};
  for (int n = 1; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        if (to_m(eta_to_l(alpha)) != eta_basis(alpha)) return false;
        const QSymElement lhs = from_eta(l_to_eta(alpha));
        const QSymElement rhs =
            l_basis(alpha) * Scalar::r().power(alpha.degree());
        return lhs == rhs;
      }});
    }
  }
  return fam;
}

Family family_oracle_expansion(int maxdeg) {
  Family fam{"bases/oracle-eta-expansion", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha, maxdeg] {
        return expand(eta_basis(alpha), maxdeg, maxdeg) ==
               expand_eta_direct(alpha, maxdeg, maxdeg);
      }});
    }
  }
  return fam;
}

Family family_oracle_roundtrip(int maxdeg) {
  Family fam{"bases/oracle-extract-roundtrip", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha, maxdeg] {
        return extract_m(expand(m_basis(alpha), maxdeg, maxdeg)) ==
               m_basis(alpha);
      }});
    }
  }
  return fam;
}

Family family_hoffman_specialization(int maxdeg) {
  Family fam{"bases/q0-specialization", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        QSymElement essential(QBasis::M);
        for (const Composition& beta : coarsenings(alpha)) {
          essential.add(beta, Scalar::one());
        }
        return specialize(eta_basis(alpha), Rational(0)) == essential;
      }});
    }
  }
  return fam;
}

Family family_rq_tr_identities(int maxdeg) {
  Family fam{"bases/rq-tr-identities", {}};
  for (int n = 1; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        const Scalar r_pow = Scalar::r().power(alpha.degree() + 1);
        if (r_q(r_q(m_basis(alpha))) != m_basis(alpha) * r_pow) return false;
        if (r_q(l_basis(complement(alpha))) != eta_basis(alpha)) return false;
        if (r_q(from_eta(QSymElement(QBasis::Eta, alpha, Scalar::one()))) !=
            l_basis(complement(alpha)) * r_pow) {
          return false;
        }
        const Scalar sign =
            Scalar::integer(alpha.length() % 2 == 0 ? 1 : -1);
        return t_r(antipode_m(m_basis(reverse(alpha)))) * sign ==
               eta_basis(alpha);
      }});
    }
  }
  return fam;
}

// ----- products ---------------------------------------------------------

Family family_products_v1_v2(int maxdeg) {
  Family fam{"products/v1-equals-v2", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      return eta_product_v1(a, b) == eta_product_v2(a, b);
    }});
  }
  return fam;
}

Family family_products_v1_v3(int maxdeg) {
  Family fam{"products/v1-equals-v3", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      return eta_product_v1(a, b) == eta_product_v3(a, b);
    }});
  }
  return fam;
}

Family family_products_vs_m(int maxdeg) {
  Family fam{"products/matches-m-product", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      return from_eta(eta_product_v1(a, b)) ==
             m_product(eta_basis(a), eta_basis(b));
    }});
  }
  return fam;
}

Family family_oracle_product_law(int maxdeg) {
  Family fam{"products/oracle-product-law", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      const int n = std::max(1, a.degree() + b.degree());
      const TruncatedPolynomial pa = expand(m_basis(a), n, n);
      const TruncatedPolynomial pb = expand(m_basis(b), n, n);
      return extract_m(poly_product(pa, pb)) ==
             m_product(m_basis(a), m_basis(b));
    }});
  }
  return fam;
}

Family family_products_commute(int maxdeg) {
  Family fam{"products/commutativity", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    if (b < a) continue;
    fam.checks.push_back({pair_label(a, b), [a, b] {
      return eta_product_v1(a, b) == eta_product_v1(b, a);
    }});
  }
  return fam;
}

Family family_stuffler_identity(int maxdeg) {
  Family fam{"products/stuffler-stat-identity", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      for (const Stufufuffler& f :
           enumerate_stufufufflers(a.length(), b.length())) {
        const StufuffleStats st = stats(f, a, b);
        if (2 * st.loss + st.poise + st.wt.length() !=
            a.length() + b.length()) {
          return false;
        }
      }
      return true;
    }});
  }
  return fam;
}

void plain_shuffles(const Composition& a, size_t i, const Composition& b,
                    size_t j, std::vector<int>& acc,
                    std::set<Composition>& out) {
  if (i == a.entries().size() && j == b.entries().size()) {
    out.insert(Composition(acc));
    return;
  }
  if (i < a.entries().size()) {
    acc.push_back(a.entries()[i]);
    plain_shuffles(a, i + 1, b, j, acc, out);
    acc.pop_back();
  }
  if (j < b.entries().size()) {
    acc.push_back(b.entries()[j]);
    plain_shuffles(a, i, b, j + 1, acc, out);
    acc.pop_back();
  }
}

Family family_shuffle_support(int maxdeg) {
  Family fam{"products/shuffle-term-support", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      std::set<Composition> undeformed;
      for (const Stufufuffler& f :
           enumerate_stufufufflers(a.length(), b.length())) {
        const StufuffleStats st = stats(f, a, b);
        if (st.loss == 0 && st.poise == 0) undeformed.insert(st.wt);
      }
      std::set<Composition> expected;
      std::vector<int> acc;
      plain_shuffles(a, 0, b, 0, acc, expected);
      return undeformed == expected;
    }});
  }
  return fam;
}

// ----- coproduct ----------------------------------------------------------

using TripleKey = std::array<Composition, 3>;

std::map<TripleKey, Scalar> coassoc_route(const QSymElement& f,
                                          bool left_first) {
  std::map<TripleKey, Scalar> out;
  const QTensor once = coproduct_m(f);
  for (const auto& [key, c] : once.terms()) {
    const QTensor again =
        coproduct_m(m_basis(left_first ? key.first : key.second));
    for (const auto& [inner, d] : again.terms()) {
      TripleKey triple = left_first
                             ? TripleKey{inner.first, inner.second, key.second}
                             : TripleKey{key.first, inner.first, inner.second};
      const Scalar add = c * d;
      auto [it, inserted] = out.emplace(triple, add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Family family_coproduct_eta_vs_m(int maxdeg) {
  Family fam{"coproduct/eta-vs-m-route", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        return tensor_to_m(coproduct_eta(alpha)) ==
               coproduct_m(eta_basis(alpha));
      }});
    }
  }
  return fam;
}

Family family_coassociativity(int maxdeg) {
  Family fam{"coproduct/coassociativity", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        const QSymElement f = m_basis(alpha);
        return coassoc_route(f, true) == coassoc_route(f, false);
      }});
    }
  }
  return fam;
}

Family family_counit_law(int maxdeg) {
  Family fam{"coproduct/counit-law", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        QSymElement left_applied(QBasis::M);
        QSymElement right_applied(QBasis::M);
        const QTensor delta = coproduct_m(m_basis(alpha));
        for (const auto& [key, c] : delta.terms()) {
          if (key.first.empty()) left_applied.add(key.second, c);
          if (key.second.empty()) right_applied.add(key.first, c);
        }
        return left_applied == m_basis(alpha) &&
               right_applied == m_basis(alpha);
      }});
    }
  }
  return fam;
}

Family family_tr_intertwines(int maxdeg) {
  Family fam{"coproduct/tr-intertwines", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        const QTensor lhs = coproduct_m(t_r(m_basis(alpha)));
        QTensor rhs(QBasis::M, QBasis::M);
        const Scalar r = Scalar::r();
        const QTensor delta = coproduct_m(m_basis(alpha));
        for (const auto& [key, c] : delta.terms()) {
          rhs.add(key.first, key.second,
                  c * r.power(key.first.length() + key.second.length()));
        }
        return lhs == rhs;
      }});
    }
  }
  return fam;
}

// ----- antipode -----------------------------------------------------------

Family family_antipode_s2(int maxdeg) {
  Family fam{"antipode/s2-vs-m-route", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        return from_eta(antipode_eta_s2(alpha)) ==
               antipode_m(eta_basis(alpha));
      }});
    }
  }
  return fam;
}

Family family_antipode_s(int maxdeg) {
  Family fam{"antipode/s-vs-m-route", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        return antipode_eta_s(alpha) == antipode_m(eta_basis(alpha));
      }});
    }
  }
  return fam;
}

Family family_antipode_involutive(int maxdeg) {
  Family fam{"antipode/involutive", {}};
  for (int n = 0; n <= std::max(0, maxdeg - 1); ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        return antipode_m(antipode_m(m_basis(alpha))) == m_basis(alpha);
      }});
    }
  }
  return fam;
}

Family family_hopf_axiom(int maxdeg) {
  Family fam{"antipode/hopf-axiom", {}};
  for (int n = 0; n <= std::max(0, maxdeg - 1); ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        QSymElement acc(QBasis::M);
        const QTensor delta = coproduct_m(m_basis(alpha));
        for (const auto& [key, c] : delta.terms()) {
          const QSymElement product =
              m_product(antipode_m(m_basis(key.first)), m_basis(key.second));
          for (const auto& [comp, d] : product.terms()) {
            acc.add(comp, c * d);
          }
        }
        QSymElement expected(QBasis::M);
        if (alpha.empty()) expected.add(Composition(), Scalar::one());
        return acc == expected;
      }});
    }
  }
  return fam;
}

// ----- dual ----------------------------------------------------------------

Family family_gram(int maxdeg) {
  Family fam{"dual/gram-identity", {}};
  for (int n = 0; n <= maxdeg; ++n) {
    const std::vector<Composition> comps = compositions_of(n);
    for (const Composition& alpha : comps) {
      for (const Composition& beta : comps) {
        fam.checks.push_back({pair_label(alpha, beta), [alpha, beta] {
          const Scalar expected =
              alpha == beta ? Scalar::one() : Scalar::zero();
          const QSymElement eta(QBasis::Eta, beta, Scalar::one());
          return pairing(eta_star(alpha), eta) == expected;
        }});
      }
    }
  }
  return fam;
}

Family family_eta_star_multiplicative(int maxdeg) {
  Family fam{"dual/eta-star-multiplicative", {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      return eta_star_multiplicativity_check(a, b);
    }});
  }
  return fam;
}

Family family_dual_coproduct_n(int maxdeg) {
  Family fam{"dual/coproduct-eta-star-n", {}};
  for (int n = 1; n <= maxdeg; ++n) {
    fam.checks.push_back({std::to_string(n), [n] {
      return tensor_to_h(coproduct_eta_star_n(n)) ==
             coproduct_h(eta_star(Composition({n})));
    }});
  }
  return fam;
}

Family family_dual_coproduct_alpha(int maxdeg) {
  Family fam{"dual/coproduct-eta-star", {}};
  for (int n = 0; n <= std::max(0, maxdeg - 1); ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        const NTensor direct = coproduct_eta_star(alpha);
        if (tensor_to_h(direct) != coproduct_h(eta_star(alpha))) return false;
        // Legwise product of the per-entry coproducts, multiplied with
        // eta* concatenation on each leg.
        NTensor product(NBasis::EtaStar, NBasis::EtaStar);
        product.add(Composition(), Composition(), Scalar::one());
        auto concat_elem = [](const Composition& x, const Composition& y) {
          return NSymElement(NBasis::EtaStar, concat(x, y), Scalar::one());
        };
        for (int entry : alpha.entries()) {
          product = product.multiply(coproduct_eta_star_n(entry), concat_elem);
        }
        return direct == product;
      }});
    }
  }
  return fam;
}

Family family_duality_adjoint(int maxdeg) {
  Family fam{"dual/product-coproduct-adjoint", {}};
  const int bound = std::max(0, maxdeg - 1);
  for (int n = 0; n <= bound; ++n) {
    for (int na = 0; na <= n; ++na) {
      for (const Composition& a : compositions_of(na)) {
        for (const Composition& b : compositions_of(n - na)) {
          for (const Composition& c : compositions_of(n)) {
            fam.checks.push_back(
                {pair_label(a, b) + "|" + c.to_string(), [a, b, c] {
                  // <H_a H_b, M_c> against the coproduct of M_c.
                  Scalar rhs = Scalar::zero();
                  const QTensor delta_m = coproduct_m(m_basis(c));
                  for (const auto& [key, w] : delta_m.terms()) {
                    rhs += w * pairing(h_basis(a), m_basis(key.first)) *
                           pairing(h_basis(b), m_basis(key.second));
                  }
                  const Scalar lhs =
                      pairing(h_product(h_basis(a), h_basis(b)), m_basis(c));
                  if (lhs != rhs) return false;
                  // <H_c, M_a M_b> against the coproduct of H_c.
                  Scalar rhs2 = Scalar::zero();
                  const NTensor delta_h = coproduct_h(h_basis(c));
                  for (const auto& [key, w] : delta_h.terms()) {
                    rhs2 += w * pairing(h_basis(key.first), m_basis(a)) *
                            pairing(h_basis(key.second), m_basis(b));
                  }
                  const Scalar lhs2 =
                      pairing(h_basis(c), m_product(m_basis(a), m_basis(b)));
                  return lhs2 == rhs2;
                }});
          }
        }
      }
    }
  }
  return fam;
}

// ----- series ----------------------------------------------------------------

Family family_series_g_through_h(int maxdeg) {
  Family fam{"series/g-through-h", {}};
  fam.checks.push_back({"order " + std::to_string(maxdeg), [maxdeg] {
    const NSymSeries h = series_h(maxdeg);
    const NSymSeries lhs =
        (h.sub_constant(Scalar::one())) *
        (h.add_constant(Scalar::q()).invert());
    return lhs == series_g(maxdeg);
  }});
  return fam;
}

Family family_series_g_powers(int maxdeg) {
  Family fam{"series/g-powers", {}};
  for (int k = 0; k <= 4; ++k) {
    fam.checks.push_back({"k=" + std::to_string(k), [k, maxdeg] {
      const NSymSeries gk = series_g(maxdeg).power(k);
      NSymSeries expected(maxdeg);
      for (int d = 0; d <= maxdeg; ++d) {
        NSymElement acc(NBasis::H);
        for (const Composition& beta : compositions_of(d)) {
          if (beta.length() != k) continue;
          acc = acc + eta_star(beta);
        }
        expected.set_coeff(d, std::move(acc));
      }
      return gk == expected;
    }});
  }
  return fam;
}

// ----- shuffle ----------------------------------------------------------------

std::vector<std::pair<std::string, SharpParams>> parameter_grid() {
  std::vector<std::pair<std::string, SharpParams>> params;
  const std::vector<int> values = {0, 1, 2, 3, -1};
  for (int a : values) {
    for (int b : values) {
      params.push_back({"a=" + std::to_string(a) + ",b=" + std::to_string(b),
                        SharpParams{Scalar::integer(a), Scalar::integer(b)}});
    }
  }
  params.push_back(
      {"a=q-1,b=-q",
       SharpParams{Scalar::q() - Scalar::one(), -Scalar::q()}});
  return params;
}

Family family_sharp_unital(int maxdeg) {
  Family fam{"shuffle/unital", {}};
  const int bound = std::max(0, maxdeg - 1);
  for (int n = 0; n <= bound; ++n) {
    for (const Composition& w : compositions_of(n)) {
      fam.checks.push_back({w.to_string(), [w] {
        const FreeWordElement word(w, Scalar::one());
        for (const auto& [label, params] : parameter_grid()) {
          if (sharp(FreeWordElement::unit(), word, params) != word) {
            return false;
          }
          if (sharp(word, FreeWordElement::unit(), params) != word) {
            return false;
          }
        }
        return true;
      }});
    }
  }
  return fam;
}

Family family_sharp_commutative(int maxdeg) {
  Family fam{"shuffle/commutative", {}};
  for (const auto& [a, b] : composition_pairs(std::max(0, maxdeg - 1))) {
    if (b < a) continue;
    fam.checks.push_back({pair_label(a, b), [a, b] {
      const FreeWordElement u(a, Scalar::one());
      const FreeWordElement v(b, Scalar::one());
      for (const auto& [label, params] : parameter_grid()) {
        if (sharp(u, v, params) != sharp(v, u, params)) return false;
      }
      return true;
    }});
  }
  return fam;
}

Family family_sharp_associative(int maxdeg) {
  Family fam{"shuffle/associative", {}};
  const int bound = std::max(0, maxdeg - 1);
  for (int total = 0; total <= bound; ++total) {
    for (int na = 0; na <= total; ++na) {
      for (int nb = 0; nb + na <= total; ++nb) {
        for (const Composition& a : compositions_of(na)) {
          for (const Composition& b : compositions_of(nb)) {
            for (const Composition& c : compositions_of(total - na - nb)) {
              fam.checks.push_back({pair_label(a, b) + "x(" + c.to_string() +
                                        ")",
                                    [a, b, c] {
                const FreeWordElement u(a, Scalar::one());
                const FreeWordElement v(b, Scalar::one());
                const FreeWordElement w(c, Scalar::one());
                for (const auto& [label, params] : parameter_grid()) {
                  if (sharp(sharp(u, v, params), w, params) !=
                      sharp(u, sharp(v, w, params), params)) {
                    return false;
                  }
                }
                return true;
              }});
            }
          }
        }
      }
    }
  }
  return fam;
}

Family family_sharp_explicit(int maxdeg) {
  Family fam{"shuffle/recursion-vs-stufufufflers", {}};
  for (const auto& [a, b] : composition_pairs(std::max(0, maxdeg - 1))) {
    fam.checks.push_back({pair_label(a, b), [a, b] {
      const FreeWordElement u(a, Scalar::one());
      const FreeWordElement v(b, Scalar::one());
      for (const auto& [label, params] : parameter_grid()) {
        if (sharp(u, v, params) != sharp_explicit(a, b, params)) return false;
      }
      return true;
    }});
  }
  return fam;
}

Family family_eta_morphism_algebra(int maxdeg) {
  Family fam{"shuffle/eta-algebra-morphism", {}};
  const std::vector<Rational> us = {Rational(1), Rational(-1), Rational(2)};
  for (const auto& [a, b] : composition_pairs(std::max(0, maxdeg - 1))) {
    fam.checks.push_back({pair_label(a, b), [a, b, us] {
      const FreeWordElement u(a, Scalar::one());
      const FreeWordElement v(b, Scalar::one());
      for (const Rational& uval : us) {
        const SharpParams params = sharp_params_for(uval);
        const QSymElement lhs =
            eta_morphism(sharp(u, v, params), uval, params);
        const QSymElement rhs = m_product(eta_morphism(u, uval, params),
                                          eta_morphism(v, uval, params));
        if (lhs != rhs) return false;
      }
      return true;
    }});
  }
  return fam;
}

Family family_eta_morphism_coalgebra(int maxdeg) {
  Family fam{"shuffle/eta-coalgebra-morphism", {}};
  const std::vector<Rational> us = {Rational(1), Rational(-1), Rational(2)};
  const int bound = std::max(0, maxdeg - 1);
  for (int n = 0; n <= bound; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha, us] {
        const FreeWordElement word(alpha, Scalar::one());
        for (const Rational& uval : us) {
          const SharpParams params = sharp_params_for(uval);
          QTensor lhs(QBasis::M, QBasis::M);
          const FreeTensor cut = deconcat(word);
          for (const auto& [key, c] : cut.terms()) {
            const QSymElement left = eta_morphism(
                FreeWordElement(key.first, Scalar::one()), uval, params);
            const QSymElement right = eta_morphism(
                FreeWordElement(key.second, Scalar::one()), uval, params);
            for (const auto& [lc, lv] : left.terms()) {
              for (const auto& [rc, rv] : right.terms()) {
                lhs.add(lc, rc, c * lv * rv);
              }
            }
          }
          if (lhs != coproduct_m(eta_morphism(word, uval, params))) {
            return false;
          }
        }
        return true;
      }});
    }
  }
  return fam;
}

// Hopf-axiom antipode of (F, #) by degreewise recursion over prefixes;
// the independent reference for the closed antipode formula.
FreeWordElement recursive_sharp_antipode(const Composition& alpha,
                                         const SharpParams& params) {
  if (alpha.empty()) return FreeWordElement::unit();
  FreeWordElement acc;
  for (int cut = 0; cut < alpha.length(); ++cut) {
    const Composition prefix(std::vector<int>(
        alpha.entries().begin(), alpha.entries().begin() + cut));
    const Composition suffix(std::vector<int>(
        alpha.entries().begin() + cut, alpha.entries().end()));
    acc = acc + sharp(recursive_sharp_antipode(prefix, params),
                      FreeWordElement(suffix, Scalar::one()), params);
  }
  return acc * Scalar::integer(-1);
}

Family family_sharp_antipode(int maxdeg) {
  Family fam{"shuffle/antipode-formula", {}};
  const int bound = std::max(0, maxdeg - 2);
  for (int n = 0; n <= bound; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      fam.checks.push_back({alpha.to_string(), [alpha] {
        for (const auto& [label, params] : parameter_grid()) {
          if (antipode_f(alpha, params) !=
              recursive_sharp_antipode(alpha, params)) {
            return false;
          }
        }
        return true;
      }});
    }
  }
  return fam;
}

Family family_stufufuffler_counts(int) {
  Family fam{"shuffle/stufufuffler-counts", {}};
  fam.checks.push_back({"l=2,m=1", [] {
    return enumerate_stufufufflers(2, 1).size() == 6;
  }});
  fam.checks.push_back({"l=2,m=2", [] {
    return enumerate_stufufufflers(2, 2).size() == 18;
  }});
  fam.checks.push_back({"l=1,m=0", [] {
    return enumerate_stufufufflers(1, 0).size() == 1;
  }});
  return fam;
}

// ----- subalg ----------------------------------------------------------------

Family family_subalgebra(const std::string& name,
                         const std::function<bool(int)>& allowed, int maxdeg,
                         bool at_q1) {
  Family fam{name, {}};
  for (const auto& [a, b] : composition_pairs(maxdeg)) {
    const auto in_y_star = [&allowed](const Composition& comp) {
      for (int e : comp.entries()) {
        if (!allowed(e)) return false;
      }
      return true;
    };
    if (!in_y_star(a) || !in_y_star(b)) continue;
    fam.checks.push_back({pair_label(a, b), [a, b, allowed, at_q1] {
      QSymElement product = eta_product_v1(a, b);
      if (at_q1) product = specialize(product, Rational(1));
      return eta_support_in(product, allowed);
    }});
  }
  return fam;
}

std::vector<Family> build_one(const std::string& suite, int maxdeg) {
  std::vector<Family> fams;
  if (suite == "compositions") {
    fams.push_back(family_d_comp_roundtrip(maxdeg));
    fams.push_back(family_length_law(maxdeg));
    fams.push_back(family_involutions(maxdeg));
    fams.push_back(family_complement_length(maxdeg));
    fams.push_back(family_coarsening_count(maxdeg));
    fams.push_back(family_concat_descents(maxdeg));
  } else if (suite == "bases") {
    fams.push_back(family_eta_triangular(maxdeg));
    fams.push_back(family_eta_roundtrip(maxdeg));
    fams.push_back(family_eta_vs_fundamental(maxdeg));
    fams.push_back(family_oracle_expansion(maxdeg));
    fams.push_back(family_oracle_roundtrip(maxdeg));
    fams.push_back(family_hoffman_specialization(maxdeg));
    fams.push_back(family_rq_tr_identities(maxdeg));
  } else if (suite == "products") {
    fams.push_back(family_products_v1_v2(maxdeg));
    fams.push_back(family_products_v1_v3(maxdeg));
    fams.push_back(family_products_vs_m(maxdeg));
    fams.push_back(family_oracle_product_law(maxdeg));
    fams.push_back(family_products_commute(maxdeg));
    fams.push_back(family_stuffler_identity(maxdeg));
    fams.push_back(family_shuffle_support(maxdeg));
  } else if (suite == "coproduct") {
    fams.push_back(family_coproduct_eta_vs_m(maxdeg));
    fams.push_back(family_coassociativity(maxdeg));
    fams.push_back(family_counit_law(maxdeg));
    fams.push_back(family_tr_intertwines(maxdeg));
  } else if (suite == "antipode") {
    fams.push_back(family_antipode_s2(maxdeg));
    fams.push_back(family_antipode_s(maxdeg));
    fams.push_back(family_antipode_involutive(maxdeg));
    fams.push_back(family_hopf_axiom(maxdeg));
  } else if (suite == "dual") {
    fams.push_back(family_gram(maxdeg));
    fams.push_back(family_eta_star_multiplicative(maxdeg));
    fams.push_back(family_dual_coproduct_n(maxdeg));
    fams.push_back(family_dual_coproduct_alpha(maxdeg));
    fams.push_back(family_duality_adjoint(maxdeg));
  } else if (suite == "series") {
    fams.push_back(family_series_g_through_h(maxdeg));
    fams.push_back(family_series_g_powers(maxdeg));
  } else if (suite == "shuffle") {
    fams.push_back(family_sharp_unital(maxdeg));
    fams.push_back(family_sharp_commutative(maxdeg));
    fams.push_back(family_sharp_associative(maxdeg));
    fams.push_back(family_sharp_explicit(maxdeg));
    fams.push_back(family_eta_morphism_algebra(maxdeg));
    fams.push_back(family_eta_morphism_coalgebra(maxdeg));
    fams.push_back(family_sharp_antipode(maxdeg));
    fams.push_back(family_stufufuffler_counts(maxdeg));
  } else if (suite == "subalg") {
    fams.push_back(family_subalgebra(
        "subalg/even-entries", [](int e) { return e % 2 == 0; }, maxdeg,
        false));
    fams.push_back(family_subalgebra(
        "subalg/entries-at-least-2", [](int e) { return e >= 2; }, maxdeg,
        false));
    fams.push_back(family_subalgebra(
        "subalg/odd-entries-q1", [](int e) { return e % 2 == 1; }, maxdeg,
        true));
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  return fams;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "compositions", "bases",  "products", "coproduct", "antipode",
      "dual",         "series", "shuffle",  "subalg"};
  return names;
}

std::vector<Family> build_suite(const std::string& suite, int maxdeg) {
  if (suite == "all") {
    std::vector<Family> fams;
    for (const std::string& name : suite_names()) {
      std::vector<Family> part = build_one(name, maxdeg);
      for (Family& f : part) fams.push_back(std::move(f));
    }
    return fams;
  }
  return build_one(suite, maxdeg);
}

std::vector<FamilyResult> run_families(const std::vector<Family>& families,
                                       bool parallel) {
  struct Slot {
    int family;
    const Check* check;
  };
  std::vector<Slot> slots;
  for (size_t f = 0; f < families.size(); ++f) {
    for (const Check& check : families[f].checks) {
      slots.push_back({static_cast<int>(f), &check});
    }
  }
  std::vector<char> passed(slots.size(), 0);

  const auto run_one = [&](size_t i) {
    bool ok = false;
    try {
      ok = slots[i].check->run();
    } catch (...) {
      ok = false;
    }
    passed[i] = ok ? 1 : 0;
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(slots.size()); ++i) {
      run_one(static_cast<size_t>(i));
    }
#else
    for (size_t i = 0; i < slots.size(); ++i) run_one(i);
#endif
  } else {
    for (size_t i = 0; i < slots.size(); ++i) run_one(i);
  }

  std::vector<FamilyResult> results;
  results.reserve(families.size());
  for (const Family& f : families) {
    results.push_back({f.name, 0, 0, {}});
  }
  for (size_t i = 0; i < slots.size(); ++i) {
    FamilyResult& r = results[static_cast<size_t>(slots[i].family)];
    ++r.total;
    if (!passed[i]) {
      ++r.failed;
      if (static_cast<int>(r.failures.size()) < kMaxReportedFailures) {
        r.failures.push_back(slots[i].check->label);
      }
    }
  }
  return results;
}

}  // namespace qeta
