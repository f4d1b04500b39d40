// Acceptance suite: one line per criterion, exact equality throughout.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "qeta/fshuffle.hpp"
#include "qeta/io.hpp"
#include "qeta/nsym.hpp"
#include "qeta/oracle.hpp"
#include "qeta/products.hpp"
#include "qeta/verify.hpp"

namespace {

using namespace qeta;

const Scalar kQ = Scalar::q();
const Scalar kR = Scalar::r();
const Scalar kQm1 = Scalar::q() - Scalar::one();

struct Criterion {
  int number;
  std::string name;
  int total = 0;
  int failed = 0;
};

void run_selected(Criterion& crit, const std::string& suite, int maxdeg,
                  const std::vector<std::string>& family_names) {
  std::vector<Family> selected;
  for (Family& fam : build_suite(suite, maxdeg)) {
    if (family_names.empty() ||
        std::find(family_names.begin(), family_names.end(), fam.name) !=
            family_names.end()) {
      selected.push_back(std::move(fam));
    }
  }
  for (const FamilyResult& r : run_families(selected, true)) {
    crit.total += r.total;
    crit.failed += r.failed;
  }
}

void check(Criterion& crit, bool ok) {
  ++crit.total;
  if (!ok) ++crit.failed;
}

// --- criterion 1: worked examples, frozen from the source ---------------

void criterion_worked_examples(Criterion& crit) {
  // eta_(1,3,1) = r M_5 + r^2 M_(1,4) + r^2 M_(4,1) + r^3 M_(1,3,1).
  {
    QSymElement expected(QBasis::M);
    expected.add({5}, kR);
    expected.add({1, 4}, kR.power(2));
    expected.add({4, 1}, kR.power(2));
    expected.add({1, 3, 1}, kR.power(3));
    check(crit, eta_basis({1, 3, 1}) == expected);
  }
  // eta*_(2) = (1/r) H_2 - (1/r^2) H_(1,1).
  {
    NSymElement expected(NBasis::H);
    expected.add({2}, Scalar::one() / kR);
    expected.add({1, 1}, -kR.power(-2));
    check(crit, eta_star({2}) == expected);
  }
  // Delta(eta*_2) = 1 (x) eta*_2 + (q-1) eta*_1 (x) eta*_1 + eta*_2 (x) 1.
  {
    NTensor expected(NBasis::EtaStar, NBasis::EtaStar);
    expected.add({}, {2}, Scalar::one());
    expected.add({1}, {1}, kQm1);
    expected.add({2}, {}, Scalar::one());
    check(crit, coproduct_eta_star_n(2) == expected);
  }
  // eta_(1,2) eta_(3): six terms.
  {
    QSymElement expected(QBasis::Eta);
    expected.add({6}, -kQ);
    expected.add({1, 5}, kQm1);
    expected.add({4, 2}, kQm1);
    expected.add({3, 1, 2}, Scalar::one());
    expected.add({1, 3, 2}, Scalar::one());
    expected.add({1, 2, 3}, Scalar::one());
    check(crit, eta_product_v1({1, 2}, {3}) == expected);
  }
  // eta_(1,2) eta_(3,4): eighteen terms via stufufufflers.
  {
    QSymElement expected(QBasis::Eta);
    const Scalar one = Scalar::one();
    expected.add({1, 2, 3, 4}, one);
    expected.add({1, 3, 2, 4}, one);
    expected.add({1, 3, 4, 2}, one);
    expected.add({3, 1, 2, 4}, one);
    expected.add({3, 1, 4, 2}, one);
    expected.add({3, 4, 1, 2}, one);
    expected.add({1, 9}, -kQ);
    expected.add({3, 7}, -kQ);
    expected.add({6, 4}, -kQ);
    expected.add({8, 2}, -kQ);
    expected.add({4, 6}, kQm1 * kQm1);
    expected.add({10}, -kQ * kQm1);
    expected.add({4, 2, 4}, kQm1);
    expected.add({4, 4, 2}, kQm1);
    expected.add({1, 3, 6}, kQm1);
    expected.add({3, 1, 6}, kQm1);
    expected.add({1, 5, 4}, kQm1);
    expected.add({3, 5, 2}, kQm1);
    check(crit, eta_product_v2({1, 2}, {3, 4}) == expected);
  }
  // eta_(1) eta_(2,3) via the (T, I, J) rule.
  {
    QSymElement expected(QBasis::Eta);
    expected.add({2, 3, 1}, Scalar::one());
    expected.add({6}, -kQ);
    expected.add({2, 4}, kQm1);
    expected.add({2, 1, 3}, Scalar::one());
    expected.add({3, 3}, kQm1);
    expected.add({1, 2, 3}, Scalar::one());
    check(crit, eta_product_v3({1}, {2, 3}) == expected);
  }
  // eta_(1) eta_(2) = (q-1) eta_3 + eta_(1,2) + eta_(2,1).
  {
    QSymElement expected(QBasis::Eta);
    expected.add({3}, kQm1);
    expected.add({1, 2}, Scalar::one());
    expected.add({2, 1}, Scalar::one());
    check(crit, eta_product_v1({1}, {2}) == expected);
  }
}

void criterion_appendix(Criterion& crit) {
  run_selected(crit, "bases", 6, {"bases/rq-tr-identities"});
}

void criterion_specialization_subalg(Criterion& crit) {
  run_selected(crit, "bases", 6, {"bases/q0-specialization"});
  run_selected(crit, "subalg", 6, {});
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  {
    Criterion c{1, "worked-example fidelity"};
    criterion_worked_examples(c);
    criteria.push_back(c);
  }
  {
    Criterion c{2, "basis theorem"};
    run_selected(c, "bases", 6,
                 {"bases/eta-triangular", "bases/eta-roundtrip",
                  "bases/eta-vs-fundamental"});
    criteria.push_back(c);
  }
  {
    Criterion c{3, "product-rule triangle"};
    run_selected(c, "products", 6, {});
    criteria.push_back(c);
  }
  {
    Criterion c{4, "coproduct"};
    run_selected(c, "coproduct", 6, {});
    criteria.push_back(c);
  }
  {
    Criterion c{5, "antipodes"};
    run_selected(c, "antipode", 6, {});
    criteria.push_back(c);
  }
  {
    Criterion c{6, "duality"};
    run_selected(c, "dual", 6, {});
    criteria.push_back(c);
  }
  {
    Criterion c{7, "generating series"};
    run_selected(c, "series", 6, {});
    criteria.push_back(c);
  }
  {
    Criterion c{8, "stufufuffle algebra"};
    run_selected(c, "shuffle", 6, {});
    criteria.push_back(c);
  }
  {
    Criterion c{9, "appendix identities"};
    criterion_appendix(c);
    criteria.push_back(c);
  }
  {
    Criterion c{10, "specialization and subalgebra closure"};
    criterion_specialization_subalg(c);
    criteria.push_back(c);
  }
  {
    Criterion c{11, "companion-note combinatorics"};
    run_selected(c, "compositions", 8, {});
    criteria.push_back(c);
  }

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    const bool pass = c.failed == 0;
    all_pass = all_pass && pass;
    std::printf("criterion %2d %-40s %s (%d checks%s)\n", c.number,
                c.name.c_str(), pass ? "PASS" : "FAIL", c.total,
                pass ? "" : (", " + std::to_string(c.failed) + " failed")
                               .c_str());
  }
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
