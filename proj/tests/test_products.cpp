#include <doctest.h>

#include "qeta/products.hpp"
#include "qeta/qsym.hpp"

using namespace qeta;

namespace {

const Scalar kQ = Scalar::q();
const Scalar kQm1 = Scalar::q() - Scalar::one();

QSymElement eta_term(const Composition& alpha) {
  return QSymElement(QBasis::Eta, alpha, Scalar::one());
}

}  // namespace

TEST_CASE("stufufuffler counts match the worked examples") {
  CHECK(enumerate_stufufufflers(2, 2).size() == 18);
  CHECK(enumerate_stufufufflers(1, 0).size() == 1);
  CHECK(enumerate_stufufufflers(2, 1).size() == 6);
  CHECK(enumerate_stufufufflers(0, 0).size() == 1);
}

TEST_CASE("statistics of the worked stufufufflers") {
  const Composition delta({1, 2});
  const Composition epsilon({3, 4, 5});

  Stufufuffler f1{3, {1, 1}, {1, 2, 3}};
  const StufuffleStats s1 = stats(f1, delta, epsilon);
  CHECK(s1.wt == Composition({6, 4, 5}));
  CHECK(s1.loss == 1);
  CHECK(s1.poise == 0);

  Stufufuffler f2{2, {1, 2}, {1, 1, 2}};
  const StufuffleStats s2 = stats(f2, delta, epsilon);
  CHECK(s2.wt == Composition({8, 7}));
  CHECK(s2.loss == 1);
  CHECK(s2.poise == 1);

  Stufufuffler id5{5, {1, 2}, {3, 4, 5}};
  const StufuffleStats s3 = stats(id5, delta, epsilon);
  CHECK(s3.wt == Composition({1, 2, 3, 4, 5}));
  CHECK(s3.loss == 0);
  CHECK(s3.poise == 0);

  CHECK_THROWS_AS(stats(f1, delta, Composition({3})), UsageError);
}

TEST_CASE("loss-poise-length identity for every stufufuffler") {
  for (int l = 0; l <= 4; ++l) {
    for (int m = 0; m <= 4 - l; ++m) {
      std::vector<int> dentries(static_cast<size_t>(l), 1);
      std::vector<int> eentries(static_cast<size_t>(m), 2);
      const Composition delta(dentries);
      const Composition epsilon(eentries);
      for (const Stufufuffler& f : enumerate_stufufufflers(l, m)) {
        const StufuffleStats st = stats(f, delta, epsilon);
        CHECK(2 * st.loss + st.poise + st.wt.length() == l + m);
      }
    }
  }
}

TEST_CASE("product rule v1 on the worked example (1,2)x(3)") {
  QSymElement expected(QBasis::Eta);
  expected.add({6}, -kQ);
  expected.add({1, 5}, kQm1);
  expected.add({4, 2}, kQm1);
  expected.add({3, 1, 2}, Scalar::one());
  expected.add({1, 3, 2}, Scalar::one());
  expected.add({1, 2, 3}, Scalar::one());
  CHECK(eta_product_v1({1, 2}, {3}) == expected);
}

TEST_CASE("unit and the two-letter identity") {
  CHECK(eta_product_v1({}, {1, 2}) == eta_term({1, 2}));
  CHECK(eta_product_v2({1}, {}) == eta_term({1}));

  QSymElement two(QBasis::Eta);
  two.add({3}, kQm1);
  two.add({1, 2}, Scalar::one());
  two.add({2, 1}, Scalar::one());
  CHECK(eta_product_v1({1}, {2}) == two);
}

TEST_CASE("product rule v3 on the worked example (1)x(2,3)") {
  QSymElement expected(QBasis::Eta);
  expected.add({2, 3, 1}, Scalar::one());
  expected.add({6}, -kQ);
  expected.add({2, 4}, kQm1);
  expected.add({2, 1, 3}, Scalar::one());
  expected.add({3, 3}, kQm1);
  expected.add({1, 2, 3}, Scalar::one());
  CHECK(eta_product_v3({1}, {2, 3}) == expected);
  CHECK(eta_product_v3({}, {}) == eta_term({}));
}

TEST_CASE("the eighteen-term square example (1,2)x(3,4)") {
  const Scalar one = Scalar::one();
  QSymElement expected(QBasis::Eta);
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
  CHECK(eta_product_v2({1, 2}, {3, 4}) == expected);
}

TEST_CASE("three-way agreement and oracle route up to total degree 6") {
  for (int total = 0; total <= 6; ++total) {
    for (int left = 0; left <= total; ++left) {
      for (const Composition& a : compositions_of(left)) {
        for (const Composition& b : compositions_of(total - left)) {
          const QSymElement v1 = eta_product_v1(a, b);
          CHECK(v1 == eta_product_v2(a, b));
          CHECK(v1 == eta_product_v3(a, b));
          CHECK(v1 == eta_product_v1(b, a));
          CHECK(from_eta(v1) == m_product(eta_basis(a), eta_basis(b)));
        }
      }
    }
  }
}

TEST_CASE("bilinear extension") {
  QSymElement f(QBasis::Eta);
  f.add({1}, kQ);
  f.add({2}, Scalar::one());
  const QSymElement direct = eta_product(f, eta_term({1}));
  QSymElement expected(QBasis::Eta);
  const QSymElement p11 = eta_product_v1({1}, {1});
  for (const auto& [comp, c] : p11.terms()) {
    expected.add(comp, kQ * c);
  }
  const QSymElement p21 = eta_product_v1({2}, {1});
  for (const auto& [comp, c] : p21.terms()) {
    expected.add(comp, c);
  }
  CHECK(direct == expected);
  CHECK_THROWS_AS(eta_product(m_basis({1}), eta_term({1})), UsageError);
}

TEST_CASE("stufufuffler text form") {
  Stufufuffler f{3, {1, 1}, {1, 2, 3}};
  CHECK(f.to_string() == "P:1,1|Q:1,2,3");
}
