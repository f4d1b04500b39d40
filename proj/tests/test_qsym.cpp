#include <doctest.h>

#include "qeta/qsym.hpp"

using namespace qeta;

namespace {

const Scalar kQ = Scalar::q();
const Scalar kR = Scalar::r();

QSymElement eta_term(const Composition& alpha) {
  return QSymElement(QBasis::Eta, alpha, Scalar::one());
}

}  // namespace

TEST_CASE("eta_basis worked example") {
  QSymElement expected(QBasis::M);
  expected.add({5}, kR);
  expected.add({1, 4}, kR.power(2));
  expected.add({4, 1}, kR.power(2));
  expected.add({1, 3, 1}, kR.power(3));
  CHECK(eta_basis({1, 3, 1}) == expected);

  CHECK(eta_basis({}) == m_basis({}));
  CHECK(l_basis({1, 1}) == m_basis({1, 1}));
}

TEST_CASE("m_product small cases agree with hand expansion") {
  QSymElement sq(QBasis::M);
  sq.add({1, 1}, Scalar::integer(2));
  sq.add({2}, Scalar::one());
  CHECK(m_product(m_basis({1}), m_basis({1})) == sq);

  CHECK(m_product(m_basis({}), eta_basis({1, 2})) == eta_basis({1, 2}));

  QSymElement mixed(QBasis::M);
  mixed.add({2, 1}, Scalar::one());
  mixed.add({1, 2}, Scalar::one());
  mixed.add({3}, Scalar::one());
  CHECK(m_product(m_basis({2}), m_basis({1})) == mixed);

  CHECK_THROWS_AS(m_product(eta_term({1}), m_basis({1})), UsageError);
}

TEST_CASE("to_eta and from_eta") {
  QSymElement m2(QBasis::Eta);
  m2.add({2}, Scalar::one() / kR);
  CHECK(to_eta(m_basis({2})) == m2);

  QSymElement m11(QBasis::Eta);
  m11.add({1, 1}, kR.power(-2));
  m11.add({2}, -kR.power(-2));
  CHECK(to_eta(m_basis({1, 1})) == m11);

  CHECK(from_eta(to_eta(m_basis({1, 3, 1}))) == m_basis({1, 3, 1}));
  for (int n = 0; n <= 6; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      CHECK(from_eta(to_eta(m_basis(alpha))) == m_basis(alpha));
      CHECK(to_eta(from_eta(eta_term(alpha))) == eta_term(alpha));
    }
  }
}

TEST_CASE("fundamental-basis conversions") {
  QSymElement r_l1(QBasis::L);
  r_l1.add({1}, kR);
  CHECK(eta_to_l({1}) == r_l1);

  QSymElement expansion(QBasis::Eta);
  expansion.add({2}, kQ);
  expansion.add({1, 1}, Scalar::one());
  CHECK(l_to_eta({2}) == expansion);

  CHECK(to_m(eta_to_l({2})) == eta_basis({2}));
  CHECK(specialize(to_m(eta_to_l({2})), Rational(1)) ==
        specialize(eta_basis({2}), Rational(1)));

  CHECK_THROWS_AS(eta_to_l({}), DomainError);
  CHECK_THROWS_AS(l_to_eta({}), DomainError);

  // L -> M -> L is the identity.
  for (int n = 0; n <= 5; ++n) {
    for (const Composition& gamma : compositions_of(n)) {
      const QSymElement l_elem(QBasis::L, gamma, Scalar::one());
      CHECK(to_basis(to_m(l_elem), QBasis::L) == l_elem);
    }
  }
}

TEST_CASE("coproducts") {
  QTensor expected(QBasis::M, QBasis::M);
  expected.add({}, {2, 1}, Scalar::one());
  expected.add({2}, {1}, Scalar::one());
  expected.add({2, 1}, {}, Scalar::one());
  CHECK(coproduct_m(m_basis({2, 1})) == expected);

  QTensor unit(QBasis::M, QBasis::M);
  unit.add({}, {}, Scalar::one());
  CHECK(coproduct_m(m_basis({})) == unit);

  QTensor eta1(QBasis::Eta, QBasis::Eta);
  eta1.add({}, {1}, Scalar::one());
  eta1.add({1}, {}, Scalar::one());
  CHECK(coproduct_eta({1}) == eta1);

  QTensor eta12(QBasis::Eta, QBasis::Eta);
  eta12.add({}, {1, 2}, Scalar::one());
  eta12.add({1}, {2}, Scalar::one());
  eta12.add({1, 2}, {}, Scalar::one());
  CHECK(coproduct_eta({1, 2}) == eta12);

  CHECK(tensor_to_m(coproduct_eta({2, 1})) == coproduct_m(eta_basis({2, 1})));

  // Counit side-check: applying the counit to the left leg recovers f.
  QSymElement recovered(QBasis::M);
  const QTensor delta21 = coproduct_m(m_basis({2, 1}));
  for (const auto& [key, c] : delta21.terms()) {
    if (key.first.empty()) recovered.add(key.second, c);
  }
  CHECK(recovered == m_basis({2, 1}));
}

TEST_CASE("antipode on the M basis") {
  QSymElement minus_m1(QBasis::M);
  minus_m1.add({1}, Scalar::integer(-1));
  CHECK(antipode_m(m_basis({1})) == minus_m1);

  CHECK(antipode_m(m_basis({})) == m_basis({}));

  // Independent route: the Hopf-axiom recursion determines S degreewise;
  // S(M_2) = -M_2 and S(M_11) = M_2 + M_11 follow from it.
  QSymElement s2(QBasis::M);
  s2.add({2}, Scalar::integer(-1));
  CHECK(antipode_m(m_basis({2})) == s2);
  QSymElement s11(QBasis::M);
  s11.add({2}, Scalar::one());
  s11.add({1, 1}, Scalar::one());
  CHECK(antipode_m(m_basis({1, 1})) == s11);

  // The axiom itself, spot-checked.
  for (int n = 0; n <= 5; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      QSymElement acc(QBasis::M);
      const QTensor delta = coproduct_m(m_basis(alpha));
      for (const auto& [key, c] : delta.terms()) {
        const QSymElement prod =
            m_product(antipode_m(m_basis(key.first)), m_basis(key.second));
        for (const auto& [comp, d] : prod.terms()) acc.add(comp, c * d);
      }
      QSymElement expected(QBasis::M);
      if (alpha.empty()) expected.add({}, Scalar::one());
      CHECK(acc == expected);
    }
  }
}

TEST_CASE("eta antipode formulas") {
  QSymElement s2_1(QBasis::Eta);
  s2_1.add({1}, Scalar::integer(-1));
  CHECK(antipode_eta_s2({1}) == s2_1);

  QSymElement s2_2(QBasis::Eta);
  s2_2.add({2}, Scalar::integer(-1));
  CHECK(antipode_eta_s2({2}) == s2_2);

  QSymElement s2_11(QBasis::Eta);
  s2_11.add({1, 1}, Scalar::one());
  s2_11.add({2}, kQ - Scalar::one());
  CHECK(antipode_eta_s2({1, 1}) == s2_11);

  QSymElement s_1(QBasis::M);
  s_1.add({1}, -kR);
  CHECK(antipode_eta_s({1}) == s_1);
  CHECK(antipode_eta_s({}) == m_basis({}));

  for (int n = 0; n <= 6; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      const QSymElement reference = antipode_m(eta_basis(alpha));
      CHECK(from_eta(antipode_eta_s2(alpha)) == reference);
      CHECK(antipode_eta_s(alpha) == reference);
    }
  }
}

TEST_CASE("t_r and r_q") {
  QSymElement scaled(QBasis::M);
  scaled.add({1, 3, 1}, kR.power(3));
  CHECK(t_r(m_basis({1, 3, 1})) == scaled);
  CHECK(t_r(m_basis({})) == m_basis({}));

  QSymElement rq2(QBasis::M);
  rq2.add({1, 1}, kR.power(2));
  CHECK(r_q(m_basis({2})) == rq2);
  CHECK(r_q(r_q(m_basis({2}))) == m_basis({2}) * kR.power(3));
  CHECK(r_q(l_basis(complement({2}))) == eta_basis({2}));

  // The slick antipode expression for eta.
  for (int n = 0; n <= 5; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      const Scalar sign =
          Scalar::integer(alpha.length() % 2 == 0 ? 1 : -1);
      CHECK(t_r(antipode_m(m_basis(reverse(alpha)))) * sign ==
            eta_basis(alpha));
    }
  }
}

TEST_CASE("support inspection and specialization") {
  // eta_1 * eta_1 = (q-1) eta_2 + 2 eta_11.
  QSymElement prod(QBasis::Eta);
  prod.add({2}, kQ - Scalar::one());
  prod.add({1, 1}, Scalar::integer(2));
  const auto only_ones = [](int e) { return e == 1; };
  CHECK_FALSE(eta_support_in(prod, only_ones));
  CHECK(eta_support_in(specialize(prod, Rational(1)), only_ones));
  CHECK(eta_support_in(prod, [](int e) { return e <= 2; }, 2));
  CHECK_THROWS_AS(eta_support_in(prod, only_ones, 1), DomainError);

  CHECK_THROWS_AS(specialize(to_eta(m_basis({2})), Rational(-1)), PoleError);
}
