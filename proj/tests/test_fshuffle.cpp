#include <doctest.h>

#include "qeta/fshuffle.hpp"
#include "qeta/products.hpp"

using namespace qeta;

namespace {

const Scalar kQ = Scalar::q();

FreeWordElement word(const Composition& w) {
  return FreeWordElement(w, Scalar::one());
}

SharpParams int_params(int a, int b) {
  return SharpParams{Scalar::integer(a), Scalar::integer(b)};
}

// Antipode from the Hopf axiom by recursion over proper prefixes;
// independent of the closed formula under test.
FreeWordElement axiom_antipode(const Composition& alpha,
                               const SharpParams& params) {
  if (alpha.empty()) return FreeWordElement::unit();
  FreeWordElement acc;
  for (int cut = 0; cut < alpha.length(); ++cut) {
    const Composition prefix(std::vector<int>(alpha.entries().begin(),
                                              alpha.entries().begin() + cut));
    const Composition suffix(std::vector<int>(alpha.entries().begin() + cut,
                                              alpha.entries().end()));
    acc = acc + sharp(axiom_antipode(prefix, params), word(suffix), params);
  }
  return acc * Scalar::integer(-1);
}

}  // namespace

TEST_CASE("zeta shifts the first letter") {
  FreeWordElement shifted;
  shifted.add({5, 1}, Scalar::one());
  CHECK(zeta(3, word({2, 1})) == shifted);
  CHECK(zeta(4, FreeWordElement::unit()).is_zero());
  FreeWordElement triple;
  triple.add({2, 1, 1}, Scalar::one());
  CHECK(zeta(1, word({1, 1, 1})) == triple);
}

TEST_CASE("sharp base cases") {
  const SharpParams p{Scalar::q(), Scalar::r()};
  CHECK(sharp(FreeWordElement::unit(), word({2, 1}), p) == word({2, 1}));
  CHECK(sharp(word({2, 1}), FreeWordElement::unit(), p) == word({2, 1}));
}

TEST_CASE("sharp single letters") {
  SharpParams p{Scalar::q(), Scalar::zero()};  // generic a, b = 0
  p.a = Scalar::q();
  FreeWordElement expected;
  expected.add({1, 1}, Scalar::integer(2));
  expected.add({2}, p.a);
  CHECK(sharp(word({1}), word({1}), p) == expected);

  FreeWordElement mixed;
  mixed.add({1, 2}, Scalar::one());
  mixed.add({2, 1}, Scalar::one());
  mixed.add({3}, p.a);
  CHECK(sharp(word({1}), word({2}), p) == mixed);
}

TEST_CASE("sharp against the stufufuffler expansion") {
  const std::vector<SharpParams> grid = {
      int_params(0, 0), int_params(1, 0),  int_params(2, 3),
      int_params(-1, 1), int_params(3, -1),
      SharpParams{kQ - Scalar::one(), -kQ}};
  for (const SharpParams& p : grid) {
    for (int total = 0; total <= 5; ++total) {
      for (int left = 0; left <= total; ++left) {
        for (const Composition& a : compositions_of(left)) {
          for (const Composition& b : compositions_of(total - left)) {
            CHECK(sharp(word(a), word(b), p) == sharp_explicit(a, b, p));
          }
        }
      }
    }
  }
}

TEST_CASE("sharp is commutative, associative, unital at sampled parameters") {
  const std::vector<SharpParams> grid = {int_params(0, 0), int_params(1, 1),
                                         int_params(2, -1), int_params(3, 2),
                                         SharpParams{kQ - Scalar::one(), -kQ}};
  const std::vector<Composition> words = {
      {}, {1}, {2}, {1, 1}, {2, 1}, {1, 2}};
  for (const SharpParams& p : grid) {
    for (const Composition& a : words) {
      CHECK(sharp(word(a), FreeWordElement::unit(), p) == word(a));
      for (const Composition& b : words) {
        CHECK(sharp(word(a), word(b), p) == sharp(word(b), word(a), p));
        for (const Composition& c : words) {
          if (a.degree() + b.degree() + c.degree() > 5) continue;
          CHECK(sharp(sharp(word(a), word(b), p), word(c), p) ==
                sharp(word(a), sharp(word(b), word(c), p), p));
        }
      }
    }
  }
}

TEST_CASE("deconcatenation and counit") {
  FreeTensor expected;
  expected.add({}, {2, 1}, Scalar::one());
  expected.add({2}, {1}, Scalar::one());
  expected.add({2, 1}, {}, Scalar::one());
  CHECK(deconcat(word({2, 1})) == expected);

  FreeTensor unit;
  unit.add({}, {}, Scalar::one());
  CHECK(deconcat(FreeWordElement::unit()) == unit);

  CHECK(counit(word({3})) == Scalar::zero());
  CHECK(counit(FreeWordElement::unit()) == Scalar::one());
}

TEST_CASE("antipode closed formula") {
  const SharpParams p = int_params(2, -1);
  FreeWordElement s1;
  s1.add({1}, Scalar::integer(-1));
  CHECK(antipode_f({1}, p) == s1);

  CHECK(antipode_f({}, p) == FreeWordElement::unit());

  FreeWordElement s11;
  s11.add({1, 1}, Scalar::one());
  s11.add({2}, p.a);
  CHECK(antipode_f({1, 1}, p) == s11);
}

TEST_CASE("antipode matches the Hopf-axiom recursion up to size 4") {
  const std::vector<SharpParams> grid = {int_params(0, 0), int_params(1, 2),
                                         int_params(-1, 3),
                                         SharpParams{kQ - Scalar::one(), -kQ}};
  for (const SharpParams& p : grid) {
    for (int n = 0; n <= 4; ++n) {
      for (const Composition& alpha : compositions_of(n)) {
        CHECK(antipode_f(alpha, p) == axiom_antipode(alpha, p));
      }
    }
  }
}

TEST_CASE("eta morphism on basis words") {
  const Rational u(1);
  const SharpParams p = sharp_params_for(u);
  CHECK(eta_morphism(word({1}), u, p) == eta_basis({1}));
  CHECK(eta_morphism(word({}), u, p) == m_basis({}));

  // eta(x_1 # x_1) = eta(x_1)^2.
  const QSymElement lhs = eta_morphism(sharp(word({1}), word({1}), p), u, p);
  CHECK(lhs == m_product(eta_basis({1}), eta_basis({1})));

  CHECK_THROWS_AS(eta_morphism(word({1}), u, int_params(1, 1)), UsageError);
}

TEST_CASE("eta morphism is an algebra morphism for several u") {
  for (const Rational& u : {Rational(1), Rational(-1), Rational(2)}) {
    const SharpParams p = sharp_params_for(u);
    for (int total = 0; total <= 5; ++total) {
      for (int left = 0; left <= total; ++left) {
        for (const Composition& a : compositions_of(left)) {
          for (const Composition& b : compositions_of(total - left)) {
            const QSymElement lhs =
                eta_morphism(sharp(word(a), word(b), p), u, p);
            const QSymElement rhs = m_product(eta_morphism(word(a), u, p),
                                              eta_morphism(word(b), u, p));
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("eta morphism is a coalgebra morphism") {
  for (const Rational& u : {Rational(1), Rational(2)}) {
    const SharpParams p = sharp_params_for(u);
    for (int n = 0; n <= 4; ++n) {
      for (const Composition& alpha : compositions_of(n)) {
        QTensor lhs(QBasis::M, QBasis::M);
        const FreeTensor cut = deconcat(word(alpha));
        for (const auto& [key, c] : cut.terms()) {
          const QSymElement left =
              eta_morphism(word(key.first), u, p);
          const QSymElement right =
              eta_morphism(word(key.second), u, p);
          for (const auto& [lc, lv] : left.terms()) {
            for (const auto& [rc, rv] : right.terms()) {
              lhs.add(lc, rc, c * lv * rv);
            }
          }
        }
        CHECK(lhs == coproduct_m(eta_morphism(word(alpha), u, p)));
      }
    }
  }
}
