#include <doctest.h>

#include "qeta/io.hpp"
#include "qeta/products.hpp"

using namespace qeta;

TEST_CASE("shorthand parsing") {
  const ParsedElement e = parse_element("eta:1,3,1");
  const auto* q = std::get_if<QSymElement>(&e);
  REQUIRE(q != nullptr);
  CHECK(q->basis() == QBasis::Eta);
  CHECK(q->coeff({1, 3, 1}) == Scalar::one());

  const ParsedElement unit = parse_element("M:");
  const auto* m = std::get_if<QSymElement>(&unit);
  REQUIRE(m != nullptr);
  CHECK(m->basis() == QBasis::M);
  CHECK(m->coeff({}) == Scalar::one());

  CHECK(std::holds_alternative<NSymElement>(parse_element("H:2,1")));
  CHECK(std::holds_alternative<NSymElement>(parse_element("etastar:2")));
  CHECK(std::holds_alternative<FreeWordElement>(parse_element("x:1,2,1")));
  CHECK_THROWS_AS(parse_element("Z:1"), ParseError);
  CHECK_THROWS_AS(parse_element("1,2"), ParseError);
}

TEST_CASE("schema example parses to q*M_(2)") {
  const std::string text =
      R"({"algebra":"QSym","basis":"M","terms":[{"comp":[2],"coeff":{"num":[0,1],"den":[1]}}]})";
  const ParsedElement e = parse_element(text);
  const auto* q = std::get_if<QSymElement>(&e);
  REQUIRE(q != nullptr);
  CHECK(q->basis() == QBasis::M);
  CHECK(q->coeff({2}) == Scalar::q());
}

TEST_CASE("JSON round trips") {
  const QSymElement f = eta_product_v1({1, 2}, {3});
  CHECK(std::get<QSymElement>(parse_element(to_json(f).dump())) == f);

  const NSymElement h = eta_star({2, 1});
  CHECK(std::get<NSymElement>(parse_element(to_json(h).dump())) == h);

  FreeWordElement w;
  w.add({1, 2}, Scalar::q());
  w.add({}, Scalar::one() / Scalar::r());
  CHECK(std::get<FreeWordElement>(parse_element(to_json(w).dump())) == w);

  const QTensor t = coproduct_m(eta_basis({2, 1}));
  CHECK(std::get<QTensor>(parse_element(to_json(t).dump())) == t);

  const NTensor nt = coproduct_eta_star_n(3);
  CHECK(std::get<NTensor>(parse_element(to_json(nt).dump())) == nt);
}

TEST_CASE("scalar JSON") {
  const Scalar s = Scalar::q() / Scalar::r();
  const Scalar back = scalar_from_json(to_json(s));
  CHECK(back == s);
  CHECK_THROWS_AS(
      scalar_from_json(nlohmann::json{{"num", {1}}, {"den", {0}}}),
      ParseError);
}

TEST_CASE("series JSON") {
  const NSymSeries g = series_g(4);
  const NSymSeries back = series_from_json(to_json(g));
  CHECK(back == g);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-1") == Rational(-1));
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("formatting") {
  QSymElement f(QBasis::Eta);
  f.add({1}, -Scalar::one());
  CHECK(format_element(f) == "-1 * eta[1]\n");

  QSymElement zero(QBasis::M);
  CHECK(format_element(zero) == "0\n");

  NSymElement h(NBasis::H);
  h.add({2, 1}, Scalar::r());
  CHECK(format_element(h) == "q+1 * H[2,1]\n");
}
