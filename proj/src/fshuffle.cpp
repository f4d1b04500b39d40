#include "qeta/fshuffle.hpp"

#include "qeta/products.hpp"

namespace qeta {

namespace {

Composition word_tail(const Composition& word) {
  return Composition(
      std::vector<int>(word.entries().begin() + 1, word.entries().end()));
}

Composition word_prepend(int letter, const Composition& word) {
  std::vector<int> entries;
  entries.reserve(word.entries().size() + 1);
  entries.push_back(letter);
  entries.insert(entries.end(), word.entries().begin(), word.entries().end());
  return Composition(std::move(entries));
}

FreeWordElement prepend(int letter, const FreeWordElement& f) {
  FreeWordElement result;
  for (const auto& [word, c] : f.terms()) {
    result.add(word_prepend(letter, word), c);
  }
  return result;
}

FreeWordElement sharp_words(const Composition& u, const Composition& v,
                            const SharpParams& params) {
  if (u.empty()) return FreeWordElement(v, Scalar::one());
  if (v.empty()) return FreeWordElement(u, Scalar::one());
  const int i = u[0];
  const int j = v[0];
  const Composition ut = word_tail(u);
  const Composition vt = word_tail(v);
  const FreeWordElement tails = sharp_words(ut, vt, params);
  FreeWordElement result = prepend(i, sharp_words(ut, v, params));
  result = result + prepend(j, sharp_words(u, vt, params));
  result = result + prepend(i + j, tails) * params.a;
  result = result + zeta(i + j, tails) * params.b;
  return result;
}

}  // namespace

SharpParams sharp_params_for(const Rational& u) {
  const Scalar su = Scalar::from_rational(u);
  return SharpParams{(Scalar::q() - Scalar::one()) * su,
                     -Scalar::q() * su * su};
}

FreeWordElement zeta(int k, const FreeWordElement& f) {
  FreeWordElement result;
  for (const auto& [word, c] : f.terms()) {
    if (word.empty()) continue;  // zeta_k(1) = 0
    std::vector<int> entries = word.entries();
    entries[0] += k;
    result.add(Composition(std::move(entries)), c);
  }
  return result;
}

FreeWordElement sharp(const FreeWordElement& f, const FreeWordElement& g,
                      const SharpParams& params) {
  FreeWordElement result;
  for (const auto& [u, cu] : f.terms()) {
    for (const auto& [v, cv] : g.terms()) {
      const FreeWordElement prod = sharp_words(u, v, params);
      const Scalar c = cu * cv;
      for (const auto& [word, coeff] : prod.terms()) {
        result.add(word, c * coeff);
      }
    }
  }
  return result;
}

FreeWordElement sharp_explicit(const Composition& delta,
                               const Composition& epsilon,
                               const SharpParams& params) {
  FreeWordElement result;
  for (const Stufufuffler& f :
       enumerate_stufufufflers(delta.length(), epsilon.length())) {
    const StufuffleStats st = stats(f, delta, epsilon);
    result.add(st.wt, params.b.power(st.loss) * params.a.power(st.poise));
  }
  return result;
}

FreeTensor deconcat(const FreeWordElement& f) {
  FreeTensor result;
  for (const auto& [word, c] : f.terms()) {
    for (int cut = 0; cut <= word.length(); ++cut) {
      result.add(Composition(std::vector<int>(word.entries().begin(),
                                              word.entries().begin() + cut)),
                 Composition(std::vector<int>(word.entries().begin() + cut,
                                              word.entries().end())),
                 c);
    }
  }
  return result;
}

Scalar counit(const FreeWordElement& f) { return f.coeff(Composition()); }

FreeWordElement antipode_f(const Composition& alpha,
                           const SharpParams& params) {
  FreeWordElement result;
  const Scalar sign = Scalar::integer(alpha.length() % 2 == 0 ? 1 : -1);
  for (const Composition& beta : coarsenings(reverse(alpha))) {
    result.add(beta, sign * params.a.power(alpha.length() - beta.length()));
  }
  return result;
}

QSymElement eta_morphism(const FreeWordElement& f, const Rational& u,
                         const SharpParams& params) {
  const SharpParams expected = sharp_params_for(u);
  if (params.a != expected.a || params.b != expected.b) {
    throw UsageError(
        "eta_morphism needs parameters a = (q-1)u and b = -q u^2");
  }
  const Scalar su = Scalar::from_rational(u);
  QSymElement result(QBasis::M);
  for (const auto& [alpha, c] : f.terms()) {
    const Scalar scaled = c * su.power(alpha.length());
    const QSymElement expanded = eta_basis(alpha);
    for (const auto& [beta, d] : expanded.terms()) {
      result.add(beta, scaled * d);
    }
  }
  return result;
}

}  // namespace qeta
