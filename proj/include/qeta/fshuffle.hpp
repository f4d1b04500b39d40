#ifndef QETA_FSHUFFLE_HPP
#define QETA_FSHUFFLE_HPP

#include "qeta/qsym.hpp"

namespace qeta {

/// The deformation parameters of the # product.
struct SharpParams {
  Scalar a;
  Scalar b;
};

/// The parameter pair a = (q-1)u, b = -q u^2 realized inside the Scalar
/// field for a rational constant u.
SharpParams sharp_params_for(const Rational& u);

/// zeta_k: sends 1 to 0 and adds k to the subscript of the first letter
/// of every word; linear.
FreeWordElement zeta(int k, const FreeWordElement& f);

/// The stufufuffle product # with parameters (a, b), by its recursion
/// (x_i u)#(x_j v) = x_i(u#(x_j v)) + x_j((x_i u)#v) + a x_{i+j}(u#v)
///                 + b zeta_{i+j}(u#v).
FreeWordElement sharp(const FreeWordElement& f, const FreeWordElement& g,
                      const SharpParams& params);

/// The same product of two basis words as a sum over stufufufflers with
/// b^loss a^poise weights.
FreeWordElement sharp_explicit(const Composition& delta,
                               const Composition& epsilon,
                               const SharpParams& params);

/// Deconcatenation coproduct.
FreeTensor deconcat(const FreeWordElement& f);

/// Counit: the coefficient of the empty word.
Scalar counit(const FreeWordElement& f);

/// Antipode of the Hopf algebra (F, #) on a basis word:
/// (-1)^l(alpha) sum over coarsenings beta of rev alpha of
/// a^(l(alpha)-l(beta)) x_beta.
FreeWordElement antipode_f(const Composition& alpha,
                           const SharpParams& params);

/// The algebra morphism x_alpha -> u^l(alpha) eta_alpha, expanded in the
/// M basis.  Throws UsageError unless params equal sharp_params_for(u).
QSymElement eta_morphism(const FreeWordElement& f, const Rational& u,
                         const SharpParams& params);

}  // namespace qeta

#endif
