#ifndef QETA_QSYM_HPP
#define QETA_QSYM_HPP

#include <functional>
#include <vector>

#include "qeta/elements.hpp"

namespace qeta {

/// The single M-basis term M_alpha.
QSymElement m_basis(const Composition& alpha);

/// The fundamental function L_alpha expanded in the M basis:
/// the sum of M_beta over the refinements of alpha.
QSymElement l_basis(const Composition& alpha);

/// The enriched q-monomial function expanded in the M basis:
/// sum of r^length(beta) M_beta over the coarsenings of alpha.
QSymElement eta_basis(const Composition& alpha);

/// Quasi-shuffle (overlapping shuffle) product of two M-basis elements.
QSymElement m_product(const QSymElement& f, const QSymElement& g);

/// Converts any declared basis to the M basis.
QSymElement to_m(const QSymElement& f);

/// M -> Eta, degree by degree via the alternating expansion of
/// r^length(beta) M_beta in the eta functions.
QSymElement to_eta(const QSymElement& f);

/// Eta -> M, expanding each eta function by its definition.
QSymElement from_eta(const QSymElement& g);

/// Converts f to the requested basis (through M where needed).
QSymElement to_basis(const QSymElement& f, QBasis target);

/// Expansion of eta_alpha in the fundamental basis (|alpha| >= 1).
QSymElement eta_to_l(const Composition& alpha);

/// Expansion of r^n L_gamma in the Eta basis (n = |gamma| >= 1).
QSymElement l_to_eta(const Composition& gamma);

/// Deconcatenation coproduct on the M basis.
QTensor coproduct_m(const QSymElement& f);

/// Deconcatenation coproduct of eta_alpha, in the Eta (x) Eta basis.
QTensor coproduct_eta(const Composition& alpha);

/// Antipode on the M basis.
QSymElement antipode_m(const QSymElement& f);

/// Antipode of eta_alpha as an Eta-basis combination with (q-1)-power
/// coefficients; valid for arbitrary q.
QSymElement antipode_eta_s2(const Composition& alpha);

/// Antipode of eta_alpha via the reciprocal-parameter formula
/// (-q)^length(alpha) eta_{rev alpha} at q -> 1/q, expanded in M.
/// Requires q invertible (symbolic q is fine).
QSymElement antipode_eta_s(const Composition& alpha);

/// M_alpha -> r^length(alpha) M_alpha, linearly.
QSymElement t_r(const QSymElement& f);

/// M_alpha -> r^length(complement) M_complement, linearly.
QSymElement r_q(const QSymElement& f);

/// Counit: the coefficient of the empty composition after conversion to M.
Scalar counit_q(const QSymElement& f);

/// True iff the Eta-basis support of f consists of compositions whose
/// entries all satisfy the predicate.  f must have degree <= maxdeg.
bool eta_support_in(const QSymElement& f,
                    const std::function<bool(int)>& allowed, int maxdeg);
bool eta_support_in(const QSymElement& f,
                    const std::function<bool(int)>& allowed);

/// Evaluates every coefficient at q = q0 (exact); drops vanished terms.
/// Throws PoleError if any coefficient has a pole there.
QSymElement specialize(const QSymElement& f, const Rational& q0);
NSymElement specialize(const NSymElement& f, const Rational& q0);

/// Converts both tensor legs to the M basis.
QTensor tensor_to_m(const QTensor& t);

/// All refinements of alpha: the beta with D(beta) containing D(alpha).
std::vector<Composition> refinements(const Composition& alpha);

}  // namespace qeta

#endif
