#ifndef QETA_PRODUCTS_HPP
#define QETA_PRODUCTS_HPP

#include <string>
#include <vector>

#include "qeta/elements.hpp"

namespace qeta {

/// A block interleaving of two chains P (length l) and Q (length m):
/// a pair of weakly increasing maps fP: [l] -> [k], fQ: [m] -> [k] that
/// are jointly surjective and whose fiber sizes over each s differ by at
/// most 1.
struct Stufufuffler {
  int k = 0;
  std::vector<int> fp;
  std::vector<int> fq;

  int fiber_p(int s) const;  // |fP^-1(s)|
  int fiber_q(int s) const;  // |fQ^-1(s)|

  /// "P:1,1|Q:1,2,3" (two-line notation flattened).
  std::string to_string() const;
};

struct StufuffleStats {
  Composition wt;
  int loss = 0;
  int poise = 0;
};

/// All stufufufflers for compositions of lengths l and m, in lexicographic
/// order on (fP, fQ).
std::vector<Stufufuffler> enumerate_stufufufflers(int l, int m);

/// Weight, loss, and poise of f with respect to the entries of delta and
/// epsilon.  Throws UsageError if the lengths do not match f.
StufuffleStats stats(const Stufufuffler& f, const Composition& delta,
                     const Composition& epsilon);

/// The product eta_delta * eta_epsilon in the Eta basis, as a sum over
/// slotwise factorizations of delta and epsilon.
QSymElement eta_product_v1(const Composition& delta,
                           const Composition& epsilon);

/// The same product as a sum over stufufufflers.
QSymElement eta_product_v2(const Composition& delta,
                           const Composition& epsilon);

/// The same product as a sum over (T, I, J) triples of shuffles with
/// collapses.
QSymElement eta_product_v3(const Composition& delta,
                           const Composition& epsilon);

/// Bilinear extension of eta_product_v1 to Eta-basis elements.
QSymElement eta_product(const QSymElement& f, const QSymElement& g);

}  // namespace qeta

#endif
