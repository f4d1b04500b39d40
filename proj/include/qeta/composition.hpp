#ifndef QETA_COMPOSITION_HPP
#define QETA_COMPOSITION_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "qeta/errors.hpp"

namespace qeta {

/// A composition: a finite (possibly empty) list of positive integers.
/// Immutable after construction.  The comparison operator< orders
/// compositions canonically: by degree (sum of entries), then by length,
/// then lexicographically on the entries.
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<int> entries)
      : Composition(std::vector<int>(entries)) {}
  explicit Composition(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

  /// Number of entries, the paper's ell(alpha).
  int length() const { return static_cast<int>(entries_.size()); }
  /// Sum of entries, the paper's |alpha|; the grading degree in QSym.
  int degree() const { return degree_; }
  bool empty() const { return entries_.empty(); }

  bool operator==(const Composition& other) const {
    return entries_ == other.entries_;
  }
  bool operator!=(const Composition& other) const { return !(*this == other); }
  bool operator<(const Composition& other) const;

  /// Comma-separated entries; empty string for the empty composition.
  std::string to_string() const;

private:
  std::vector<int> entries_;
  int degree_ = 0;
};

/// A subset of [n-1] together with its ambient n.  The ambient is part of
/// the value: comp(I) is ambiguous without it.
class DescentSet {
public:
  DescentSet() = default;
  DescentSet(int ambient, std::vector<int> members);

  int ambient() const { return ambient_; }
  const std::vector<int>& members() const { return members_; }  // sorted
  int count() const { return static_cast<int>(members_.size()); }
  bool contains(int x) const;

  bool operator==(const DescentSet& other) const {
    return ambient_ == other.ambient_ && members_ == other.members_;
  }
  bool operator!=(const DescentSet& other) const { return !(*this == other); }

  /// Complement within [n-1], same ambient.
  DescentSet complement() const;
  bool subset_of(const DescentSet& other) const;

  /// "2,3,6@8" (members@ambient); "@8" for the empty set.
  std::string to_string() const;

private:
  int ambient_ = 0;
  std::vector<int> members_;
};

/// D(alpha): the set of proper partial sums of alpha, ambient |alpha|.
DescentSet descent_set(const Composition& alpha);

/// comp(I): the inverse of D; the interval lengths cut out of [n] by I.
Composition comp_of_subset(const DescentSet& subset);

Composition reverse(const Composition& alpha);

/// The unique composition of the same size whose partial-sum set is the
/// complement of D(alpha) in [n-1].
Composition complement(const Composition& alpha);

/// omega(gamma): the unique composition with D = [n-1] \ D(rev gamma).
Composition omega(const Composition& gamma);

Composition concat(const Composition& beta, const Composition& gamma);

/// All compositions of the same size that coarsen gamma (partial-sum set
/// contained in D(gamma)), in canonical order.  2^(length-1) of them.
std::vector<Composition> coarsenings(const Composition& gamma);

/// rev_n(X) = { n - x : x in X }, same ambient.
DescentSet reverse_subset(const DescentSet& subset);

/// Merges entries i and i+1 of alpha into their sum (1-based i).
Composition collapse(const Composition& alpha, int i);

/// Applies collapse at the positions of I in decreasing order; the indices
/// always refer to the original composition.
Composition collapse_set(const Composition& alpha, const std::vector<int>& I);

/// collapse_set at I union J union (J - 1).
Composition collapse_ij(const Composition& alpha, const std::vector<int>& I,
                        const std::vector<int>& J);

/// The T-shuffle of delta and epsilon: entry k comes from epsilon if k is
/// in T (j-th smallest element of T receives epsilon_j), otherwise from
/// delta.  Requires |T| = length(epsilon) and T inside [n+m].
Composition t_shuffle(const Composition& delta, const Composition& epsilon,
                      const std::vector<int>& T);

/// T' = (T \ (T-1)) \ {limit}.
std::vector<int> t_prime(const std::vector<int>& T, int limit);

/// All compositions of n, canonically ordered.  2^(n-1) of them for n >= 1.
std::vector<Composition> compositions_of(int n);

/// All compositions of degree 0..maxdeg, canonically ordered.
std::vector<Composition> compositions_up_to(int maxdeg);

Composition parse_composition(const std::string& text);
DescentSet parse_subset(const std::string& text);

}  // namespace qeta

#endif
