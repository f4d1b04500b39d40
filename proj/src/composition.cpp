#include "qeta/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qeta {

Composition::Composition(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) {
      throw DomainError("composition entries must be positive, got " +
                        std::to_string(e));
    }
  }
  degree_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool Composition::operator<(const Composition& other) const {
  if (degree_ != other.degree_) return degree_ < other.degree_;
  if (entries_.size() != other.entries_.size()) {
    return entries_.size() < other.entries_.size();
  }
  return entries_ < other.entries_;
}

std::string Composition::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  return out.str();
}

DescentSet::DescentSet(int ambient, std::vector<int> members)
    : ambient_(ambient), members_(std::move(members)) {
  if (ambient_ < 0) throw DomainError("ambient must be nonnegative");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (int x : members_) {
    if (x < 1 || x > ambient_ - 1) {
      throw DomainError("subset member " + std::to_string(x) +
                        " out of range [1," + std::to_string(ambient_ - 1) +
                        "]");
    }
  }
}

bool DescentSet::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

DescentSet DescentSet::complement() const {
  std::vector<int> result;
  for (int x = 1; x <= ambient_ - 1; ++x) {
    if (!contains(x)) result.push_back(x);
  }
  return DescentSet(ambient_, std::move(result));
}

bool DescentSet::subset_of(const DescentSet& other) const {
  if (ambient_ != other.ambient_) {
    throw UsageError("subset comparison across different ambients");
  }
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string DescentSet::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '@' << ambient_;
  return out.str();
}

DescentSet descent_set(const Composition& alpha) {
  std::vector<int> sums;
  int acc = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    acc += alpha[i];
    sums.push_back(acc);
  }
  return DescentSet(alpha.degree(), std::move(sums));
}

Composition comp_of_subset(const DescentSet& subset) {
  std::vector<int> entries;
  int prev = 0;
  for (int x : subset.members()) {
    entries.push_back(x - prev);
    prev = x;
  }
  if (subset.ambient() > prev) entries.push_back(subset.ambient() - prev);
  return Composition(std::move(entries));
}

Composition reverse(const Composition& alpha) {
  std::vector<int> entries(alpha.entries().rbegin(), alpha.entries().rend());
  return Composition(std::move(entries));
}

Composition complement(const Composition& alpha) {
  return comp_of_subset(descent_set(alpha).complement());
}

Composition omega(const Composition& gamma) {
  return comp_of_subset(descent_set(reverse(gamma)).complement());
}

Composition concat(const Composition& beta, const Composition& gamma) {
  std::vector<int> entries = beta.entries();
  entries.insert(entries.end(), gamma.entries().begin(),
                 gamma.entries().end());
  return Composition(std::move(entries));
}

std::vector<Composition> coarsenings(const Composition& gamma) {
  const DescentSet d = descent_set(gamma);
  const std::vector<int>& members = d.members();
  const size_t k = members.size();
  std::vector<Composition> result;
  result.reserve(size_t{1} << k);
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    std::vector<int> chosen;
    for (size_t bit = 0; bit < k; ++bit) {
      if (mask & (size_t{1} << bit)) chosen.push_back(members[bit]);
    }
    result.push_back(comp_of_subset(DescentSet(gamma.degree(), chosen)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

DescentSet reverse_subset(const DescentSet& subset) {
  std::vector<int> flipped;
  for (int x : subset.members()) flipped.push_back(subset.ambient() - x);
  return DescentSet(subset.ambient(), std::move(flipped));
}

Composition collapse(const Composition& alpha, int i) {
  if (i < 1 || i > alpha.length() - 1) {
    throw DomainError("collapse index " + std::to_string(i) +
                      " out of range for length " +
                      std::to_string(alpha.length()));
  }
  std::vector<int> entries = alpha.entries();
  entries[static_cast<size_t>(i - 1)] += entries[static_cast<size_t>(i)];
  entries.erase(entries.begin() + i);
  return Composition(std::move(entries));
}

Composition collapse_set(const Composition& alpha, const std::vector<int>& I) {
  std::vector<int> sorted = I;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Decreasing order keeps the remaining indices valid relative to the
  // original composition.
  Composition result = alpha;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    result = collapse(result, *it);
  }
  return result;
}

Composition collapse_ij(const Composition& alpha, const std::vector<int>& I,
                        const std::vector<int>& J) {
  std::vector<int> merged = I;
  for (int j : J) {
    merged.push_back(j);
    merged.push_back(j - 1);
  }
  return collapse_set(alpha, merged);
}

Composition t_shuffle(const Composition& delta, const Composition& epsilon,
                      const std::vector<int>& T) {
  const int n = delta.length();
  const int m = epsilon.length();
  std::vector<bool> in_t(static_cast<size_t>(n + m + 1), false);
  int t_count = 0;
  for (int t : T) {
    if (t < 1 || t > n + m) {
      throw DomainError("T-shuffle slot " + std::to_string(t) +
                        " outside [1," + std::to_string(n + m) + "]");
    }
    if (!in_t[static_cast<size_t>(t)]) {
      in_t[static_cast<size_t>(t)] = true;
      ++t_count;
    }
  }
  if (t_count != m) {
    throw DomainError("T-shuffle needs |T| = length of second composition");
  }
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(n + m));
  int di = 0, ej = 0;
  for (int k = 1; k <= n + m; ++k) {
    if (in_t[static_cast<size_t>(k)]) {
      entries.push_back(epsilon[ej++]);
    } else {
      entries.push_back(delta[di++]);
    }
  }
  return Composition(std::move(entries));
}

std::vector<int> t_prime(const std::vector<int>& T, int limit) {
  std::vector<int> sorted = T;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> result;
  for (int t : sorted) {
    const bool in_t_minus_1 =
        std::binary_search(sorted.begin(), sorted.end(), t + 1);
    if (!in_t_minus_1 && t != limit) result.push_back(t);
  }
  return result;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw DomainError("compositions_of needs n >= 0");
  std::vector<Composition> result;
  if (n == 0) {
    result.emplace_back();
    return result;
  }
  // One composition per subset of cut points [n-1].
  const size_t masks = size_t{1} << (n - 1);
  result.reserve(masks);
  for (size_t mask = 0; mask < masks; ++mask) {
    std::vector<int> cuts;
    for (int bit = 0; bit < n - 1; ++bit) {
      if (mask & (size_t{1} << bit)) cuts.push_back(bit + 1);
    }
    result.push_back(comp_of_subset(DescentSet(n, std::move(cuts))));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Composition> compositions_up_to(int maxdeg) {
  std::vector<Composition> result;
  for (int n = 0; n <= maxdeg; ++n) {
    std::vector<Composition> comps = compositions_of(n);
    result.insert(result.end(), comps.begin(), comps.end());
  }
  return result;
}

Composition parse_composition(const std::string& text) {
  std::vector<int> entries;
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty()) return Composition();
  std::istringstream in(trimmed);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      size_t pos = 0;
      const int value = std::stoi(token, &pos);
      if (pos != token.size()) throw ParseError("");
      entries.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("bad composition entry '" + token + "' in '" + text +
                       "'");
    }
  }
  try {
    return Composition(std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

DescentSet parse_subset(const std::string& text) {
  const size_t at = text.find('@');
  if (at == std::string::npos) {
    throw ParseError("subset needs explicit ambient, e.g. '2,3,6@8'");
  }
  int ambient = 0;
  try {
    size_t pos = 0;
    ambient = std::stoi(text.substr(at + 1), &pos);
    if (pos != text.size() - at - 1) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("bad ambient in '" + text + "'");
  }
  std::vector<int> members;
  const std::string head = text.substr(0, at);
  if (!head.empty()) {
    std::istringstream in(head);
    std::string token;
    while (std::getline(in, token, ',')) {
      try {
        size_t pos = 0;
        members.push_back(std::stoi(token, &pos));
        if (pos != token.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad subset member '" + token + "' in '" + text +
                         "'");
      }
    }
  }
  try {
    return DescentSet(ambient, std::move(members));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

}  // namespace qeta
