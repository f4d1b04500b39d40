#include "qeta/products.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qeta {

namespace {

void weakly_increasing(int length, int max_value, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == length) {
    out.push_back(acc);
    return;
  }
  const int lo = acc.empty() ? 1 : acc.back();
  for (int v = lo; v <= max_value; ++v) {
    acc.push_back(v);
    weakly_increasing(length, max_value, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> weakly_increasing_maps(int length,
                                                     int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  weakly_increasing(length, max_value, acc, out);
  return out;
}

}  // namespace

int Stufufuffler::fiber_p(int s) const {
  return static_cast<int>(std::count(fp.begin(), fp.end(), s));
}

int Stufufuffler::fiber_q(int s) const {
  return static_cast<int>(std::count(fq.begin(), fq.end(), s));
}

std::string Stufufuffler::to_string() const {
  std::ostringstream out;
  out << "P:";
  for (size_t i = 0; i < fp.size(); ++i) {
    if (i) out << ',';
    out << fp[i];
  }
  out << "|Q:";
  for (size_t i = 0; i < fq.size(); ++i) {
    if (i) out << ',';
    out << fq[i];
  }
  return out.str();
}

std::vector<Stufufuffler> enumerate_stufufufflers(int l, int m) {
  if (l < 0 || m < 0) throw DomainError("stufufuffler lengths must be >= 0");
  std::vector<Stufufuffler> result;
  if (l == 0 && m == 0) {
    result.push_back(Stufufuffler{0, {}, {}});
    return result;
  }
  const std::vector<std::vector<int>> ps = weakly_increasing_maps(l, l + m);
  const std::vector<std::vector<int>> qs = weakly_increasing_maps(m, l + m);
  for (const auto& fp : ps) {
    for (const auto& fq : qs) {
      int k = 0;
      if (!fp.empty()) k = std::max(k, fp.back());
      if (!fq.empty()) k = std::max(k, fq.back());
      Stufufuffler f{k, fp, fq};
      bool valid = true;
      for (int s = 1; s <= k && valid; ++s) {
        const int a = f.fiber_p(s);
        const int b = f.fiber_q(s);
        if (a + b == 0 || std::abs(a - b) > 1) valid = false;
      }
      if (valid) result.push_back(std::move(f));
    }
  }
  return result;
}

StufuffleStats stats(const Stufufuffler& f, const Composition& delta,
                     const Composition& epsilon) {
  if (static_cast<int>(f.fp.size()) != delta.length() ||
      static_cast<int>(f.fq.size()) != epsilon.length()) {
    throw UsageError("stufufuffler shape does not match composition lengths");
  }
  std::vector<int> wt(static_cast<size_t>(f.k), 0);
  std::vector<int> fiber_p(static_cast<size_t>(f.k), 0);
  std::vector<int> fiber_q(static_cast<size_t>(f.k), 0);
  for (size_t u = 0; u < f.fp.size(); ++u) {
    wt[static_cast<size_t>(f.fp[u] - 1)] += delta[static_cast<int>(u)];
    ++fiber_p[static_cast<size_t>(f.fp[u] - 1)];
  }
  for (size_t v = 0; v < f.fq.size(); ++v) {
    wt[static_cast<size_t>(f.fq[v] - 1)] += epsilon[static_cast<int>(v)];
    ++fiber_q[static_cast<size_t>(f.fq[v] - 1)];
  }
  StufuffleStats out;
  out.wt = Composition(std::move(wt));
  for (int s = 0; s < f.k; ++s) {
    out.loss += std::max(fiber_p[static_cast<size_t>(s)],
                         fiber_q[static_cast<size_t>(s)]);
    if (fiber_p[static_cast<size_t>(s)] == fiber_q[static_cast<size_t>(s)]) {
      ++out.poise;
    }
  }
  out.loss -= f.k;
  return out;
}

namespace {

// Depth-first enumeration of the slotwise factorizations
// delta = beta_1 ... beta_k, epsilon = gamma_1 ... gamma_k with
// |l(beta_s) - l(gamma_s)| <= 1 and l(beta_s) + l(gamma_s) > 0.
void v1_recurse(const Composition& delta, const Composition& epsilon, int i,
                int j, int excess_max, int equal_count, std::vector<int>& wt,
                const Scalar& minus_q, const Scalar& q_minus_1,
                QSymElement& out) {
  if (i == delta.length() && j == epsilon.length()) {
    out.add(Composition(wt),
            minus_q.power(excess_max) * q_minus_1.power(equal_count));
    return;
  }
  const int max_p = delta.length() - i;
  const int max_q = epsilon.length() - j;
  for (int p = 0; p <= max_p; ++p) {
    for (int q = std::max(0, p - 1); q <= std::min(max_q, p + 1); ++q) {
      if (p + q == 0) continue;
      int entry = 0;
      for (int t = 0; t < p; ++t) entry += delta[i + t];
      for (int t = 0; t < q; ++t) entry += epsilon[j + t];
      wt.push_back(entry);
      v1_recurse(delta, epsilon, i + p, j + q,
                 excess_max + std::max(p, q) - 1, equal_count + (p == q),
                 wt, minus_q, q_minus_1, out);
      wt.pop_back();
    }
  }
}

}  // namespace

QSymElement eta_product_v1(const Composition& delta,
                           const Composition& epsilon) {
  QSymElement result(QBasis::Eta);
  const Scalar minus_q = -Scalar::q();
  const Scalar q_minus_1 = Scalar::q() - Scalar::one();
  std::vector<int> wt;
  v1_recurse(delta, epsilon, 0, 0, 0, 0, wt, minus_q, q_minus_1, result);
  return result;
}

QSymElement eta_product_v2(const Composition& delta,
                           const Composition& epsilon) {
  QSymElement result(QBasis::Eta);
  const Scalar minus_q = -Scalar::q();
  const Scalar q_minus_1 = Scalar::q() - Scalar::one();
  for (const Stufufuffler& f :
       enumerate_stufufufflers(delta.length(), epsilon.length())) {
    const StufuffleStats st = stats(f, delta, epsilon);
    result.add(st.wt, minus_q.power(st.loss) * q_minus_1.power(st.poise));
  }
  return result;
}

QSymElement eta_product_v3(const Composition& delta,
                           const Composition& epsilon) {
  const int n = delta.length();
  const int m = epsilon.length();
  QSymElement result(QBasis::Eta);
  const Scalar minus_q = -Scalar::q();
  const Scalar q_minus_1 = Scalar::q() - Scalar::one();

  // All m-element subsets T of [n+m].
  std::vector<int> slots(static_cast<size_t>(m));
  std::iota(slots.begin(), slots.end(), 1);
  auto advance = [&]() {
    int idx = m - 1;
    while (idx >= 0 && slots[static_cast<size_t>(idx)] == n + idx + 1) --idx;
    if (idx < 0) return false;
    ++slots[static_cast<size_t>(idx)];
    for (int t = idx + 1; t < m; ++t) {
      slots[static_cast<size_t>(t)] = slots[static_cast<size_t>(t - 1)] + 1;
    }
    return true;
  };

  bool more = true;
  while (more) {
    const Composition gamma = t_shuffle(delta, epsilon, slots);
    const std::vector<int> tp = t_prime(slots, n + m);
    // Each element of T' independently goes to I, to J (unless it is 1),
    // or to neither.
    const size_t tp_size = tp.size();
    std::vector<int> choice(tp_size, 0);
    bool inner_more = true;
    while (inner_more) {
      std::vector<int> set_i, set_j;
      bool ok = true;
      for (size_t idx = 0; idx < tp_size; ++idx) {
        if (choice[idx] == 1) {
          set_i.push_back(tp[idx]);
        } else if (choice[idx] == 2) {
          if (tp[idx] == 1) {
            ok = false;
            break;
          }
          set_j.push_back(tp[idx]);
        }
      }
      if (ok) {
        result.add(collapse_ij(gamma, set_i, set_j),
                   minus_q.power(static_cast<int>(set_j.size())) *
                       q_minus_1.power(static_cast<int>(set_i.size())));
      }
      // Next 3-ary choice vector.
      size_t idx = 0;
      while (idx < tp_size && choice[idx] == 2) choice[idx++] = 0;
      if (idx == tp_size) {
        inner_more = false;
      } else {
        ++choice[idx];
      }
    }
    more = (m > 0) && advance();
  }
  return result;
}

QSymElement eta_product(const QSymElement& f, const QSymElement& g) {
  if (f.basis() != QBasis::Eta || g.basis() != QBasis::Eta) {
    throw UsageError("eta_product expects Eta-basis elements");
  }
  QSymElement result(QBasis::Eta);
  for (const auto& [delta, cd] : f.terms()) {
    for (const auto& [epsilon, ce] : g.terms()) {
      const QSymElement prod = eta_product_v1(delta, epsilon);
      for (const auto& [comp, c] : prod.terms()) {
        result.add(comp, cd * ce * c);
      }
    }
  }
  return result;
}

}  // namespace qeta
