#include <doctest.h>

#include <algorithm>
#include <set>

#include "qeta/composition.hpp"

using namespace qeta;

TEST_CASE("descent sets of worked examples") {
  CHECK(descent_set({2, 1, 3, 2}) == DescentSet(8, {2, 3, 6}));
  CHECK(descent_set({}) == DescentSet(0, {}));
  CHECK(descent_set({1, 4, 2, 3}) == DescentSet(10, {1, 5, 7}));
}

TEST_CASE("comp is inverse to the partial-sum map") {
  CHECK(comp_of_subset(DescentSet(8, {2, 3, 6})) == Composition({2, 1, 3, 2}));
  CHECK(comp_of_subset(DescentSet(5, {})) == Composition({5}));
  CHECK(comp_of_subset(DescentSet(0, {})) == Composition());
  CHECK_THROWS_AS(DescentSet(4, {5}), DomainError);
}

TEST_CASE("roundtrips are exhaustive up to size 10") {
  for (int n = 0; n <= 10; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      CHECK(comp_of_subset(descent_set(alpha)) == alpha);
    }
    // All subsets of [n-1] by bitmask, independent of the D map.
    for (size_t mask = 0; mask < (size_t{1} << std::max(0, n - 1)); ++mask) {
      std::vector<int> members;
      for (int bit = 0; bit < n - 1; ++bit) {
        if (mask & (size_t{1} << bit)) members.push_back(bit + 1);
      }
      const DescentSet subset(n, std::move(members));
      CHECK(descent_set(comp_of_subset(subset)) == subset);
    }
  }
}

TEST_CASE("length equals descent count plus size indicator") {
  for (int n = 0; n <= 10; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      CHECK(alpha.length() ==
            descent_set(alpha).count() + (alpha.degree() != 0 ? 1 : 0));
    }
  }
}

TEST_CASE("reversal") {
  CHECK(reverse({2, 3, 6}) == Composition({6, 3, 2}));
  CHECK(reverse({}) == Composition());
  CHECK(reverse(reverse({4, 1, 1, 2})) == Composition({4, 1, 1, 2}));
}

TEST_CASE("complement") {
  CHECK(complement({2, 5, 1, 1}) == Composition({1, 2, 1, 1, 1, 3}));
  CHECK(complement({6}) == Composition({1, 1, 1, 1, 1, 1}));
  CHECK(complement(complement({1, 3, 1})) == Composition({1, 3, 1}));
  CHECK(complement({}) == Composition());
}

TEST_CASE("omega") {
  CHECK(omega(omega({2, 1, 3})) == Composition({2, 1, 3}));
  CHECK(omega({5}) == Composition({1, 1, 1, 1, 1}));
  CHECK(omega({1, 3, 1}) == Composition({2, 1, 2}));
  CHECK(omega({}) == Composition());
}

TEST_CASE("involutions hold exhaustively up to size 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      CHECK(reverse(reverse(alpha)) == alpha);
      CHECK(complement(complement(alpha)) == alpha);
      CHECK(omega(omega(alpha)) == alpha);
      if (n >= 1) {
        CHECK(complement(alpha).length() + alpha.length() == n + 1);
      }
    }
  }
}

TEST_CASE("concatenation") {
  CHECK(concat({2, 1}, {3}) == Composition({2, 1, 3}));
  CHECK(concat({}, {1, 2}) == Composition({1, 2}));
  CHECK(descent_set(concat({2}, {1})) == DescentSet(3, {2}));
}

TEST_CASE("concatenation descent-set cuts, exhaustive to total size 8") {
  for (int total = 0; total <= 8; ++total) {
    for (int left = 0; left <= total; ++left) {
      for (const Composition& beta : compositions_of(left)) {
        for (const Composition& gamma : compositions_of(total - left)) {
          const Composition joined = concat(beta, gamma);
          const int m = beta.degree();
          std::vector<int> head, tail;
          const DescentSet dj = descent_set(joined);
          for (int x : dj.members()) {
            if (x <= m - 1) head.push_back(x);
            if (x >= m + 1) tail.push_back(x - m);
          }
          CHECK(DescentSet(beta.degree(), head) == descent_set(beta));
          CHECK(DescentSet(gamma.degree(), tail) == descent_set(gamma));
        }
      }
    }
  }
}

TEST_CASE("coarsenings") {
  const std::vector<Composition> expected = {
      {6}, {2, 4}, {3, 3}, {2, 1, 3}};
  std::set<Composition> got;
  for (const Composition& c : coarsenings({2, 1, 3})) got.insert(c);
  CHECK(got == std::set<Composition>(expected.begin(), expected.end()));

  CHECK(coarsenings({7}) == std::vector<Composition>{Composition({7})});

  const std::vector<Composition> expected2 = {
      {7}, {5, 2}, {4, 3}, {4, 1, 2}};
  std::set<Composition> got2;
  for (const Composition& c : coarsenings({4, 1, 2})) got2.insert(c);
  CHECK(got2 == std::set<Composition>(expected2.begin(), expected2.end()));

  for (int n = 0; n <= 8; ++n) {
    for (const Composition& gamma : compositions_of(n)) {
      const size_t expected_count =
          gamma.length() >= 1 ? (size_t{1} << (gamma.length() - 1)) : 1;
      CHECK(coarsenings(gamma).size() == expected_count);
    }
  }
}

TEST_CASE("subset reversal") {
  CHECK(reverse_subset(DescentSet(7, {2, 4})) == DescentSet(7, {3, 5}));
  CHECK(reverse_subset(DescentSet(3, {})) == DescentSet(3, {}));
  CHECK(reverse_subset(descent_set({3, 5, 2})) == descent_set({2, 5, 3}));
  for (int n = 0; n <= 8; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      CHECK(reverse_subset(descent_set(alpha)) ==
            descent_set(reverse(alpha)));
    }
  }
}

TEST_CASE("collapses") {
  const Composition alpha({1, 2, 3, 4, 5, 6, 7});
  CHECK(collapse(alpha, 2) == Composition({1, 5, 4, 5, 6, 7}));
  CHECK(collapse_set(alpha, {2, 4, 5}) == Composition({1, 5, 15, 7}));
  CHECK(collapse_set(alpha, {}) == alpha);
  CHECK(collapse_ij(alpha, {2}, {6}) ==
        collapse_set(alpha, {2, 5, 6}));
  CHECK_THROWS_AS(collapse(alpha, 7), DomainError);
  CHECK_THROWS_AS(collapse(alpha, 0), DomainError);
}

TEST_CASE("t-shuffles") {
  CHECK(t_shuffle({1, 2}, {3, 4}, {1, 3}) == Composition({3, 1, 4, 2}));
  CHECK(t_shuffle({1, 2}, {3, 4}, {3, 4}) == Composition({1, 2, 3, 4}));
  CHECK_THROWS_AS(t_shuffle({1, 2}, {3, 4}, {1}), DomainError);
}

TEST_CASE("t_prime evaluates the set expression elementwise") {
  // Oracle: (T \ (T-1)) \ {limit}, computed by brute force over members.
  auto oracle = [](const std::vector<int>& t, int limit) {
    std::set<int> ts(t.begin(), t.end());
    std::set<int> out;
    for (int x : ts) {
      if (ts.count(x + 1) == 0 && x != limit) out.insert(x);
    }
    return std::vector<int>(out.begin(), out.end());
  };
  CHECK(t_prime({1, 2}, 3) == oracle({1, 2}, 3));
  CHECK(t_prime({1, 2}, 3) == std::vector<int>{2});
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> t;
    for (int bit = 0; bit < 5; ++bit) {
      if (mask & (1 << bit)) t.push_back(bit + 1);
    }
    CHECK(t_prime(t, 5) == oracle(t, 5));
  }
}

TEST_CASE("canonical ordering sorts by size, then length, then entries") {
  CHECK(Composition({3}) < Composition({1, 3}));
  CHECK(Composition({4}) < Composition({1, 3}));
  CHECK(Composition({1, 3}) < Composition({3, 1}));
  const std::vector<Composition> comps = compositions_of(3);
  CHECK(comps == std::vector<Composition>{
                     {3}, {1, 2}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("text forms") {
  CHECK(parse_composition("1,3,1") == Composition({1, 3, 1}));
  CHECK(parse_composition("") == Composition());
  CHECK(parse_composition(" 2 , 1 ") == Composition({2, 1}));
  CHECK_THROWS_AS(parse_composition("1,0"), ParseError);
  CHECK_THROWS_AS(parse_composition("a"), ParseError);
  CHECK(parse_subset("2,3,6@8") == DescentSet(8, {2, 3, 6}));
  CHECK(parse_subset("@5") == DescentSet(5, {}));
  CHECK_THROWS_AS(parse_subset("2,3"), ParseError);
  CHECK(Composition({1, 3, 1}).to_string() == "1,3,1");
  CHECK(DescentSet(8, {2, 3, 6}).to_string() == "2,3,6@8");
}
