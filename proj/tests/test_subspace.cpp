#include <doctest.h>

#include <algorithm>
#include <set>

#include "cpairs/errors.hpp"
#include "cpairs/graded_poset.hpp"
#include "cpairs/subspace.hpp"

using namespace cpairs;

namespace {

// Vectors of F_q^n packed base q.
int add_vec(int x, int y, int q, int n) {
  int out = 0;
  int place = 1;
  for (int i = 0; i < n; ++i) {
    out += ((x % q + y % q) % q) * place;
    x /= q;
    y /= q;
    place *= q;
  }
  return out;
}

int scale_vec(int x, int c, int q, int n) {
  int out = 0;
  int place = 1;
  for (int i = 0; i < n; ++i) {
    out += ((x % q) * c % q) * place;
    x /= q;
    place *= q;
  }
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Subspaces as closed vector subsets, found by testing every subset.
std::vector<std::set<int>> brute_subspaces(int q, int n) {
  const int total = ipow(q, n);
  std::vector<std::set<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    if (!(mask & 1)) continue;
    bool closed = true;
    for (int x = 0; x < total && closed; ++x) {
      if (!((mask >> x) & 1)) continue;
      for (int c = 2; c < q && closed; ++c) closed = (mask >> scale_vec(x, c, q, n)) & 1;
      for (int y = 0; y < total && closed; ++y)
        if ((mask >> y) & 1) closed = (mask >> add_vec(x, y, q, n)) & 1;
    }
    if (!closed) continue;
    std::set<int> s;
    for (int x = 0; x < total; ++x)
      if ((mask >> x) & 1) s.insert(x);
    out.push_back(std::move(s));
  }
  return out;
}

std::set<int> vectors_of(const Subspace& s, int q) {
  std::set<int> out;
  const int combos = ipow(q, s.dim);
  for (int c = 0; c < combos; ++c) {
    std::vector<int> v(static_cast<std::size_t>(s.n), 0);
    int rest = c;
    for (int r = 0; r < s.dim; ++r) {
      const int coef = rest % q;
      rest /= q;
      for (int col = 0; col < s.n; ++col) v[static_cast<std::size_t>(col)] = (v[static_cast<std::size_t>(col)] + coef * s.at(r, col)) % q;
    }
    int packed = 0;
    for (int col = s.n - 1; col >= 0; --col) packed = packed * q + v[static_cast<std::size_t>(col)];
    out.insert(packed);
  }
  return out;
}

}  // namespace

TEST_SUITE("subspace") {
  TEST_CASE("gaussian binomials") {
    CHECK(gaussian(4, 2, 2) == 35);
    CHECK(gaussian(3, 1, 2) == 7);
    CHECK(gaussian(2, 1, 3) == 4);
    CHECK(gaussian(5, 0, 7) == 1);
    CHECK(gaussian(5, 5, 7) == 1);
    for (int q : {2, 3, 4, 5})
      for (int n = 0; n <= 8; ++n)
        for (int i = 0; i <= n; ++i) CHECK(gaussian(n, i, q) == gaussian(n, n - i, q));
    CHECK_THROWS_AS(gaussian(3, 4, 2), std::domain_error);
    CHECK_THROWS_AS(gaussian(3, 1, 1), std::domain_error);
  }

  TEST_CASE("enumeration matches brute-force closed subsets") {
    for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
      const SubspaceLattice lattice(q, n);
      const auto subs = enumerate_subspaces(lattice);
      const auto brute = brute_subspaces(q, n);
      CHECK(subs.size() == brute.size());
      CHECK(BigCount(subs.size()) == lattice.element_count());
      std::set<std::set<int>> ours;
      for (const auto& s : subs) {
        const auto vs = vectors_of(s, q);
        CHECK(static_cast<int>(vs.size()) == ipow(q, s.dim));
        ours.insert(vs);
      }
      CHECK(ours == std::set<std::set<int>>(brute.begin(), brute.end()));
      for (int d = 0; d <= n; ++d) {
        const auto c = std::count_if(subs.begin(), subs.end(), [d](const Subspace& s) { return s.dim == d; });
        CHECK(BigCount(c) == gaussian(n, d, q));
      }
    }
  }

  TEST_CASE("containment agrees with vector sets") {
    const SubspaceLattice lattice(3, 3);
    const auto subs = enumerate_subspaces(lattice);
    REQUIRE(subs.size() == 28);
    for (const auto& s : subs)
      for (const auto& t : subs) {
        const auto vs = vectors_of(s, 3);
        const auto vt = vectors_of(t, 3);
        const bool subset = std::includes(vs.begin(), vs.end(), vt.begin(), vt.end());
        CHECK(contains(lattice, s, t) == subset);
      }
  }

  TEST_CASE("span_of reduces any spanning set") {
    const SubspaceLattice lattice(2, 3);
    const auto s = span_of(lattice, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(s.dim == 2);
    const auto z = span_of(lattice, {{0, 0, 0}});
    CHECK(z.dim == 0);
  }

  TEST_CASE("encoding round trip") {
    for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}}) {
      const SubspaceLattice lattice(q, n);
      for (const auto& s : enumerate_subspaces(lattice)) CHECK(decode(lattice, encode(s)) == s);
    }
    const SubspaceLattice lattice(2, 3);
    CHECK(encode(decode(lattice, "")).empty());
    CHECK_THROWS_AS(decode(lattice, "12"), std::domain_error);
    CHECK_THROWS_AS(decode(lattice, "110/100"), std::domain_error);
  }

  TEST_CASE("non-prime q counts but does not enumerate") {
    const SubspaceLattice lattice(4, 2);
    CHECK(lattice.element_count() == 1 + 5 + 1);
    CHECK_THROWS_AS(enumerate_subspaces(lattice), UnsupportedError);
  }

  TEST_CASE("property (Q) and rank profile for q in {2,3,5}, n <= 6") {
    for (int q : {2, 3, 5})
      for (int n = 1; n <= 6; ++n) {
        const SubspaceLattice lattice(q, n);
        const auto rep = check_property_q(lattice);
        CHECK(rep.holds());
        CHECK(!rep.checks.empty() == (n >= 2));
        const auto prof = check_rank_profile(lattice);
        CHECK(prof.symmetric);
        CHECK(prof.unimodal);
      }
  }

  TEST_CASE("property (Q) neighbor counts agree with the materialized poset") {
    const SubspacePoset p(SubspaceLattice(2, 4));
    for (ElementId e = 0; e < p.size(); ++e) {
      const int m = p.rank_of(e);
      for (int r = 0; r <= 4; ++r) {
        long below = 0;
        long above = 0;
        for (ElementId f = 0; f < p.size(); ++f) {
          if (p.rank_of(f) != r) continue;
          if (r <= m && p.leq(f, e)) ++below;
          if (r >= m && p.leq(e, f)) ++above;
        }
        if (r <= m) CHECK(BigCount(below) == gaussian(m, m - r, 2));
        if (r >= m) CHECK(BigCount(above) == gaussian(4 - m, r - m, 2));
      }
    }
  }

  TEST_CASE("unimodality helper") {
    CHECK(is_unimodal({1, 2, 2, 1}));
    CHECK(is_unimodal({3, 2, 1}));
    CHECK(is_unimodal({}));
    CHECK_FALSE(is_unimodal({1, 3, 2, 3}));
  }
}
