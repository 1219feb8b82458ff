#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cpairs/matching.hpp"

using namespace cpairs;

namespace {

BipartiteGraph random_graph(int l, int r, double density, std::mt19937_64& rng) {
  BipartiteGraph g(l, r);
  std::bernoulli_distribution pick(density);
  for (int u = 0; u < l; ++u)
    for (int v = 0; v < r; ++v)
      if (pick(rng)) g.add_edge(u, v);
  return g;
}

int brute_matching(const BipartiteGraph& g, int u, std::vector<char>& used) {
  if (u == g.left) return 0;
  int best = brute_matching(g, u + 1, used);
  for (int v : g.adj[static_cast<std::size_t>(u)]) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = 1;
    best = std::max(best, 1 + brute_matching(g, u + 1, used));
    used[static_cast<std::size_t>(v)] = 0;
  }
  return best;
}

std::vector<int> bits(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

int deficiency(const BipartiteGraph& g, Side side, const std::vector<int>& s) {
  return static_cast<int>(s.size()) - static_cast<int>(neighborhood(g, side, s).size());
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("Hopcroft-Karp size equals brute force") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 200; ++rep) {
      const int l = std::uniform_int_distribution<int>(0, 7)(rng);
      const int r = std::uniform_int_distribution<int>(0, 7)(rng);
      const auto g = random_graph(l, r, std::uniform_real_distribution<double>(0, 1)(rng), rng);
      const Matching m = max_matching(g);
      std::vector<char> used(static_cast<std::size_t>(r), 0);
      CHECK(m.size == brute_matching(g, 0, used));
      int pairs = 0;
      for (int u = 0; u < l; ++u) {
        const int v = m.mate_left[static_cast<std::size_t>(u)];
        if (v < 0) continue;
        ++pairs;
        CHECK(m.mate_right[static_cast<std::size_t>(v)] == u);
        const auto& adj = g.adj[static_cast<std::size_t>(u)];
        CHECK(std::find(adj.begin(), adj.end(), v) != adj.end());
      }
      CHECK(pairs == m.size);
    }
  }

  TEST_CASE("Hall violators and deficiency") {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 200; ++rep) {
      const int l = std::uniform_int_distribution<int>(1, 7)(rng);
      const int r = std::uniform_int_distribution<int>(1, 7)(rng);
      const auto g = random_graph(l, r, std::uniform_real_distribution<double>(0.1, 0.7)(rng), rng);
      for (Side side : {Side::Left, Side::Right}) {
        const int n = side == Side::Left ? l : r;
        int brute_def = 0;
        std::vector<std::vector<int>> violators;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
          const auto s = bits(mask);
          const int d = deficiency(g, side, s);
          brute_def = std::max(brute_def, d);
          if (d > 0) violators.push_back(s);
        }
        CHECK(max_deficiency(g, side) == brute_def);
        const auto v = hall_violator(g, side);
        CHECK(v.has_value() == !violators.empty());
        if (!v) continue;
        CHECK(deficiency(g, side, *v) > 0);
        const auto vm = hall_violator(g, side, true);
        REQUIRE(vm.has_value());
        CHECK(deficiency(g, side, *vm) > 0);
        // inclusion-maximal: no strict superset is a violator
        const std::set<int> base(vm->begin(), vm->end());
        for (const auto& s : violators) {
          const std::set<int> other(s.begin(), s.end());
          if (other.size() > base.size() && std::includes(other.begin(), other.end(), base.begin(), base.end()))
            FAIL("found a larger violator containing the maximal one");
        }
      }
    }
  }

  TEST_CASE("exchange plans follow the case analysis") {
    std::mt19937_64 rng(3);
    std::set<std::string> seen;
    for (int rep = 0; rep < 2000; ++rep) {
      const int l = std::uniform_int_distribution<int>(1, 7)(rng);
      const int r = std::uniform_int_distribution<int>(1, 7)(rng);
      const auto g = random_graph(l, r, std::uniform_real_distribution<double>(0.05, 0.6)(rng), rng);
      if (max_matching(g).size == 0) {
        CHECK_THROWS_AS(plan_exchange(g), std::domain_error);
        continue;
      }
      const auto plan = plan_exchange(g);
      seen.insert(plan.case_label);
      REQUIRE(plan.remove_left.size() == plan.add_right.size());
      CHECK(!plan.remove_left.empty());
      CHECK(std::set<int>(plan.remove_left.begin(), plan.remove_left.end()).size() == plan.remove_left.size());
      CHECK(std::set<int>(plan.add_right.begin(), plan.add_right.end()).size() == plan.add_right.size());
      for (std::size_t i = 0; i < plan.remove_left.size(); ++i) {
        const auto& adj = g.adj[static_cast<std::size_t>(plan.remove_left[i])];
        CHECK(std::find(adj.begin(), adj.end(), plan.add_right[i]) != adj.end());
      }
      if (plan.case_label == "cover") CHECK(static_cast<int>(plan.remove_left.size()) == l);
      if (plan.case_label != "2") {
        // every neighbor of an added vertex is removed
        const auto nb = neighborhood(g, Side::Right, plan.add_right);
        const std::set<int> removed(plan.remove_left.begin(), plan.remove_left.end());
        for (int u : nb) CHECK(removed.count(u) == 1);
      } else {
        CHECK(plan.add_right == neighborhood(g, Side::Left, [&] {
                std::vector<int> all(static_cast<std::size_t>(l));
                for (int i = 0; i < l; ++i) all[static_cast<std::size_t>(i)] = i;
                return all;
              }()));
      }
    }
    CHECK(seen.count("cover") == 1);
    CHECK(seen.count("1") == 1);
    CHECK(seen.count("2") == 1);
    CHECK(seen.count("2a") == 1);
  }

  TEST_CASE("graph helpers") {
    BipartiteGraph g(2, 3);
    g.add_edge(0, 2);
    g.add_edge(1, 0);
    const auto t = g.transposed();
    CHECK(t.left == 3);
    CHECK(t.adj[2] == std::vector<int>{0});
    const auto h = g.induced({1}, {0, 2});
    CHECK(h.left == 1);
    CHECK(h.right == 2);
    CHECK(h.adj[0] == std::vector<int>{0});
    CHECK_THROWS(g.add_edge(2, 0));
  }
}
