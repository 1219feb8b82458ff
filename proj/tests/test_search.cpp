#include <doctest.h>

#include <algorithm>

#include "cpairs/errors.hpp"
#include "cpairs/search.hpp"

using namespace cpairs;

namespace {

struct BruteMinima {
  std::vector<Count> all;
  std::vector<Count> centered;
};

// Every subset, comp counted pairwise from scratch.
BruteMinima brute_minima(const GradedPoset& p) {
  const std::size_t n = p.size();
  BruteMinima out{std::vector<Count>(n + 1, ~Count{0}), std::vector<Count>(n + 1, ~Count{0})};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ElementId> ids;
    for (ElementId e = 0; e < n; ++e)
      if ((mask >> e) & 1) ids.push_back(e);
    Count c = 0;
    for (ElementId a : ids)
      for (ElementId b : ids)
        if (a != b && p.leq(a, b)) ++c;
    auto& slot = out.all[ids.size()];
    slot = std::min(slot, c);
    if (is_centered(Family(p, ids))) out.centered[ids.size()] = std::min(out.centered[ids.size()], c);
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("exhaustive minima and centered minima match brute force") {
    std::vector<std::unique_ptr<GradedPoset>> posets;
    posets.push_back(std::make_unique<ChainProductPoset>(ChainProduct(2, 2)));
    posets.push_back(std::make_unique<ChainProductPoset>(ChainProduct(4, 1)));
    posets.push_back(std::make_unique<ChainProductPoset>(ChainProduct(2, 3)));
    posets.push_back(std::make_unique<ChainProductPoset>(ChainProduct(1, 6)));
    posets.push_back(std::make_unique<SubspacePoset>(SubspaceLattice(2, 2)));
    posets.push_back(std::make_unique<SubspacePoset>(SubspaceLattice(3, 2)));
    posets.push_back(std::make_unique<SubspacePoset>(SubspaceLattice(2, 3)));
    for (const auto& p : posets) {
      const auto brute = brute_minima(*p);
      for (int workers : {1, 2}) {
        const auto rep = exhaustive_all(*p, workers);
        REQUIRE(rep.size() == p->size() + 1);
        for (std::size_t m = 0; m <= p->size(); ++m) {
          CHECK(rep[m].m == m);
          CHECK(rep[m].min_comp == brute.all[m]);
          CHECK(rep[m].centered_min_comp == brute.centered[m]);
          CHECK(rep[m].witness.size() == m);
          CHECK(comp_count_pairwise(Family(*p, rep[m].witness)) == rep[m].min_comp);
          const Family cw(*p, rep[m].centered_witness);
          CHECK(cw.size() == m);
          CHECK(is_centered(cw));
          CHECK(comp_count_pairwise(cw) == rep[m].centered_min_comp);
        }
      }
    }
  }

  TEST_CASE("witnesses are lexicographically first by encoding") {
    const ChainProductPoset p(ChainProduct(2, 2));
    const auto rep = exhaustive_all(p);
    // size 2 with zero pairs: the first incomparable pair in encoding order is {01, 10}
    CHECK(rep[2].min_comp == 0);
    CHECK(rep[2].witness == std::vector<ElementId>{p.decode("01"), p.decode("10")});
  }

  TEST_CASE("minima of {0,1,2}^3") {
    const ChainProductPoset p(ChainProduct(3, 2));
    const auto rep = exhaustive_all(p);
    const std::vector<Count> expected = {0,  0,  0,  0,  0,  0,  0,  0,  2,  4,  6,  9,   12,  15,
                                         20, 25, 30, 37, 44, 51, 64, 77, 90, 106, 122, 138, 163, 189};
    REQUIRE(rep.size() == expected.size());
    for (std::size_t m = 0; m < rep.size(); ++m) {
      CHECK(rep[m].min_comp == expected[m]);
      CHECK(rep[m].centered_achieves);
    }
    CHECK(verify_centeredness_property(p).holds());
    CHECK(rep[27].min_comp == comp_count(Family(p, rep[27].witness)));
  }

  TEST_CASE("exhaustive search limits") {
    const ChainProductPoset big(ChainProduct(2, 5));  // 36 elements
    CHECK_THROWS_AS(exhaustive_all(big), CapacityError);
    const ChainProductPoset p(ChainProduct(2, 2));
    CHECK_THROWS_AS(exhaustive_min_comp(p, 10), std::domain_error);
    CHECK(exhaustive_min_comp(p, 9).min_comp == comp_count(build_centered(p, 9)));
  }

  TEST_CASE("centered minimizer on a larger poset with two-rank boundary classes") {
    const ChainProductPoset p(ChainProduct(3, 3));
    CenteredMinimizer cm(p);
    Count prev = 0;
    for (std::size_t m = 0; m <= p.size(); ++m) {
      const auto r = cm.minimum(m);
      const Family f(p, r.members);
      CHECK(f.size() == m);
      CHECK(is_centered(f));
      CHECK(comp_count(f) == r.comp);
      CHECK(r.comp <= comp_count(build_centered(p, m)));
      CHECK(r.comp >= prev);
      prev = r.comp;
    }
    CHECK_THROWS_AS(cm.minimum(p.size() + 1), std::domain_error);
  }

  TEST_CASE("lower bound rows") {
    const ChainProductPoset p(ChainProduct(3, 2));
    const auto rep = check_lower_bounds(p.shape(), exhaustive_all(p));
    CHECK(rep.holds());
    REQUIRE(rep.rows.size() == 27 - 7 + 1);
    CHECK(rep.rows[0].t == 0);
    CHECK(rep.rows[1].bound == 2);
    CHECK(rep.rows[1].min_comp == 2);
  }

  TEST_CASE("annealing is seeded and never worse than its start") {
    const ChainProductPoset p(ChainProduct(2, 6));
    CenteredMinimizer cm(p);
    for (std::size_t m : {10UL, 20UL, 30UL}) {
      const auto a = local_search_counterexample(p, m, 5000, 7, cm);
      const auto b = local_search_counterexample(p, m, 5000, 7, cm);
      CHECK(a.best == b.best);
      CHECK(a.best_comp == b.best_comp);
      CHECK(a.best_comp <= a.centered_min);
      CHECK(a.centered_min == cm.minimum(m).comp);
      CHECK(comp_count(Family(p, a.best)) == a.best_comp);
      CHECK(a.best.size() == m);
    }
    const auto none = local_search_counterexample(p, 0, 100, 1, cm);
    CHECK(none.steps == 0);
    CHECK(none.best.empty());
  }
}
