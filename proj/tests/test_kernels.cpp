#include <doctest.h>

#include <random>

#include "cpairs/errors.hpp"
#include "cpairs/kernels.hpp"
#include "oracles.hpp"

using namespace cpairs;
using namespace cpairs::kernels;

namespace {

std::vector<std::uint8_t> random_indicator(std::size_t size, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution pick(density);
  std::vector<std::uint8_t> out(size);
  for (auto& x : out) x = pick(rng) ? 1 : 0;
  return out;
}

SubsetProblem random_problem(int items, std::mt19937_64& rng) {
  SubsetProblem p;
  p.adjacency.assign(static_cast<std::size_t>(items), 0);
  p.weight.assign(static_cast<std::size_t>(items), 0);
  std::bernoulli_distribution edge(0.35);
  for (int i = 0; i < items; ++i) {
    p.weight[static_cast<std::size_t>(i)] = std::uniform_int_distribution<std::int64_t>(-4, 6)(rng);
    for (int j = i + 1; j < items; ++j)
      if (edge(rng)) {
        p.adjacency[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        p.adjacency[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  }
  return p;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("zeta transforms match direct sums") {
    std::mt19937_64 rng(7);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}, {3, 3}, {4, 1}}) {
      const Grid grid{n, k};
      const auto vecs = oracle::all_vectors(n, k);
      REQUIRE(vecs.size() == grid.size());
      std::vector<std::uint32_t> base(grid.size());
      for (auto& x : base) x = std::uniform_int_distribution<std::uint32_t>(0, 9)(rng);
      auto down = base;
      auto up = base;
      down_zeta_serial(down, grid);
      up_zeta_serial(up, grid);
      for (std::size_t x = 0; x < vecs.size(); ++x) {
        std::uint32_t below = 0;
        std::uint32_t above = 0;
        for (std::size_t y = 0; y < vecs.size(); ++y) {
          if (oracle::leq(vecs[y], vecs[x])) below += base[y];
          if (oracle::leq(vecs[x], vecs[y])) above += base[y];
        }
        CHECK(down[x] == below);
        CHECK(up[x] == above);
      }
    }
  }

  TEST_CASE("comp transform and degrees match brute force") {
    std::mt19937_64 rng(11);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 5}, {5, 1}}) {
      const Grid grid{n, k};
      const auto vecs = oracle::all_vectors(n, k);
      for (int rep = 0; rep < 5; ++rep) {
        const auto ind = random_indicator(grid.size(), 0.45, rng);
        std::vector<oracle::Vec> fam;
        for (std::size_t i = 0; i < ind.size(); ++i)
          if (ind[i]) fam.push_back(vecs[i]);
        CHECK(comp_transform_serial(ind, grid) == static_cast<Count>(oracle::brute_comp(fam)));
        const auto deg = degrees_serial(ind, grid);
        for (std::size_t x = 0; x < vecs.size(); ++x) {
          std::uint32_t d = 0;
          for (const auto& v : fam)
            if (v != vecs[x] && (oracle::leq(v, vecs[x]) || oracle::leq(vecs[x], v))) ++d;
          CHECK(deg[x] == d);
        }
      }
    }
  }

  TEST_CASE("parallel kernels equal their serial twins for any worker count") {
    std::mt19937_64 rng(3);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {4, 4}, {9, 1}, {1, 7}}) {
      const Grid grid{n, k};
      const auto ind = random_indicator(grid.size(), 0.3, rng);
      std::vector<std::uint32_t> base(ind.begin(), ind.end());
      auto ref_down = base;
      auto ref_up = base;
      down_zeta_serial(ref_down, grid);
      up_zeta_serial(ref_up, grid);
      for (int w : {1, 2, 3, 8}) {
        auto d = base;
        auto u = base;
        down_zeta_parallel(d, grid, w);
        up_zeta_parallel(u, grid, w);
        CHECK(d == ref_down);
        CHECK(u == ref_up);
        CHECK(comp_transform_parallel(ind, grid, w) == comp_transform_serial(ind, grid));
        CHECK(degrees_parallel(ind, grid, w) == degrees_serial(ind, grid));
      }
    }
  }

  TEST_CASE("buffer size is validated") {
    std::vector<std::uint32_t> wrong(5);
    CHECK_THROWS_AS(down_zeta_serial(wrong, Grid{2, 2}), std::domain_error);
  }

  TEST_CASE("subset objective and lex order") {
    SubsetProblem p;
    p.adjacency = {0b110, 0b001, 0b001};
    p.weight = {1, 2, 3};
    CHECK(subset_objective(p, 0) == 0);
    CHECK(subset_objective(p, 0b011) == 1 + 2 + 1);
    CHECK(subset_objective(p, 0b111) == 6 + 2);
    CHECK(lex_less(0b011, 0b101));  // {0,1} < {0,2}
    CHECK(lex_less(0b101, 0b110));  // {0,2} < {1,2}
    CHECK_FALSE(lex_less(0b110, 0b110));
  }

  TEST_CASE("Gray scans agree with the from-scratch reference") {
    std::mt19937_64 rng(5);
    for (int items : {0, 1, 5, 12, 16}) {
      const auto p = random_problem(items, rng);
      const auto ref = subset_scan_reference(p);
      const auto ser = subset_scan_serial(p);
      CHECK(ser.best == ref.best);
      CHECK(ser.witness == ref.witness);
      for (int w : {1, 3}) {
        const auto par = subset_scan_parallel(p, w, 4);
        CHECK(par.best == ref.best);
        CHECK(par.witness == ref.witness);
      }
      for (std::size_t c = 0; c < ref.witness.size(); ++c) {
        CHECK(static_cast<std::size_t>(__builtin_popcountll(ref.witness[c])) == c);
        CHECK(subset_objective(p, ref.witness[c]) == ref.best[c]);
      }
    }
  }

  TEST_CASE("Gray checkpoints equal from-scratch values at 10^4 points") {
    std::mt19937_64 rng(9);
    const auto p = random_problem(20, rng);
    const auto pts = gray_checkpoints(p, 100);
    CHECK(pts.size() >= 10000);
    for (const auto& [mask, value] : pts) CHECK(subset_objective(p, mask) == value);
    CHECK_THROWS_AS(gray_checkpoints(p, 0), std::domain_error);
  }

  TEST_CASE("scan capacity guard") {
    SubsetProblem p;
    p.adjacency.assign(33, 0);
    CHECK_THROWS_AS(subset_scan_serial(p), CapacityError);
  }
}
