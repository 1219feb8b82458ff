#include <doctest.h>

#include <algorithm>
#include <random>

#include "cpairs/family.hpp"
#include "cpairs/graded_poset.hpp"
#include "oracles.hpp"

using namespace cpairs;

namespace {

Family random_family(const GradedPoset& p, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution pick(density);
  std::vector<ElementId> ids;
  for (ElementId e = 0; e < p.size(); ++e)
    if (pick(rng)) ids.push_back(e);
  return Family(p, ids);
}

long brute_comp(const ChainProductPoset& p, const Family& f) {
  std::vector<oracle::Vec> fam;
  for (ElementId e : f.members()) {
    const auto c = p.coords(e);
    fam.emplace_back(c.begin(), c.end());
  }
  return oracle::brute_comp(fam);
}

}  // namespace

TEST_SUITE("family") {
  TEST_CASE("membership, layers and exchange") {
    const ChainProductPoset p(ChainProduct(2, 2));
    const std::vector<ElementId> ids = {p.decode("11"), p.decode("02"), p.decode("22")};
    const Family f(p, ids);
    CHECK(f.size() == 3);
    CHECK(f.contains(p.decode("11")));
    CHECK_FALSE(f.contains(p.decode("00")));
    CHECK(f.layer_count(2) == 2);
    CHECK(f.layer_members(4) == std::vector<ElementId>{p.decode("22")});
    const std::vector<ElementId> out = {p.decode("22")};
    const std::vector<ElementId> in = {p.decode("20")};
    const Family g = f.exchange(out, in);
    CHECK(g.size() == 3);
    CHECK(g.layer_count(2) == 3);
    CHECK_FALSE(g == f);
  }

  TEST_CASE("comp backends agree with brute force on random families") {
    std::mt19937_64 rng(1);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {3, 3}, {2, 6}, {6, 1}}) {
      const ChainProductPoset p(ChainProduct(n, k));
      for (int rep = 0; rep < 20; ++rep) {
        const Family f = random_family(p, std::uniform_real_distribution<double>(0, 1)(rng), rng);
        const Count brute = static_cast<Count>(brute_comp(p, f));
        CHECK(comp_count_pairwise(f) == brute);
        CHECK(comp_count_transform(f) == brute);
        CHECK(comp_count_transform(f, 3) == brute);
        CHECK(comp_count(f) == brute);
        const auto rep_c = comp_report(f);
        CHECK(rep_c.total_pairs == brute);
        Count twice = 0;
        for (auto [e, c] : rep_c.degrees) {
          CHECK(c == comp_of_element(e, f));
          twice += c;
        }
        CHECK(twice == 2 * brute);
      }
    }
  }

  TEST_CASE("subspace families use the pairwise backend") {
    const SubspacePoset p(SubspaceLattice(2, 3));
    std::mt19937_64 rng(2);
    const Family f = random_family(p, 0.5, rng);
    CHECK(comp_count(f) == comp_count_pairwise(f));
    CHECK_THROWS_AS(comp_count_transform(f), std::domain_error);
    const Family all(p, [&] {
      std::vector<ElementId> v(p.size());
      for (ElementId e = 0; e < p.size(); ++e) v[e] = e;
      return v;
    }());
    Count expected = 0;
    for (ElementId a = 0; a < p.size(); ++a)
      for (ElementId b = 0; b < p.size(); ++b)
        if (a != b && p.leq(a, b)) ++expected;
    CHECK(comp_count(all) == expected);
  }

  TEST_CASE("twice potential") {
    const ChainProductPoset p(ChainProduct(2, 2));
    const std::vector<ElementId> ids = {p.decode("00"), p.decode("11"), p.decode("21")};
    CHECK(twice_potential(Family(p, ids)) == 4 + 0 + 2);
  }

  TEST_CASE("distance classes list the higher rank first") {
    const ChainProductPoset p(ChainProduct(2, 2));
    const auto c = distance_classes(p);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == std::vector<int>{2});
    CHECK(c[1] == std::vector<int>{3, 1});
    CHECK(c[2] == std::vector<int>{4, 0});
    const ChainProductPoset odd(ChainProduct(3, 1));
    const auto co = distance_classes(odd);
    CHECK(co[0] == std::vector<int>{2, 1});
  }

  TEST_CASE("build_centered is centered for every M and grows monotonically") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 1}, {3, 3}}) {
      const ChainProductPoset p(ChainProduct(n, k));
      Count prev = 0;
      for (std::size_t m = 0; m <= p.size(); ++m) {
        const Family f = build_centered(p, m);
        CHECK(f.size() == m);
        CHECK(is_centered(f));
        const Count c = comp_count(f);
        CHECK(c >= prev);
        prev = c;
        CHECK(is_centered(build_centered(p, m, FillOrder::Lexicographic)));
      }
      CHECK_THROWS_AS(build_centered(p, p.size() + 1), std::domain_error);
    }
    const SubspacePoset v(SubspaceLattice(2, 3));
    for (std::size_t m = 0; m <= v.size(); ++m) CHECK(is_centered(build_centered(v, m)));
  }

  TEST_CASE("centered and canonical predicates") {
    const ChainProductPoset p(ChainProduct(2, 2));
    const std::vector<ElementId> mid_and_one_each = {p.decode("02"), p.decode("11"), p.decode("20"), p.decode("12"),
                                                     p.decode("01")};
    const Family f(p, mid_and_one_each);
    CHECK(is_centered(f));
    CHECK_FALSE(is_canonical_centered(f));
    const std::vector<ElementId> skip = {p.decode("02"), p.decode("11"), p.decode("22")};
    CHECK_FALSE(is_centered(Family(p, skip)));
    const std::vector<ElementId> canon = {p.decode("02"), p.decode("11"), p.decode("20"), p.decode("12")};
    CHECK(is_canonical_centered(Family(p, canon)));
  }

  TEST_CASE("one partial layer minimum matches brute force over subsets") {
    for (auto [n, k, lo, hi, partial] :
         std::vector<std::tuple<int, int, int, int, int>>{{3, 2, 2, 3, 4}, {3, 2, 2, 3, 1}, {2, 3, 3, 3, 4}, {4, 1, 2, 2, 3}}) {
      const ChainProductPoset p(ChainProduct(n, k));
      const auto layer = p.layer(partial);
      std::vector<ElementId> base;
      for (int r = lo; r <= hi; ++r) base.insert(base.end(), p.layer(r).begin(), p.layer(r).end());
      for (std::size_t s = 0; s <= layer.size(); ++s) {
        const auto res = min_comp_one_partial_layer(p, LayerWindow{lo, hi}, partial, s);
        CHECK(res.family.size() == base.size() + s);
        CHECK(comp_count_pairwise(res.family) == res.comp);
        Count best = ~Count{0};
        for (std::uint32_t mask = 0; mask < (1u << layer.size()); ++mask) {
          if (static_cast<std::size_t>(__builtin_popcount(mask)) != s) continue;
          auto ids = base;
          for (std::size_t i = 0; i < layer.size(); ++i)
            if ((mask >> i) & 1) ids.push_back(layer[i]);
          best = std::min(best, comp_count_pairwise(Family(p, ids)));
        }
        CHECK(res.comp == best);
      }
    }
    const ChainProductPoset p(ChainProduct(3, 2));
    CHECK_THROWS_AS(min_comp_one_partial_layer(p, LayerWindow{2, 3}, 5, 1), std::domain_error);
    CHECK_THROWS_AS(min_comp_one_partial_layer(p, LayerWindow{2, 3}, 4, 7), std::domain_error);
  }

  TEST_CASE("NSS bound values") {
    CHECK(nss_bound(ChainProduct(4, 2), 1, 0) == 0);
    CHECK(nss_bound(ChainProduct(4, 2), 1, 1) == 1);
    CHECK(nss_bound(ChainProduct(3, 2), 1, 2) == 2);
    CHECK(layer_size(ChainProduct(4, 2), 2) == oracle::count_rank(4, 2, 2));
    CHECK_THROWS_AS(nss_bound(ChainProduct(3, 3), 1, 1), std::domain_error);
    CHECK_THROWS_AS(nss_bound(ChainProduct(2, 2), 2, 1), std::domain_error);
  }

  TEST_CASE("family JSON round trip") {
    std::mt19937_64 rng(4);
    const ChainProductPoset p(ChainProduct(3, 2));
    const Family f = random_family(p, 0.4, rng);
    const auto j = family_to_json(f);
    CHECK(j.at("poset").at("type") == "chain_product");
    CHECK(family_from_json(p, j) == f);
    const SubspacePoset v(SubspaceLattice(3, 2));
    const Family g = random_family(v, 0.5, rng);
    CHECK(family_from_json(v, family_to_json(g)) == g);
    CHECK_THROWS_AS(family_from_json(v, j), std::domain_error);
    auto dup = j;
    dup["members"] = {"000", "000"};
    CHECK_THROWS_AS(family_from_json(p, dup), std::domain_error);
  }
}
