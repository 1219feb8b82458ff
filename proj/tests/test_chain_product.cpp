#include <doctest.h>

#include <algorithm>
#include <random>

#include "cpairs/chain_product.hpp"
#include "cpairs/graded_poset.hpp"
#include "oracles.hpp"

using namespace cpairs;

TEST_SUITE("chain_product") {
  TEST_CASE("layer sizes match enumeration") {
    CHECK(layer_size(ChainProduct(2, 2), 0) == 1);
    CHECK(layer_size(ChainProduct(2, 2), 2) == oracle::count_rank(2, 2, 2));
    CHECK(layer_size(ChainProduct(2, 2), 2) == 3);
    CHECK(layer_size(ChainProduct(3, 2), 3) == oracle::count_rank(3, 2, 3));
    CHECK(layer_size(ChainProduct(3, 2), 3) == 7);
    CHECK_THROWS_AS(layer_size(ChainProduct(2, 2), 5), std::domain_error);
    CHECK_THROWS_AS(layer_size(ChainProduct(2, 2), -1), std::domain_error);
  }

  TEST_CASE("layer profile is complete, symmetric and unimodal for n,k <= 8") {
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= 8; ++k) {
        const ChainProduct p(n, k);
        const auto sizes = layer_sizes(p);
        BigCount total = 0;
        for (const auto& s : sizes) total += s;
        CHECK(total == p.element_count());
        for (int r = 0; r <= p.rank(); ++r) CHECK(sizes[r] == sizes[p.rank() - r]);
        for (int r = 1; r <= p.rank() / 2; ++r) CHECK(sizes[r - 1] <= sizes[r]);
      }
  }

  TEST_CASE("sigma and the middle window") {
    CHECK(sigma(ChainProduct(3, 2), 3) == 19);
    CHECK(sigma(ChainProduct(1, 1), 2) == 2);
    CHECK(sigma(ChainProduct(2, 2), 1) == 3);
    CHECK(sigma(ChainProduct(3, 2), 0) == 0);
    CHECK(sigma(ChainProduct(3, 2), 7) == 27);
    CHECK_THROWS_AS(sigma(ChainProduct(3, 2), 8), std::domain_error);
    // even rank, even j: the extra layer is above the middle
    CHECK(middle_window(4, 2) == LayerWindow{2, 3});
    CHECK(middle_window(6, 3) == LayerWindow{2, 4});
    // odd rank, single layer: the upper of the two middle ranks
    CHECK(middle_window(3, 1) == LayerWindow{2, 2});
    for (int rank = 1; rank <= 12; ++rank)
      for (int j = 1; j <= rank + 1; ++j) CHECK(middle_window(rank, j).width() == j);
  }

  TEST_CASE("compare") {
    const ChainProduct p(2, 2);
    CHECK(compare(Element(p, {0, 1}), Element(p, {1, 1})) == Order::Less);
    CHECK(compare(Element(p, {2, 0}), Element(p, {0, 2})) == Order::Incomparable);
    CHECK(compare(Element(p, {1, 1}), Element(p, {1, 1})) == Order::Equal);
    CHECK(compare(Element(p, {2, 1}), Element(p, {1, 1})) == Order::Greater);
    CHECK_THROWS_AS(compare(Element(p, {1, 1}), Element(ChainProduct(3, 2), {1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(Element(p, {3, 0}), std::domain_error);
  }

  TEST_CASE("compare is a partial order and complement reverses it") {
    const ChainProduct p(3, 2);
    std::vector<Element> all;
    for (const auto& v : oracle::all_vectors(3, 2)) all.emplace_back(p, v);
    for (const auto& a : all)
      for (const auto& b : all) {
        const Order ab = compare(a, b);
        const Order ba = compare(b, a);
        if (ab == Order::Less) CHECK(ba == Order::Greater);
        if (ab == Order::Equal) CHECK(a == b);
        if (ab == Order::Less) CHECK(compare(complement(p, b), complement(p, a)) == Order::Less);
        for (const auto& c : all)
          if (ab == Order::Less && compare(b, c) == Order::Less) CHECK(compare(a, c) == Order::Less);
      }
  }

  TEST_CASE("complement") {
    CHECK(complement(ChainProduct(3, 2), Element(ChainProduct(3, 2), {0, 2, 1})) == Element(ChainProduct(3, 2), {2, 0, 1}));
    CHECK(complement(ChainProduct(2, 2), Element(ChainProduct(2, 2), {1, 1})) == Element(ChainProduct(2, 2), {1, 1}));
    CHECK(complement(ChainProduct(2, 4), Element(ChainProduct(2, 4), {0, 4})) == Element(ChainProduct(2, 4), {4, 0}));
    const ChainProduct p(4, 3);
    const Element a(p, {0, 1, 3, 2});
    CHECK(complement(p, complement(p, a)) == a);
    CHECK(complement(p, a).rank() == p.rank() - a.rank());
  }

  TEST_CASE("neighbor_count examples") {
    const ChainProduct p(2, 2);
    CHECK(neighbor_count(p, Element(p, {1, 1}), 3) == 2);
    CHECK(neighbor_count(p, Element(p, {2, 1}), 1) == 2);
    CHECK(neighbor_count(p, Element(p, {2, 1}), 3) == 1);
    CHECK_THROWS_AS(neighbor_count(p, Element(p, {2, 1}), 5), std::domain_error);
  }

  TEST_CASE("neighbor_count agrees with brute enumeration") {
    for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}, std::pair{2, 5}, std::pair{5, 1}}) {
      const ChainProduct p(n, k);
      for (const auto& v : oracle::all_vectors(n, k)) {
        const Element a(p, v);
        for (int r = 0; r <= p.rank(); ++r) CHECK(neighbor_count(p, a, r) == oracle::brute_neighbors(v, k, r));
      }
    }
  }

  TEST_CASE("delta") {
    const ChainProduct p(2, 2);
    CHECK(delta(p, Element(p, {2, 1}), 1) == 2);
    CHECK(delta(p, Element(p, {2, 2}), 2) == 3);
    CHECK(delta(p, Element(p, {2, 2}), 0) == 1);
    CHECK(delta(p, Element(p, {1, 0}), 2) == 0);
    const ChainProduct q(4, 3);
    for (const auto& v : oracle::all_vectors(4, 3))
      for (int a = 0; a < oracle::sum(v); ++a) CHECK(delta(q, Element(q, v), a) == neighbor_count(q, Element(q, v), a));
  }

  TEST_CASE("delta_min against brute force over the layer") {
    CHECK(delta_min(ChainProduct(2, 2), 3, 1) == 2);
    CHECK_THROWS_AS(delta_min(ChainProduct(2, 2), 1, 0), std::domain_error);
    for (auto [n, k] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
      const ChainProduct p(n, k);
      const auto all = oracle::all_vectors(n, k);
      for (int b = 2; b <= p.rank(); ++b)
        for (int a = 1; a < b; ++a) {
          long best = -1;
          for (const auto& v : all)
            if (oracle::sum(v) == b) {
              const long d = oracle::brute_below(v, k, a);
              if (best < 0 || d < best) best = d;
            }
          CHECK(delta_min(p, b, a) == best);
        }
    }
  }

  TEST_CASE("bstar_reduce traces") {
    const ChainProduct p2(3, 2);
    CHECK(bstar_reduce(p2, Element(p2, {2, 2, 0}), 1) == Element(p2, {1, 1, 0}));
    const ChainProduct p1(2, 1);
    CHECK(bstar_reduce(p1, Element(p1, {1, 1}), 0) == Element(p1, {1, 1}));
    const ChainProduct p3(2, 3);
    const Element r = bstar_reduce(p3, Element(p3, {3, 3}), 2);
    CHECK(r == Element(p3, {1, 2}));
    CHECK(r.rank() == 3);
    CHECK_THROWS_AS(bstar_reduce(p3, Element(p3, {1, 1}), 2), std::domain_error);
  }

  TEST_CASE("bstar_reduce keeps B* below B and the support size") {
    const ChainProduct p(3, 4);
    for (const auto& v : oracle::all_vectors(3, 4)) {
      const Element b(p, v);
      for (int t = 0; t < b.rank(); ++t) {
        const Element s = bstar_reduce(p, b, t);
        CHECK((compare(s, b) == Order::Less || compare(s, b) == Order::Equal));
        const bool binary = std::all_of(s.coords().begin(), s.coords().end(), [](int c) { return c <= 1; });
        CHECK((binary || s.rank() == t + 1));
        if (binary) CHECK(s.count_of(0) == b.count_of(0));
      }
    }
  }

  TEST_CASE("text encoding") {
    const ChainProduct p(3, 2);
    CHECK(encode(p, Element(p, {0, 2, 1})) == "021");
    CHECK(decode(p, "021") == Element(p, {0, 2, 1}));
    CHECK_THROWS_AS(decode(p, "03"), std::domain_error);
    CHECK_THROWS_AS(decode(p, "031"), std::domain_error);
    const ChainProduct wide(2, 16);
    CHECK(encode(wide, Element(wide, {16, 3})) == "g3");
  }

  TEST_CASE("materialized poset ids follow the encoding order") {
    const ChainProductPoset poset(ChainProduct(3, 2));
    CHECK(poset.size() == 27);
    for (ElementId e = 1; e < poset.size(); ++e) CHECK(poset.encode(e - 1) < poset.encode(e));
    for (ElementId e = 0; e < poset.size(); ++e) {
      CHECK(poset.decode(poset.encode(e)) == e);
      CHECK(poset.element(poset.complement_id(e)) == complement(poset.shape(), poset.element(e)));
    }
    CHECK(poset.layer(3).size() == 7);
  }
}
