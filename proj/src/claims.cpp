#include "cpairs/claims.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "cpairs/compression.hpp"
#include "cpairs/constructions.hpp"
#include "cpairs/family.hpp"
#include "cpairs/graded_poset.hpp"
#include "cpairs/kernels.hpp"
#include "cpairs/search.hpp"

namespace cpairs {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxListedViolations = 8;

/// Keeps the first few violation descriptions plus a total.
struct Violations {
  std::size_t count = 0;
  json listed = json::array();

  void add(json detail) {
    if (count++ < kMaxListedViolations) listed.push_back(std::move(detail));
  }
  json to_json() const { return {{"count", count}, {"first", listed}}; }
  bool none() const { return count == 0; }
};

int count_value(std::span<const std::uint8_t> coords, int v) {
  int c = 0;
  for (auto x : coords) c += x == v;
  return c;
}

std::string chain_name(int n, int k) { return "chain:" + std::to_string(n) + ":" + std::to_string(k); }

Family random_family(const GradedPoset& p, std::mt19937_64& rng) {
  const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::bernoulli_distribution pick(density);
  std::vector<ElementId> members;
  for (ElementId e = 0; e < p.size(); ++e)
    if (pick(rng)) members.push_back(e);
  return Family(p, members);
}

std::vector<int> random_involution(int n, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pi(order.size());
  std::iota(pi.begin(), pi.end(), 0);
  const int pairs = std::uniform_int_distribution<int>(0, n / 2)(rng);
  for (int i = 0; i < pairs; ++i) {
    const int x = order[static_cast<std::size_t>(2 * i)];
    const int y = order[static_cast<std::size_t>(2 * i + 1)];
    pi[static_cast<std::size_t>(x)] = y;
    pi[static_cast<std::size_t>(y)] = x;
  }
  return pi;
}

/// Comparable elements (including e itself) of every rank, by enumeration.
std::vector<std::vector<long>> neighbor_table(const GradedPoset& p) {
  std::vector<std::vector<long>> out(p.size(), std::vector<long>(static_cast<std::size_t>(p.rank()) + 1, 0));
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b = 0; b < p.size(); ++b)
      if (a == b || p.leq(a, b) || p.leq(b, a)) ++out[a][static_cast<std::size_t>(p.rank_of(b))];
  return out;
}

/// neighbor_count for every element and rank, from the coefficient formula.
std::vector<std::vector<BigCount>> neighbor_formula_table(const ChainProductPoset& p) {
  std::vector<std::vector<BigCount>> out(p.size());
  for (ElementId e = 0; e < p.size(); ++e) {
    const Element el = p.element(e);
    for (int r = 0; r <= p.rank(); ++r) out[e].push_back(neighbor_count(p.shape(), el, r));
  }
  return out;
}

Check centeredness_check(const std::string& id, const GradedPoset& p, int workers) {
  const auto rep = verify_centeredness_property(p, workers);
  json minima = json::array();
  json failing = json::array();
  bool recount = true;
  for (const auto& r : rep.per_m) {
    minima.push_back(r.min_comp);
    if (!r.centered_achieves) failing.push_back(r.m);
    const Family w(p, r.witness);
    const Family cw(p, r.centered_witness);
    if (w.size() != r.m || comp_count_pairwise(w) != r.min_comp || !is_centered(cw) ||
        comp_count_pairwise(cw) != r.centered_min_comp)
      recount = false;
  }
  return make_check(id, {{"poset", p.descriptor()}}, {{"centered_achieves_every_m", true}, {"witnesses_recount", true}},
                    {{"min_comp", minima}, {"failing_m", failing}, {"witnesses_recount", recount}},
                    rep.holds() && recount);
}

long ceil_log2(long n) {
  long c = 0;
  while ((1L << c) < n) ++c;
  return c;
}

}  // namespace

Check verify_kleitman(int n, int workers) {
  const ChainProductPoset p(ChainProduct(n, 1));
  return centeredness_check("kleitman.centeredness", p, workers);
}

Check verify_subspace_centeredness(int q, int n, int workers) {
  const SubspacePoset p(SubspaceLattice(q, n));
  return centeredness_check("subspace.centeredness", p, workers);
}

std::vector<Check> verify_property_q(int q, int n) {
  const SubspaceLattice lattice(q, n);
  const auto rep = check_property_q(lattice);
  Violations v;
  for (const auto& c : rep.violations)
    v.add({{"condition", c.condition},
           {"rank_b", c.rank_b},
           {"rank_a", c.rank_a},
           {"i", c.offset},
           {"lhs", big_json(c.lhs)},
           {"rhs", big_json(c.rhs)}});
  const json params = {{"q", q}, {"n", n}};
  std::vector<Check> out;
  out.push_back(make_check("property_q", params, {{"violations", 0}},
                           {{"inequalities", rep.checks.size()}, {"violations", v.to_json()}}, rep.holds()));
  const auto profile = check_rank_profile(lattice);
  json values = json::array();
  for (const auto& x : profile.profile) values.push_back(big_json(x));
  out.push_back(make_check("subspace.rank_profile", params, {{"symmetric", true}, {"unimodal", true}},
                           {{"profile", values}, {"symmetric", profile.symmetric}, {"unimodal", profile.unimodal}},
                           profile.symmetric && profile.unimodal));
  return out;
}

Check verify_scd_instance(int n, int k) {
  const ChainProduct p(n, k);
  const auto check = check_scd(p, build_scd(p));
  return make_check("scd.invariants", {{"n", n}, {"k", k}},
                    {{"chains", big_json(layer_size(p, p.rank() / 2))},
                     {"partition", true},
                     {"saturated", true},
                     {"symmetric", true}},
                    {{"chains", check.chains},
                     {"partition", check.partition},
                     {"saturated", check.saturated},
                     {"symmetric", check.symmetric}},
                    check.ok());
}

Check verify_scd_grid(std::size_t max_elements) {
  std::size_t instances = 0;
  Violations v;
  for (int n = 1; (std::size_t{1} << n) <= max_elements; ++n) {
    for (int k = 1;; ++k) {
      if (BigCount(k + 1) > BigCount(max_elements)) break;
      if (ChainProduct(n, k).element_count() > max_elements) break;
      ++instances;
      const ChainProduct p(n, k);
      const auto check = check_scd(p, build_scd(p));
      if (!check.ok()) v.add({{"n", n}, {"k", k}});
    }
  }
  return make_check("scd.invariants_grid", {{"max_elements", max_elements}}, {{"failures", 0}},
                    {{"instances", instances}, {"failures", v.to_json()}}, v.none());
}

Check verify_pigeonhole(std::uint64_t seed, std::size_t samples) {
  const std::vector<std::pair<int, int>> shapes = {{3, 2}, {4, 2}, {3, 3}, {2, 4}, {5, 1}, {4, 3}};
  std::vector<std::unique_ptr<ChainProductPoset>> posets;
  std::vector<std::vector<std::size_t>> chain_of;
  std::vector<std::size_t> chain_counts;
  for (auto [n, k] : shapes) {
    posets.push_back(std::make_unique<ChainProductPoset>(ChainProduct(n, k)));
    const auto scd = build_scd(posets.back()->shape());
    chain_of.push_back(scd_chain_of(*posets.back(), scd));
    chain_counts.push_back(scd.chains.size());
  }
  std::mt19937_64 rng(seed);
  Violations v;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto idx = std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng);
    const Family f = random_family(*posets[idx], rng);
    const auto pairs = static_cast<long long>(pairs_in_common_chains(f, chain_of[idx]));
    const auto lower = static_cast<long long>(f.size()) - static_cast<long long>(chain_counts[idx]);
    if (pairs < lower) v.add({{"sample", s}, {"pairs", pairs}, {"lower", lower}});
  }
  return make_check("scd.pigeonhole", {{"seed", seed}, {"samples", samples}}, {{"violations", 0}},
                    {{"violations", v.to_json()}}, v.none());
}

Check verify_shadows(int n, int k) {
  const ChainProductPoset p(ChainProduct(n, k));
  const int big_r = p.rank();
  const long need = n / 2 + 1;
  const auto stride = static_cast<std::size_t>(big_r) + 1;
  std::vector<long> dcache(p.size() * stride, -1);
  auto d = [&](ElementId e, int a) {
    long& slot = dcache[e * stride + static_cast<std::size_t>(a)];
    if (slot < 0) slot = static_cast<long>(to_u64(delta(p.shape(), p.element(e), a)));
    return slot;
  };
  std::map<std::pair<int, int>, long> dmin_cache;
  auto dmin = [&](int b, int a) {
    auto it = dmin_cache.find({b, a});
    if (it == dmin_cache.end())
      it = dmin_cache.emplace(std::pair{b, a}, static_cast<long>(to_u64(delta_min(p.shape(), b, a)))).first;
    return it->second;
  };
  const ElementId bottom = 0;
  const auto top = static_cast<ElementId>(p.size() - 1);
  std::size_t pairs = 0;
  std::size_t bstar_checked = 0;
  long min_governing = -1;
  long min_rank_level = -1;
  Violations v;
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) {
      if (a == b || !p.leq(a, b) || (a == bottom && b == top)) continue;
      ++pairs;
      const int ra = p.rank_of(a);
      const int rb = p.rank_of(b);
      long governing = 0;
      long rank_level = 0;
      if (std::abs(2 * ra - big_r) <= std::abs(2 * rb - big_r)) {
        governing = d(b, ra);
        rank_level = dmin(rb, ra);
        if (2 * rb > big_r) {
          ++bstar_checked;
          const Element be = p.element(b);
          const Element star = bstar_reduce(p.shape(), be, ra);
          const ElementId sid = p.id_of(star);
          const bool below = p.leq(sid, b);
          const bool nonzero_kept = be.size() - static_cast<std::size_t>(be.count_of(0)) ==
                                    star.size() - static_cast<std::size_t>(star.count_of(0));
          const long ds = d(sid, ra);
          if (!below || !nonzero_kept || ds < need || governing < ds)
            v.add({{"check", "bstar"}, {"a", p.encode(a)}, {"b", p.encode(b)}, {"bstar", p.encode(sid)}});
        }
      } else {
        governing = d(p.complement_id(a), big_r - rb);
        rank_level = dmin(big_r - ra, big_r - rb);
      }
      if (min_governing < 0 || governing < min_governing) min_governing = governing;
      if (min_rank_level < 0 || rank_level < min_rank_level) min_rank_level = rank_level;
      if (governing < need || rank_level < need)
        v.add({{"check", "delta"}, {"a", p.encode(a)}, {"b", p.encode(b)}, {"delta", governing}, {"rank_level", rank_level}});
    }
  }
  return make_check("shadowsn2", {{"n", n}, {"k", k}}, {{"min_delta_at_least", need}, {"violations", 0}},
                    {{"pairs", pairs},
                     {"bstar_checked", bstar_checked},
                     {"min_delta", min_governing},
                     {"min_rank_level_delta", min_rank_level},
                     {"violations", v.to_json()}},
                    v.none());
}

Check verify_claimfuncond(int n) {
  const ChainProductPoset p(ChainProduct(n, 2));
  const auto nb = neighbor_formula_table(p);
  std::size_t tested = 0;
  Violations v;
  for (ElementId a = 0; a < p.size(); ++a) {
    const int ra = p.rank_of(a);
    if (ra < n) continue;
    for (ElementId b = 0; b < p.size(); ++b) {
      const int rb = p.rank_of(b);
      if (a == b || rb < n || !p.leq(b, a)) continue;
      for (int i = 1; i <= ra - rb; ++i) {
        ++tested;
        const auto& lhs = nb[b][static_cast<std::size_t>(rb + i)];
        const auto& rhs = nb[a][static_cast<std::size_t>(ra - i)];
        if (lhs > rhs)
          v.add({{"a", p.encode(a)}, {"b", p.encode(b)}, {"i", i}, {"lhs", big_json(lhs)}, {"rhs", big_json(rhs)}});
      }
    }
  }
  return make_check("claimfuncond", {{"n", n}}, {{"violations", 0}}, {{"inequalities", tested}, {"violations", v.to_json()}},
                    v.none());
}

Check verify_3compressclaim(int n) {
  const ChainProductPoset p(ChainProduct(n, 2));
  const auto nb = neighbor_formula_table(p);
  std::size_t tested = 0;
  Violations v;
  if (n + 2 <= 2 * n && n >= 1) {
    for (ElementId a : p.layer(n + 2)) {
      const int a0 = count_value(p.coords(a), 0);
      for (ElementId b : p.layer(n - 1)) {
        if (!p.leq(b, a) || count_value(p.coords(b), 0) == a0) continue;
        for (int i = 1; i <= 3; ++i) {
          ++tested;
          const auto& lhs = nb[b][static_cast<std::size_t>(n - 1 + i)];
          const auto& rhs = nb[a][static_cast<std::size_t>(n + 2 - i)];
          if (lhs > rhs)
            v.add({{"a", p.encode(a)}, {"b", p.encode(b)}, {"i", i}, {"lhs", big_json(lhs)}, {"rhs", big_json(rhs)}});
        }
      }
    }
  }
  return make_check("3compressclaim", {{"n", n}}, {{"violations", 0}},
                    {{"inequalities", tested}, {"violations", v.to_json()}}, v.none());
}

Check verify_3compress_formulas(int n) {
  const ChainProductPoset p(ChainProduct(n, 2));
  const auto nb = neighbor_table(p);
  auto N = [&](ElementId e, int r) { return nb[e][static_cast<std::size_t>(r)]; };
  auto binom = [](long x, long y) { return static_cast<long>(to_u64(binomial(x, y))); };
  std::size_t alphas = 0;
  std::size_t betas = 0;
  std::size_t case1 = 0;
  std::size_t case2 = 0;
  Violations v;
  if (n >= 2) {
    for (ElementId a : p.layer(n + 2)) {
      const long a1 = count_value(p.coords(a), 1);
      const long a2 = count_value(p.coords(a), 2);
      const long al[3] = {a2 + a1, binom(a1 + a2, 2) + a2, binom(a1 + a2, 3) + a2 * (a1 + a2 - 1)};
      for (int i = 1; i <= 3; ++i) {
        ++alphas;
        if (al[i - 1] != N(a, n + 2 - i)) v.add({{"alpha", i}, {"a", p.encode(a)}});
      }
    }
    for (ElementId b : p.layer(n - 1)) {
      const long b0 = count_value(p.coords(b), 0);
      const long b1 = count_value(p.coords(b), 1);
      const long be[3] = {b0 + b1, binom(b0 + b1, 2) + b0, binom(b0 + b1, 3) + b0 * (b1 + b0 - 1)};
      for (int i = 1; i <= 3; ++i) {
        ++betas;
        if (be[i - 1] != N(b, n - 1 + i)) v.add({{"beta", i}, {"b", p.encode(b)}});
      }
    }
    for (ElementId a : p.layer(n + 2)) {
      const long a0 = count_value(p.coords(a), 0);
      const long a1 = count_value(p.coords(a), 1);
      const long a2 = count_value(p.coords(a), 2);
      for (ElementId b : p.layer(n - 1)) {
        const long b0 = count_value(p.coords(b), 0);
        const long b1 = count_value(p.coords(b), 1);
        const long b2 = count_value(p.coords(b), 2);
        if (!p.leq(b, a) || b0 == a0) continue;
        if (b2 == a2) {
          ++case1;
          const long d1 = N(a, n + 1) - N(b, n);
          const long d2 = N(a, n) - N(b, n + 1);
          const long d3 = N(a, n - 1) - N(b, n + 2);
          const long closed3 = b0 * b0 + 2 * b0 * b1 + b1 * b1 + b0 - b1 - 1;
          if (a1 != b1 + 3 || a2 != b0 - 1 || d1 != 2 || d2 != 2 * (b0 + b1) || d3 != closed3 || d3 < 0)
            v.add({{"case", 1}, {"a", p.encode(a)}, {"b", p.encode(b)}});
        } else if (b2 <= a2 - 1 && b0 >= a0 + 1) {
          ++case2;
          // some coordinate permutation of B^c lies below A
          std::vector<int> bc;
          std::vector<int> av;
          for (auto x : p.coords(b)) bc.push_back(2 - x);
          for (auto x : p.coords(a)) av.push_back(x);
          std::sort(bc.begin(), bc.end());
          std::sort(av.begin(), av.end());
          bool fits = true;
          for (std::size_t i = 0; i < bc.size(); ++i) fits = fits && bc[i] <= av[i];
          if (!fits) v.add({{"case", 2}, {"a", p.encode(a)}, {"b", p.encode(b)}});
        } else {
          v.add({{"case", "none"}, {"a", p.encode(a)}, {"b", p.encode(b)}});
        }
      }
    }
  }
  return make_check("3compressclaim.formulas", {{"n", n}}, {{"violations", 0}},
                    {{"alpha_checks", alphas},
                     {"beta_checks", betas},
                     {"case1_pairs", case1},
                     {"case2_pairs", case2},
                     {"violations", v.to_json()}},
                    v.none());
}

Check verify_averagethird(int n, bool enumerate) {
  const ChainProduct shape(n, 2);
  std::vector<BigCount> f;
  for (int c = 0; c <= n; ++c) f.push_back(averagethird_f(n, c));
  const BigCount sum = std::accumulate(f.begin(), f.end(), BigCount(0));
  const BigCount layer = layer_size(shape, n + 1);
  std::size_t ratios = 0;
  std::size_t boundary = 0;
  Violations v;
  for (int c = 0; c < n; ++c) {
    const long d1 = n - 2L * c - 2;
    const long d2 = n - 2L * c - 1;
    const auto cu = static_cast<std::size_t>(c);
    if (d1 <= 0 || d2 <= 0 || f[cu + 1] == 0) {
      ++boundary;
      continue;
    }
    ++ratios;
    // f(c) / f(c+1) = (c+1)(c+2) / (d1 d2), cross-multiplied
    if (f[cu] * d1 * d2 != f[cu + 1] * (c + 1) * (c + 2)) v.add({{"ratio", c}});
  }
  if (sum != layer) v.add({{"sum", big_json(sum)}, {"layer", big_json(layer)}});
  json counted = nullptr;
  if (enumerate) {
    const ChainProductPoset p(shape);
    std::vector<BigCount> by_zeros(static_cast<std::size_t>(n) + 1, 0);
    for (ElementId e : p.layer(n + 1)) by_zeros[static_cast<std::size_t>(count_value(p.coords(e), 0))] += 1;
    counted = json::array();
    for (int c = 0; c <= n; ++c) {
      counted.push_back(big_json(by_zeros[static_cast<std::size_t>(c)]));
      if (by_zeros[static_cast<std::size_t>(c)] != f[static_cast<std::size_t>(c)]) v.add({{"enumeration", c}});
    }
  }
  json fj = json::array();
  for (const auto& x : f) fj.push_back(big_json(x));
  return make_check("averagethird", {{"n", n}, {"enumerate", enumerate}}, {{"sum", big_json(layer)}, {"violations", 0}},
                    {{"f", fj},
                     {"sum", big_json(sum)},
                     {"ratio_checks", ratios},
                     {"boundary", boundary},
                     {"enumerated", counted},
                     {"violations", v.to_json()}},
                    v.none());
}

Check verify_number_nbrs(int n) {
  const ChainProductPoset p(ChainProduct(n, 2));
  auto binom = [](long x, long y) { return static_cast<long>(to_u64(binomial(x, y))); };
  std::size_t tested = 0;
  Violations v;
  for (int r = n + 2; r <= 2 * n; ++r) {
    for (ElementId a : p.layer(r)) {
      ++tested;
      const long a0 = count_value(p.coords(a), 0);
      const long a1 = count_value(p.coords(a), 1);
      const long a2 = count_value(p.coords(a), 2);
      long down[4] = {0, 0, 0, 0};
      long same_zeros = 0;
      for (ElementId b = 0; b < p.size(); ++b) {
        const int gap = r - p.rank_of(b);
        if (gap < 1 || gap > 3 || !p.leq(b, a)) continue;
        ++down[gap];
        if (gap == 3 && count_value(p.coords(b), 0) == a0) ++same_zeros;
      }
      const long s = a1 + a2;
      if (down[1] != s || down[2] != binom(s, 2) + a2 || down[3] != binom(s, 3) + a2 * (s - 1) ||
          same_zeros != binom(a2, 3))
        v.add({{"a", p.encode(a)}, {"down", {down[1], down[2], down[3]}}, {"same_zeros", same_zeros}});
    }
  }
  return make_check("number_nbrs", {{"n", n}}, {{"violations", 0}}, {{"elements", tested}, {"violations", v.to_json()}},
                    v.none());
}

std::vector<Check> verify_sec3(const std::vector<int>& ns, int workers) {
  std::vector<Check> out;
  json threshold = nullptr;
  json table = json::array();
  for (int n : ns) {
    const Sec3Report r = compare_sec3(n, workers);
    const json params = {{"n", n}};
    out.push_back(make_check("sec3.size_identity", params, big_json(r.expected_size), r.size,
                             BigCount(r.size) == r.expected_size));
    out.push_back(make_check("sec3.comp_x_lower_bound", params, {{"at_least", big_json(r.x_lower)}}, r.comp_x,
                             BigCount(r.comp_x) >= r.x_lower));
    out.push_back(make_check("sec3.comp_b_below_comp_x", params, {{"less_than", r.comp_x}}, r.comp_b,
                             r.comp_b < r.comp_x));
    // F + X - B with X < B: X gains its pairs, B loses its own and the pair (X, B)
    const long long predicted = static_cast<long long>(r.comp_f) - static_cast<long long>(r.comp_b) +
                                static_cast<long long>(r.comp_x) - (r.x_below_b ? 1 : 0);
    out.push_back(make_check("sec3.exchange_identity", params, predicted, r.comp_cc_star,
                             predicted == static_cast<long long>(r.comp_cc_star)));
    out.push_back(make_check("sec3.centered_min_consistent", params, {{"at_most", r.comp_cc_star}}, r.centered_upper,
                             r.centered_upper <= r.comp_cc_star));
    out.push_back(make_info("sec3.comp_vs_centered", params, {{"comp_f_below_centered_min", true}},
                            {{"comp_f", r.comp_f},
                             {"centered_min", r.centered_min},
                             {"centered_upper", r.centered_upper},
                             {"centered_lower", r.centered_lower},
                             {"comp_cc_star", r.comp_cc_star},
                             {"beats_centered", r.beats_centered()}}));
    table.push_back({{"n", n}, {"beats_centered", r.beats_centered()}});
    if (threshold.is_null() && r.beats_centered()) threshold = n;
  }
  out.push_back(make_info("sec3.threshold", {{"ns", ns}}, nullptr, {{"first_n", threshold}, {"per_n", table}}));
  return out;
}

std::vector<Check> verify_sec5(int n, int k, std::optional<int> j) {
  const int j_requested = j ? *j : static_cast<int>(2 * ceil_log2(n));
  const Sec5Construction s = build_family_sec5(n, k, j_requested, false);
  const Sec5Report r = delta_sums_sec5(s);
  const BigCount delta_b_full = r.delta_b + 1;  // l = 0 contributes B itself
  const json params = {{"n", n}, {"k", k}, {"j", s.j}, {"j_requested", j_requested}};
  std::vector<Check> out;
  out.push_back(make_check("sec5.delta_b_exceeds_binomial", params, {{"greater_than", big_json(r.binom_j_minus_1)}},
                           big_json(delta_b_full), delta_b_full > r.binom_j_minus_1));
  const int sign = r.comp_diff < 0 ? -1 : (r.comp_diff > 0 ? 1 : 0);
  out.push_back(make_info("sec5.comp_diff_sign", params, {{"sign", -1}},
                          {{"sign", sign},
                           {"comp_diff", big_json(r.comp_diff)},
                           {"delta_b", big_json(r.delta_b)},
                           {"delta_c", big_json(r.delta_c)},
                           {"b_below_c", r.b_below_c},
                           {"b", encode(ChainProduct(n, k), s.b)},
                           {"c", encode(ChainProduct(n, k), s.c)}}));
  return out;
}

Check verify_sec5_backends(int max_nk) {
  std::size_t instances = 0;
  Violations v;
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2; n * k <= max_nk; ++n) {
      if (ChainProduct(n, k).element_count() > 1000000) break;
      for (int j = 1; j <= std::min(6, n * k - 2); ++j) {
        std::optional<Sec5Construction> s;
        try {
          s.emplace(build_family_sec5(n, k, j, false));
        } catch (const std::domain_error&) {
          continue;
        }
        if (s->j != j) continue;
        ++instances;
        const Sec5Report fast = delta_sums_sec5(*s);
        const Sec5Report slow = delta_sums_sec5_enumerated(*s);
        if (fast.delta_b != slow.delta_b || fast.delta_c != slow.delta_c || fast.comp_diff != slow.comp_diff ||
            fast.b_below_c != slow.b_below_c)
          v.add({{"n", n}, {"k", k}, {"j", j}});
      }
    }
  }
  return make_check("sec5.backends_agree", {{"max_nk", max_nk}}, {{"mismatches", 0}},
                    {{"instances", instances}, {"mismatches", v.to_json()}}, v.none());
}

std::vector<Check> verify_lower_bounds(int n, int k, int workers) {
  const ChainProductPoset p(ChainProduct(n, k));
  const auto minima = exhaustive_all(p, workers);
  const auto lb = check_lower_bounds(p.shape(), minima);
  const json params = {{"n", n}, {"k", k}};
  std::vector<Check> out;
  {
    Violations v;
    json rows = json::array();
    for (const auto& row : lb.rows) {
      rows.push_back({row.t, row.min_comp, row.bound});
      if (!row.holds) v.add({{"t", row.t}, {"min_comp", row.min_comp}, {"bound", row.bound}});
    }
    out.push_back(make_check("largeresult_a", params, {{"per_extra_element", n / 2 + 1}, {"violations", 0}},
                             {{"rows_t_comp_bound", rows}, {"violations", v.to_json()}}, lb.holds()));
  }
  {
    Violations mono;
    Violations recount;
    for (std::size_t m = 1; m < minima.size(); ++m)
      if (minima[m].min_comp < minima[m - 1].min_comp) mono.add({{"m", m}});
    for (const auto& r : minima) {
      const Family w(p, r.witness);
      if (w.size() != r.m || comp_count_pairwise(w) != r.min_comp) recount.add({{"m", r.m}});
    }
    out.push_back(make_check("search.min_comp_monotone", params, {{"violations", 0}}, {{"violations", mono.to_json()}},
                             mono.none()));
    out.push_back(make_check("search.witness_recount", params, {{"violations", 0}}, {{"violations", recount.to_json()}},
                             recount.none()));
  }
  if (k == 2) {
    const ChainProduct shape(n, 2);
    const auto sigma1 = static_cast<std::size_t>(sigma(shape, 1));
    const auto sigma3 = static_cast<std::size_t>(sigma(shape, std::min(3, 2 * n + 1)));
    Violations cont;
    for (std::size_t m = sigma1 + 1; m <= sigma3 && m < minima.size(); ++m) {
      const Count diff = minima[m].min_comp - minima[m - 1].min_comp;
      if (4 * diff > static_cast<Count>(n) * static_cast<Count>(n)) cont.add({{"m", m}, {"increase", diff}});
    }
    out.push_back(make_info("continuouscomp", params, {{"max_increase_times_4", n * n}, {"m_range", {sigma1 + 1, sigma3}}},
                            {{"violations", cont.to_json()}}));
    Violations nss;
    std::size_t compared = 0;
    for (int r = 1; 3 * r - 1 <= 2 * n; ++r) {
      const auto base = static_cast<std::size_t>(sigma(shape, std::min(r, 2 * n + 1)));
      for (std::size_t m = base; m < minima.size(); ++m) {
        ++compared;
        const BigCount bound = nss_bound(shape, r, static_cast<long>(m - base));
        if (BigCount(minima[m].min_comp) < bound)
          nss.add({{"r", r}, {"m", m}, {"min_comp", minima[m].min_comp}, {"bound", big_json(bound)}});
      }
    }
    out.push_back(make_info("nss_bound", params, {{"violations", 0}}, {{"compared", compared}, {"violations", nss.to_json()}}));
  }
  return out;
}

std::vector<Check> verify_compression_props(std::uint64_t seed, std::size_t samples, int workers) {
  std::vector<std::unique_ptr<ChainProductPoset>> cubes;
  for (int n = 3; n <= 6; ++n) cubes.push_back(std::make_unique<ChainProductPoset>(ChainProduct(n, 2)));
  std::vector<std::unique_ptr<SubspacePoset>> lattices;
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}, {2, 4}})
    lattices.push_back(std::make_unique<SubspacePoset>(SubspaceLattice(q, n)));

  struct Stats {
    std::size_t families = 0;
    std::size_t steps = 0;
    Violations size;
    Violations comp;
    Violations order;
    Violations recount;
    Violations fixpoint;
    std::map<std::string, std::size_t> cases;
    int max_shrink = 0;
  };
  auto run = [&](const char* id, CompressKind kind, bool subspace, std::uint64_t salt) {
    std::mt19937_64 rng(seed ^ salt);
    Stats st;
    for (std::size_t s = 0; s < samples; ++s) {
      const GradedPoset& p = subspace
                                 ? static_cast<const GradedPoset&>(
                                       *lattices[std::uniform_int_distribution<std::size_t>(0, lattices.size() - 1)(rng)])
                                 : *cubes[std::uniform_int_distribution<std::size_t>(0, cubes.size() - 1)(rng)];
      const Family f = random_family(p, rng);
      std::vector<CompressStep> trace;
      const Family g = compress_to_fixpoint(f, kind, &trace, kind == CompressKind::Mid);
      ++st.families;
      for (const auto& step : trace) {
        ++st.steps;
        ++st.cases[step.case_label];
        st.max_shrink = std::max(st.max_shrink, step.shrink_iterations);
        if (step.family.size() != f.size()) st.size.add({{"sample", s}});
        if (step.comp_after > step.comp_before) st.comp.add({{"sample", s}, {"case", step.case_label}});
        const bool potential_down = step.potential_after < step.potential_before;
        const bool improves = kind == CompressKind::Mid
                                  ? step.comp_after < step.comp_before || (step.comp_after == step.comp_before && potential_down)
                                  : potential_down;
        if (!improves) st.order.add({{"sample", s}, {"case", step.case_label}});
      }
      if (!trace.empty() && comp_count(g, CompBackend::Auto, workers) != trace.back().comp_after)
        st.recount.add({{"sample", s}});
      if (g.size() != f.size()) st.size.add({{"sample", s}, {"final", true}});
      bool fix = true;
      switch (kind) {
        case CompressKind::Top:
          fix = is_top_compressed(g);
          break;
        case CompressKind::Bottom:
          fix = is_bottom_compressed(g);
          break;
        case CompressKind::Three:
          fix = is_top_compressed(g) && is_bottom_compressed(g) && three_compress_check(g).empty();
          break;
        case CompressKind::Mid:
          fix = is_mid_compressed(g);
          break;
      }
      if (!fix) st.fixpoint.add({{"sample", s}});
    }
    const bool ok = st.size.none() && st.comp.none() && st.order.none() && st.recount.none() && st.fixpoint.none();
    return make_check(id, {{"seed", seed}, {"samples", samples}},
                      {{"size_preserved", true},
                       {"comp_non_increasing", true},
                       {"order_decreasing", true},
                       {"fixpoint_predicate", true}},
                      {{"families", st.families},
                       {"steps", st.steps},
                       {"cases", st.cases},
                       {"max_shrink_iterations", st.max_shrink},
                       {"size_violations", st.size.to_json()},
                       {"comp_increases", st.comp.to_json()},
                       {"order_violations", st.order.to_json()},
                       {"recount_mismatches", st.recount.to_json()},
                       {"fixpoint_failures", st.fixpoint.to_json()}},
                      ok);
  };

  std::vector<Check> out;
  out.push_back(run("compression.top", CompressKind::Top, false, 0x746f70));
  out.push_back(run("compression.bottom", CompressKind::Bottom, false, 0x626f74));
  out.push_back(run("compression.three", CompressKind::Three, false, 0x746872));
  out.push_back(run("compression.mid", CompressKind::Mid, true, 0x6d6964));

  {
    const int n = 5;
    const int low = n - 3;
    const ChainProductPoset& p = *cubes[2];
    std::mt19937_64 rng(seed ^ 0x7069);
    Violations size;
    Violations comp;
    Violations idem;
    std::size_t changed = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      std::bernoulli_distribution pick(density);
      std::vector<ElementId> members;
      for (ElementId e = 0; e < p.size(); ++e) {
        const int r = p.rank_of(e);
        if ((r > low && r < 2 * n - low) || ((r == low || r == 2 * n - low) && pick(rng))) members.push_back(e);
      }
      const Family g(p, members);
      const auto pi = random_involution(n, rng);
      const Family h = pi_compress(g, pi, low);
      if (!(h == g)) ++changed;
      if (h.size() != g.size()) size.add({{"sample", s}});
      if (comp_count(h, CompBackend::Auto, workers) > comp_count(g, CompBackend::Auto, workers))
        comp.add({{"sample", s}, {"pi", pi}});
      if (!(pi_compress(h, pi, low) == h)) idem.add({{"sample", s}});
    }
    out.push_back(make_check("compression.pi", {{"seed", seed}, {"samples", samples}, {"n", n}, {"low_rank", low}},
                             {{"size_preserved", true}, {"comp_non_increasing", true}, {"idempotent", true}},
                             {{"changed", changed},
                              {"size_violations", size.to_json()},
                              {"comp_increases", comp.to_json()},
                              {"idempotence_failures", idem.to_json()}},
                             size.none() && comp.none() && idem.none()));
  }
  return out;
}

std::vector<Check> verify_oracle_consistency(std::uint64_t seed, std::size_t samples, std::size_t checkpoints,
                                             int workers) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  {
    std::map<int, std::unique_ptr<ChainProductPoset>> posets;
    Violations v;
    for (std::size_t s = 0; s < samples; ++s) {
      const int n = std::uniform_int_distribution<int>(1, 10)(rng);
      auto& slot = posets[n];
      if (!slot) slot = std::make_unique<ChainProductPoset>(ChainProduct(n, 2));
      const auto& p = *slot;
      const std::size_t cap = std::min<std::size_t>(p.size(), 1500);
      const auto m = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
      std::vector<ElementId> all(p.size());
      std::iota(all.begin(), all.end(), ElementId{0});
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(m);
      std::sort(all.begin(), all.end());
      const Family f(p, all);
      const Count pairwise = comp_count_pairwise(f);
      const Count transform = comp_count_transform(f, workers);
      const auto deg = comp_degrees(f, workers);
      Count twice = 0;
      for (ElementId e : all) twice += deg[e];
      if (pairwise != transform || twice != 2 * pairwise)
        v.add({{"sample", s}, {"n", n}, {"pairwise", pairwise}, {"transform", transform}, {"degree_sum", twice}});
    }
    out.push_back(make_check("oracle.comp_backends", {{"seed", seed}, {"samples", samples}}, {{"mismatches", 0}},
                             {{"mismatches", v.to_json()}}, v.none()));
  }
  {
    const int items = 20;
    kernels::SubsetProblem problem;
    problem.adjacency.assign(items, 0);
    problem.weight.assign(items, 0);
    std::bernoulli_distribution edge(0.3);
    for (int i = 0; i < items; ++i) {
      problem.weight[static_cast<std::size_t>(i)] = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
      for (int j = i + 1; j < items; ++j)
        if (edge(rng)) {
          problem.adjacency[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
          problem.adjacency[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
    }
    const std::uint64_t total = std::uint64_t{1} << items;
    const std::uint64_t stride = std::max<std::uint64_t>(1, total / std::max<std::size_t>(checkpoints, 1));
    const auto points = kernels::gray_checkpoints(problem, stride);
    Violations v;
    for (const auto& [mask, value] : points)
      if (kernels::subset_objective(problem, mask) != value) v.add({{"mask", mask}});
    const auto serial = kernels::subset_scan_serial(problem);
    const auto parallel = kernels::subset_scan_parallel(problem, workers);
    const bool scans_agree = serial.best == parallel.best && serial.witness == parallel.witness;
    out.push_back(make_check("oracle.gray_incremental", {{"seed", seed}, {"items", items}, {"checkpoints", checkpoints}},
                             {{"mismatches", 0}, {"min_checkpoints", checkpoints}, {"scans_agree", true}},
                             {{"checkpoints", points.size()}, {"mismatches", v.to_json()}, {"scans_agree", scans_agree}},
                             v.none() && points.size() >= checkpoints && scans_agree));
  }
  {
    Violations v;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {3, 4}, {5, 3}, {8, 1}, {2, 9}}) {
      const kernels::Grid grid{n, k};
      std::vector<std::uint8_t> ind(grid.size());
      std::bernoulli_distribution pick(0.4);
      for (auto& x : ind) x = pick(rng) ? 1 : 0;
      std::vector<std::uint32_t> a(ind.begin(), ind.end());
      auto b = a;
      auto c = a;
      auto d = a;
      kernels::down_zeta_serial(a, grid);
      kernels::down_zeta_parallel(b, grid, workers);
      kernels::up_zeta_serial(c, grid);
      kernels::up_zeta_parallel(d, grid, workers);
      const bool ok = a == b && c == d && kernels::degrees_serial(ind, grid) == kernels::degrees_parallel(ind, grid, workers) &&
                      kernels::comp_transform_serial(ind, grid) == kernels::comp_transform_parallel(ind, grid, workers);
      if (!ok) v.add({{"n", n}, {"k", k}});
    }
    out.push_back(make_check("oracle.parallel_kernels", {{"seed", seed}}, {{"mismatches", 0}},
                             {{"mismatches", v.to_json()}}, v.none()));
  }
  return out;
}

Check explore_counterexample(int n, int k, std::size_t m_lo, std::size_t m_hi, std::uint64_t budget,
                             std::uint64_t seed, int workers) {
  const ChainProductPoset p(ChainProduct(n, k));
  CenteredMinimizer centered(p, workers);
  m_hi = std::min(m_hi, p.size());
  json found = json::array();
  Violations recount;
  for (std::size_t m = std::max<std::size_t>(m_lo, 1); m <= m_hi; ++m) {
    const auto r = local_search_counterexample(p, m, budget, seed + m, centered);
    if (!r.beats_centered()) continue;
    const Family f(p, r.best);
    const Count exact = comp_count(f, CompBackend::Auto, workers);
    if (exact != r.best_comp || f.size() != m) recount.add({{"m", m}});
    json entry = {{"m", m}, {"found_comp", exact}, {"centered_min", r.centered_min}};
    if (found.empty()) {
      json members = json::array();
      for (ElementId e : r.best) members.push_back(p.encode(e));
      entry["members"] = members;
    }
    found.push_back(std::move(entry));
  }
  return make_info("counterexample_search",
                   {{"poset", chain_name(n, k)}, {"m_range", {m_lo, m_hi}}, {"budget", budget}, {"seed", seed}},
                   {{"found_below_centered_min", true}},
                   {{"success", !found.empty()}, {"found", found}, {"recount_mismatches", recount.to_json()}});
}

}  // namespace cpairs
