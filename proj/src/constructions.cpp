#include "cpairs/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cpairs/errors.hpp"

namespace cpairs {

namespace {

constexpr std::size_t kMaxScdElements = 1000000;

int count_value(std::span<const std::uint8_t> coords, int v) {
  int c = 0;
  for (auto x : coords) c += x == v;
  return c;
}

BigCount below_count_at(const Element& d, int k, int r) {
  // subsets of D at rank r: coefficient of x^r in prod (1 + ... + x^{d_i})
  std::vector<int> mult(static_cast<std::size_t>(k) + 1, 0);
  for (int v : d.coords()) ++mult[static_cast<std::size_t>(v)];
  Poly acc{1};
  const auto cap = static_cast<std::size_t>(std::max(r, 0));
  for (int v = 1; v <= k; ++v)
    if (mult[static_cast<std::size_t>(v)] > 0)
      acc = poly_mul(acc, poly_pow(chain_poly(v), static_cast<unsigned>(mult[static_cast<std::size_t>(v)]), cap), cap);
  return coefficient(acc, r);
}

}  // namespace

SCD build_scd(const ChainProduct& p) {
  if (p.element_count() > kMaxScdElements) throw CapacityError("SCD construction is limited to 10^6 elements");
  const int k = p.k();
  std::vector<std::vector<std::vector<int>>> chains;
  {
    std::vector<std::vector<int>> base;
    for (int v = 0; v <= k; ++v) base.push_back({v});
    chains.push_back(std::move(base));
  }
  for (int dim = 2; dim <= p.n(); ++dim) {
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& chain : chains) {
      const int len = static_cast<int>(chain.size()) - 1;
      for (int t = 0; t <= std::min(len, k); ++t) {
        std::vector<std::vector<int>> hook;
        for (int v = 0; v <= k - t; ++v) {
          auto e = chain[static_cast<std::size_t>(t)];
          e.push_back(v);
          hook.push_back(std::move(e));
        }
        for (int i = t + 1; i <= len; ++i) {
          auto e = chain[static_cast<std::size_t>(i)];
          e.push_back(k - t);
          hook.push_back(std::move(e));
        }
        next.push_back(std::move(hook));
      }
    }
    chains = std::move(next);
  }
  SCD out;
  for (auto& chain : chains) {
    std::vector<Element> elems;
    for (auto& v : chain) elems.emplace_back(p, std::move(v));
    out.chains.push_back(std::move(elems));
  }
  return out;
}

SCDCheck check_scd(const ChainProduct& p, const SCD& scd) {
  SCDCheck r;
  r.chains = scd.chains.size();
  const ChainProductPoset poset(p);
  std::vector<int> seen(poset.size(), 0);
  for (const auto& chain : scd.chains) {
    if (chain.empty()) {
      r.saturated = false;
      continue;
    }
    for (const auto& e : chain) ++seen[poset.id_of(e)];
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (chain[i].rank() != chain[i - 1].rank() + 1 || compare(chain[i - 1], chain[i]) != Order::Less)
        r.saturated = false;
    if (chain.front().rank() + chain.back().rank() != p.rank()) r.symmetric = false;
  }
  r.partition = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  r.chain_count = BigCount(r.chains) == layer_size(p, p.rank() / 2);
  return r;
}

std::vector<std::size_t> scd_chain_of(const ChainProductPoset& p, const SCD& scd) {
  std::vector<std::size_t> out(p.size(), 0);
  for (std::size_t c = 0; c < scd.chains.size(); ++c)
    for (const auto& e : scd.chains[c]) out[p.id_of(e)] = c;
  return out;
}

Count pairs_in_common_chains(const Family& f, const std::vector<std::size_t>& chain_of) {
  std::vector<Count> per_chain;
  for (ElementId e : f.members()) {
    const std::size_t c = chain_of[e];
    if (c >= per_chain.size()) per_chain.resize(c + 1, 0);
    ++per_chain[c];
  }
  Count total = 0;
  for (Count m : per_chain) total += m * (m - (m > 0 ? 1 : 0)) / 2;
  return total;
}

ElementId sec3_x(const ChainProductPoset& p) {
  const int n = p.shape().n();
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  v[0] = v[1] = 0;
  return p.id_of(Element(p.shape(), v));
}

ElementId sec3_b(const ChainProductPoset& p) {
  const int n = p.shape().n();
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  v[0] = 0;
  for (int i = 1; i <= 4; ++i) v[static_cast<std::size_t>(i)] = 2;
  return p.id_of(Element(p.shape(), v));
}

Family build_family_sec3(const ChainProductPoset& p) {
  const int n = p.shape().n();
  if (p.shape().k() != 2) throw std::domain_error("the sec3 family lives in {0,1,2}^n");
  if (n < 6) throw std::domain_error("the sec3 family needs n >= 6");
  const ElementId x = sec3_x(p);
  std::vector<ElementId> members;
  for (int r = n - 2; r <= n + 3; ++r)
    for (ElementId e : p.layer(r)) {
      if (e == x) continue;
      if (r == n + 3 && count_value(p.coords(e), 0) == 0) continue;
      members.push_back(e);
    }
  return Family(p, members);
}

Sec3Report compare_sec3(int n, int workers) {
  const ChainProductPoset p(ChainProduct(n, 2));
  const Family f = build_family_sec3(p);
  Sec3Report r;
  r.n = n;
  r.size = f.size();
  r.removed_top = p.layer_size(n + 3) - f.layer_count(n + 3);
  r.expected_size = sigma(p.shape(), 6) - binomial(n, 3) - 1;
  r.comp_f = comp_count(f, CompBackend::Transform, workers);
  const auto deg = comp_degrees(f, workers);
  const ElementId x = sec3_x(p);
  const ElementId b = sec3_b(p);
  r.comp_x = deg[x];
  r.comp_b = deg[b];
  r.x_lower = binomial(n, 5) + binomial(n, 4);
  r.x_below_b = p.leq(x, b);

  const BigCount s_big = BigCount(p.layer_size(n + 3)) - binomial(n, 3) - 1;
  const auto s = static_cast<std::size_t>(s_big);
  const LayerWindow window{n - 2, n + 2};
  r.centered_upper = min_comp_one_partial_layer(p, window, n + 3, s, workers).comp;
  r.centered_lower = min_comp_one_partial_layer(p, window, n - 3, s, workers).comp;
  r.centered_min = std::min(r.centered_upper, r.centered_lower);

  const std::vector<ElementId> add{x};
  const std::vector<ElementId> remove{b};
  r.comp_cc_star = comp_count(f.exchange(remove, add), CompBackend::Transform, workers);
  return r;
}

Sec5Construction build_family_sec5(int n, int k, int j, bool strict) {
  const ChainProduct p(n, k);
  if (j < 1) throw std::domain_error("sec5: j must be positive");
  if ((n * k + j) % 2 != 0) {
    if (strict) throw std::domain_error("sec5: nk + j must be even");
    ++j;
  }
  if (j >= n * k) throw std::domain_error("sec5: j must be below nk");
  const LayerWindow window = middle_window(n * k, j);
  const int rb = window.hi;
  const int rc = window.hi + 1;
  const int f = k / 2;
  const int high = rb - n * f;  // coordinates equal to f + 1
  if (high < 0 || high > n || f + 1 > k) throw std::domain_error("sec5: no element B with the required profile");
  std::vector<int> bv(static_cast<std::size_t>(n), f);
  for (int i = n - high; i < n; ++i) bv[static_cast<std::size_t>(i)] = f + 1;
  const int full = rc / k;
  const int residual = rc % k;
  const int used = full + (residual > 0 ? 1 : 0);
  if (used > n) throw std::domain_error("sec5: no element C with the required profile");
  std::vector<int> cv(static_cast<std::size_t>(n), 0);
  int pos = n - full;
  for (int i = pos; i < n; ++i) cv[static_cast<std::size_t>(i)] = k;
  if (residual > 0) cv[static_cast<std::size_t>(pos - 1)] = residual;
  return {n, k, j, window, Element(p, bv), Element(p, cv)};
}

Sec5Report delta_sums_sec5(const Sec5Construction& s) {
  Sec5Report r(s);
  for (int l = 1; l <= s.j - 1; ++l) r.delta_b += below_count_at(s.b, s.k, s.b.rank() - l);
  for (int l = 1; l <= s.j; ++l) r.delta_c += below_count_at(s.c, s.k, s.c.rank() - l);
  r.b_below_c = compare(s.b, s.c) == Order::Less;
  r.comp_diff = r.delta_c - (r.b_below_c ? 1 : 0) - r.delta_b;
  r.binom_j_minus_1 = binomial(s.n, s.j - 1);
  r.zeros_in_c = s.c.count_of(0);
  return r;
}

Sec5Report delta_sums_sec5_enumerated(const Sec5Construction& s) {
  const ChainProductPoset p(ChainProduct(s.n, s.k));
  Sec5Report r(s);
  const ElementId b = p.id_of(s.b);
  const ElementId c = p.id_of(s.c);
  std::vector<ElementId> window;
  for (int rk = s.window.lo; rk <= s.window.hi; ++rk) window.insert(window.end(), p.layer(rk).begin(), p.layer(rk).end());
  for (ElementId a : window) {
    if (a != b && p.leq(a, b)) r.delta_b += 1;
    if (p.leq(a, c)) r.delta_c += 1;
  }
  r.b_below_c = p.leq(b, c);
  const Family f(p, window);
  const std::vector<ElementId> remove{b};
  const std::vector<ElementId> add{c};
  const Family f2 = f.exchange(remove, add);
  r.comp_diff = BigCount(comp_count(f2)) - BigCount(comp_count(f));
  r.binom_j_minus_1 = binomial(s.n, s.j - 1);
  r.zeros_in_c = s.c.count_of(0);
  return r;
}

BigCount averagethird_f(int n, int c) { return binomial(n, c) * binomial(n - c, c + 1); }

}  // namespace cpairs
