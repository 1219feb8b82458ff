#include "cpairs/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cpairs/kernels.hpp"

namespace cpairs {

namespace {

const ChainProductPoset* as_chain(const GradedPoset& p) { return dynamic_cast<const ChainProductPoset*>(&p); }

kernels::Grid grid_of(const ChainProductPoset& p) { return {p.shape().n(), p.shape().k()}; }

}  // namespace

Family::Family(const GradedPoset& poset)
    : poset_(&poset), in_(poset.size(), 0), per_layer_(static_cast<std::size_t>(poset.rank()) + 1, 0) {}

Family::Family(const GradedPoset& poset, std::span<const ElementId> members) : Family(poset) {
  for (ElementId e : members) {
    if (e >= poset.size()) throw std::domain_error("family member outside the poset");
    set(e, true);
  }
}

void Family::set(ElementId e, bool value) {
  if (static_cast<bool>(in_[e]) == value) return;
  in_[e] = value ? 1 : 0;
  auto& cnt = per_layer_[static_cast<std::size_t>(poset_->rank_of(e))];
  if (value) {
    ++cnt;
    ++size_;
  } else {
    --cnt;
    --size_;
  }
}

std::vector<ElementId> Family::members() const {
  std::vector<ElementId> out;
  out.reserve(size_);
  for (ElementId e = 0; e < in_.size(); ++e)
    if (in_[e]) out.push_back(e);
  return out;
}

std::vector<ElementId> Family::layer_members(int r) const {
  std::vector<ElementId> out;
  for (ElementId e : poset_->layer(r))
    if (in_[e]) out.push_back(e);
  return out;
}

std::size_t Family::layer_count(int r) const {
  if (r < 0 || r >= static_cast<int>(per_layer_.size())) return 0;
  return per_layer_[static_cast<std::size_t>(r)];
}

Family Family::exchange(std::span<const ElementId> removed, std::span<const ElementId> added) const {
  Family out = *this;
  for (ElementId e : removed) {
    if (!out.contains(e)) throw std::domain_error("exchange: removing a non-member");
    out.set(e, false);
  }
  for (ElementId e : added) {
    if (out.contains(e)) throw std::domain_error("exchange: adding a member");
    out.set(e, true);
  }
  return out;
}

Count comp_count_pairwise(const Family& f) {
  const auto& p = f.poset();
  const auto mem = f.members();
  Count total = 0;
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (p.comparable(mem[i], mem[j])) ++total;
  return total;
}

Count comp_count_transform(const Family& f, int workers) {
  const auto* cp = as_chain(f.poset());
  if (cp == nullptr) throw std::domain_error("transform backend needs a chain product");
  if (workers <= 1) return kernels::comp_transform_serial(f.indicator(), grid_of(*cp));
  return kernels::comp_transform_parallel(f.indicator(), grid_of(*cp), workers);
}

Count comp_count(const Family& f, CompBackend backend, int workers) {
  switch (backend) {
    case CompBackend::Pairwise:
      return comp_count_pairwise(f);
    case CompBackend::Transform:
      return comp_count_transform(f, workers);
    case CompBackend::Auto:
      break;
  }
  return as_chain(f.poset()) != nullptr ? comp_count_transform(f, workers) : comp_count_pairwise(f);
}

Count comp_of_element(ElementId e, const Family& f) {
  const auto& p = f.poset();
  Count c = 0;
  for (ElementId x = 0; x < p.size(); ++x)
    if (f.contains(x) && p.comparable(e, x)) ++c;
  return c;
}

std::vector<std::uint32_t> comp_degrees(const Family& f, int workers) {
  if (const auto* cp = as_chain(f.poset())) {
    if (workers <= 1) return kernels::degrees_serial(f.indicator(), grid_of(*cp));
    return kernels::degrees_parallel(f.indicator(), grid_of(*cp), workers);
  }
  const auto& p = f.poset();
  const auto mem = f.members();
  std::vector<std::uint32_t> deg(p.size(), 0);
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId m : mem)
      if (p.comparable(x, m)) ++deg[x];
  return deg;
}

CompReport comp_report(const Family& f, int workers) {
  CompReport r;
  const auto deg = comp_degrees(f, workers);
  Count sum = 0;
  for (ElementId e : f.members()) {
    r.degrees.emplace_back(e, deg[e]);
    sum += deg[e];
  }
  r.total_pairs = sum / 2;
  return r;
}

long long twice_potential(const Family& f) {
  long long total = 0;
  for (int r = 0; r <= f.poset().rank(); ++r)
    total += static_cast<long long>(f.layer_count(r)) * f.poset().twice_distance_of_rank(r);
  return total;
}

std::vector<std::vector<int>> distance_classes(const GradedPoset& p) {
  std::vector<std::vector<int>> classes;
  const int rank = p.rank();
  for (int d2 = 0; d2 <= rank; ++d2) {
    std::vector<int> ranks;
    // higher rank first
    if ((rank + d2) % 2 == 0) {
      const int hi = (rank + d2) / 2;
      const int lo = (rank - d2) / 2;
      ranks.push_back(hi);
      if (lo != hi) ranks.push_back(lo);
    }
    if (!ranks.empty()) classes.push_back(std::move(ranks));
  }
  return classes;
}

Family build_centered(const GradedPoset& p, std::size_t m, FillOrder order) {
  if (m > p.size()) throw std::domain_error("build_centered: M exceeds the poset size");
  std::vector<ElementId> chosen;
  std::size_t remaining = m;
  for (const auto& cls : distance_classes(p)) {
    std::vector<ElementId> pool;
    for (int r : cls) pool.insert(pool.end(), p.layer(r).begin(), p.layer(r).end());
    if (pool.size() <= remaining) {
      chosen.insert(chosen.end(), pool.begin(), pool.end());
      remaining -= pool.size();
      continue;
    }
    if (remaining == 0) break;
    if (order == FillOrder::Lexicographic) {
      chosen.insert(chosen.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(remaining));
    } else {
      const Family core(p, chosen);
      const auto core_deg = comp_degrees(core);
      std::vector<std::uint32_t> deg(pool.size());
      for (std::size_t i = 0; i < pool.size(); ++i) deg[i] = core_deg[pool[i]];
      std::vector<bool> taken(pool.size(), false);
      for (std::size_t step = 0; step < remaining; ++step) {
        std::size_t best = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (!taken[i] && (best == pool.size() || deg[i] < deg[best])) best = i;
        taken[best] = true;
        chosen.push_back(pool[best]);
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (!taken[i] && p.comparable(pool[i], pool[best])) ++deg[i];
      }
    }
    remaining = 0;
    break;
  }
  return Family(p, chosen);
}

bool is_centered(const Family& f) {
  const auto& p = f.poset();
  int max_in = -1;
  int min_out = p.rank() + 1;
  for (int r = 0; r <= p.rank(); ++r) {
    const std::size_t have = f.layer_count(r);
    const int d = p.twice_distance_of_rank(r);
    if (have > 0) max_in = std::max(max_in, d);
    if (have < p.layer_size(r)) min_out = std::min(min_out, d);
  }
  return max_in <= min_out;
}

bool is_canonical_centered(const Family& f) {
  if (!is_centered(f)) return false;
  int partial = 0;
  for (int r = 0; r <= f.poset().rank(); ++r) {
    const std::size_t have = f.layer_count(r);
    if (have > 0 && have < f.poset().layer_size(r)) ++partial;
  }
  return partial <= 1;
}

PartialLayerMinimum min_comp_one_partial_layer(const ChainProductPoset& p, LayerWindow window, int partial_rank,
                                               std::size_t s, int workers) {
  if (window.lo < 0 || window.hi > p.rank() || window.width() == 0)
    throw std::domain_error("min_comp_one_partial_layer: bad window");
  if (partial_rank != window.hi + 1 && partial_rank != window.lo - 1)
    throw std::domain_error("min_comp_one_partial_layer: partial layer must be adjacent to the window");
  if (partial_rank < 0 || partial_rank > p.rank()) throw std::domain_error("partial layer outside the poset");
  const auto layer = p.layer(partial_rank);
  if (s > layer.size()) throw std::domain_error("min_comp_one_partial_layer: s exceeds the layer size");
  std::vector<ElementId> base;
  for (int r = window.lo; r <= window.hi; ++r) base.insert(base.end(), p.layer(r).begin(), p.layer(r).end());
  const Family win(p, base);
  const Count base_comp = comp_count_transform(win, workers);
  const auto deg = comp_degrees(win, workers);
  std::vector<ElementId> order(layer.begin(), layer.end());
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) { return deg[a] < deg[b]; });
  Count total = base_comp;
  for (std::size_t i = 0; i < s; ++i) {
    total += deg[order[i]];
    base.push_back(order[i]);
  }
  return {total, Family(p, base)};
}

BigCount nss_bound(const ChainProduct& p, int r, long t) {
  if (p.k() != 2) throw std::domain_error("nss_bound is defined for k = 2");
  if (r < 1 || 3 * r - 1 > p.rank()) throw std::domain_error("nss_bound: layer index out of range");
  const auto sizes = layer_sizes(p);
  const BigCount& num = sizes[static_cast<std::size_t>(3 * r - 1)];
  const BigCount& den = sizes[static_cast<std::size_t>(2 * r - 1)];
  if (den == 0) throw std::domain_error("nss_bound: degenerate layer");
  return floor_div((num - den) * t, den);
}

nlohmann::json family_to_json(const Family& f) {
  nlohmann::json members = nlohmann::json::array();
  for (ElementId e : f.members()) members.push_back(f.poset().encode(e));
  return {{"poset", f.poset().descriptor()}, {"members", members}};
}

Family family_from_json(const GradedPoset& p, const nlohmann::json& j) {
  if (j.at("poset") != p.descriptor()) throw std::domain_error("family poset descriptor does not match");
  std::vector<ElementId> ids;
  for (const auto& m : j.at("members")) ids.push_back(p.decode(m.get<std::string>()));
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw std::domain_error("family lists a member twice");
  return Family(p, ids);
}

}  // namespace cpairs
