#include "cpairs/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cpairs/errors.hpp"

namespace cpairs {

namespace {

std::vector<ElementId> mask_members(const std::vector<ElementId>& items, std::uint64_t mask) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(items[i]);
  std::sort(out.begin(), out.end());
  return out;
}

kernels::SubsetProblem comparability_problem(const GradedPoset& p, const std::vector<ElementId>& items) {
  kernels::SubsetProblem prob;
  prob.adjacency.assign(items.size(), 0);
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j)
      if (i != j && p.comparable(items[i], items[j])) prob.adjacency[i] |= std::uint64_t{1} << j;
  return prob;
}

kernels::SubsetScanResult run_scan(const kernels::SubsetProblem& prob, int workers) {
  if (workers > 1) return kernels::subset_scan_parallel(prob, workers);
  return kernels::subset_scan_serial(prob);
}

}  // namespace

CenteredMinimizer::CenteredMinimizer(const GradedPoset& p, int workers) : p_(&p), workers_(std::max(1, workers)) {
  for (const auto& cls : distance_classes(p)) {
    std::vector<ElementId> ids;
    for (int r : cls) ids.insert(ids.end(), p.layer(r).begin(), p.layer(r).end());
    std::sort(ids.begin(), ids.end());
    classes_.push_back(std::move(ids));
  }
}

const CenteredMinimizer::ClassTable& CenteredMinimizer::table(std::size_t c, bool need_scan) {
  auto it = cache_.find(c);
  if (it == cache_.end()) {
    ClassTable t;
    for (std::size_t i = 0; i < c; ++i) t.core.insert(t.core.end(), classes_[i].begin(), classes_[i].end());
    std::sort(t.core.begin(), t.core.end());
    t.items = classes_[c];
    t.core_comp = comp_count(Family(*p_, t.core), CompBackend::Auto, workers_);
    it = cache_.emplace(c, std::move(t)).first;
  }
  ClassTable& t = it->second;
  if (!need_scan || !t.scan.best.empty()) return t;
  const auto deg = comp_degrees(Family(*p_, t.core), workers_);
  const int first_rank = p_->rank_of(t.items.front());
  const bool antichain = std::all_of(t.items.begin(), t.items.end(),
                                     [&](ElementId e) { return p_->rank_of(e) == first_rank; });
  if (antichain) {
    t.order.resize(t.items.size());
    std::iota(t.order.begin(), t.order.end(), 0);
    std::stable_sort(t.order.begin(), t.order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[t.items[a]] < deg[t.items[b]]; });
    t.scan.best.assign(t.items.size() + 1, 0);
    for (std::size_t s = 1; s <= t.items.size(); ++s)
      t.scan.best[s] = t.scan.best[s - 1] + deg[t.items[t.order[s - 1]]];
    return t;
  }
  if (t.items.size() > static_cast<std::size_t>(kernels::kMaxScanItems))
    throw CapacityError("centered minimum: boundary class has more than 32 elements");
  auto prob = comparability_problem(*p_, t.items);
  prob.weight.resize(t.items.size());
  for (std::size_t i = 0; i < t.items.size(); ++i) prob.weight[i] = deg[t.items[i]];
  t.scan = run_scan(prob, workers_);
  return t;
}

CenteredMinimizer::Result CenteredMinimizer::minimum(std::size_t m) {
  if (m > p_->size()) throw std::domain_error("centered minimum: M exceeds the poset size");
  std::size_t core = 0;
  std::size_t c = 0;
  while (c < classes_.size() && core + classes_[c].size() <= m) core += classes_[c++].size();
  Result r;
  if (c == classes_.size()) {
    r.members.resize(p_->size());
    std::iota(r.members.begin(), r.members.end(), 0);
    r.comp = comp_count(Family(*p_, r.members), CompBackend::Auto, workers_);
    return r;
  }
  const std::size_t s = m - core;
  const auto& t = table(c, s > 0);
  r.comp = t.core_comp;
  r.members = t.core;
  if (s > 0) {
    r.comp += static_cast<Count>(t.scan.best[s]);
    if (!t.order.empty()) {
      for (std::size_t i = 0; i < s; ++i) r.members.push_back(t.items[t.order[i]]);
    } else {
      const auto extra = mask_members(t.items, t.scan.witness[s]);
      r.members.insert(r.members.end(), extra.begin(), extra.end());
    }
    std::sort(r.members.begin(), r.members.end());
  }
  return r;
}

std::vector<OptimalityReport> exhaustive_all(const GradedPoset& p, int workers) {
  if (p.size() > kMaxExhaustiveElements) throw CapacityError("exhaustive search needs at most 32 elements");
  std::vector<ElementId> items(p.size());
  std::iota(items.begin(), items.end(), 0);
  std::stable_sort(items.begin(), items.end(), [&](ElementId a, ElementId b) { return p.encode(a) < p.encode(b); });
  const auto scan = run_scan(comparability_problem(p, items), workers);
  CenteredMinimizer centered(p, workers);
  std::vector<OptimalityReport> out;
  for (std::size_t m = 0; m <= p.size(); ++m) {
    OptimalityReport r;
    r.m = m;
    r.min_comp = static_cast<Count>(scan.best[m]);
    r.witness = mask_members(items, scan.witness[m]);
    const auto c = centered.minimum(m);
    r.centered_min_comp = c.comp;
    r.centered_witness = c.members;
    r.centered_achieves = r.min_comp == r.centered_min_comp;
    out.push_back(std::move(r));
  }
  return out;
}

OptimalityReport exhaustive_min_comp(const GradedPoset& p, std::size_t m, int workers) {
  if (m > p.size()) throw std::domain_error("exhaustive_min_comp: M exceeds the poset size");
  return exhaustive_all(p, workers)[m];
}

bool CenterednessReport::holds() const {
  return std::all_of(per_m.begin(), per_m.end(), [](const OptimalityReport& r) { return r.centered_achieves; });
}

CenterednessReport verify_centeredness_property(const GradedPoset& p, int workers) {
  return {exhaustive_all(p, workers)};
}

LocalSearchResult local_search_counterexample(const ChainProductPoset& p, std::size_t m, std::uint64_t budget,
                                              std::uint64_t seed, CenteredMinimizer& centered) {
  const auto start = centered.minimum(m);
  LocalSearchResult res;
  res.best = start.members;
  res.best_comp = start.comp;
  res.centered_min = start.comp;
  if (budget == 0 || m == 0 || m == p.size()) return res;

  const std::size_t n = p.size();
  std::vector<std::vector<ElementId>> nbrs(n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (p.comparable(a, b)) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
      }

  std::vector<char> in(n, 0);
  std::vector<ElementId> members;
  std::vector<ElementId> outside;
  std::vector<std::size_t> pos(n);
  std::vector<std::int64_t> deg(n, 0);
  auto load = [&](const std::vector<ElementId>& set) {
    std::fill(in.begin(), in.end(), 0);
    for (ElementId e : set) in[e] = 1;
    members.clear();
    outside.clear();
    for (ElementId e = 0; e < n; ++e) {
      auto& list = in[e] ? members : outside;
      pos[e] = list.size();
      list.push_back(e);
    }
    for (ElementId e = 0; e < n; ++e) {
      deg[e] = 0;
      for (ElementId z : nbrs[e]) deg[e] += in[z];
    }
  };
  load(res.best);
  std::int64_t cur = static_cast<std::int64_t>(res.best_comp);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int phases = 4;
  const std::uint64_t per_phase = std::max<std::uint64_t>(1, budget / phases);
  const double t_hot = 2.0;
  const double t_cold = 0.02;
  for (std::uint64_t step = 0; step < budget; ++step) {
    const std::uint64_t local = step % per_phase;
    if (local == 0 && step > 0) {
      load(res.best);
      cur = static_cast<std::int64_t>(res.best_comp);
    }
    const double temp = t_hot * std::pow(t_cold / t_hot, static_cast<double>(local) / static_cast<double>(per_phase));
    const ElementId x = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
    const ElementId y = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
    const bool xy = p.comparable(x, y);
    const std::int64_t delta = deg[y] - (xy ? 1 : 0) - deg[x];
    if (delta > 0 && unit(rng) >= std::exp(-static_cast<double>(delta) / temp)) continue;
    // swap x out, y in
    for (ElementId z : nbrs[x]) --deg[z];
    for (ElementId z : nbrs[y]) ++deg[z];
    in[x] = 0;
    in[y] = 1;
    members[pos[x]] = y;
    outside[pos[y]] = x;
    std::swap(pos[x], pos[y]);
    cur += delta;
    ++res.steps;
    if (cur < static_cast<std::int64_t>(res.best_comp)) {
      res.best_comp = static_cast<Count>(cur);
      res.best = members;
      std::sort(res.best.begin(), res.best.end());
    }
  }
  return res;
}

bool LowerBoundReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const LowerBoundRow& r) { return r.holds; });
}

LowerBoundReport check_lower_bounds(const ChainProduct& shape, const std::vector<OptimalityReport>& minima) {
  const auto sizes = layer_sizes(shape);
  const auto sigma1 = static_cast<std::size_t>(*std::max_element(sizes.begin(), sizes.end()));
  LowerBoundReport rep;
  rep.n = shape.n();
  rep.k = shape.k();
  const long per = shape.n() / 2 + 1;
  for (std::size_t m = sigma1; m < minima.size(); ++m) {
    LowerBoundRow row;
    row.t = static_cast<long>(m - sigma1);
    row.min_comp = minima[m].min_comp;
    row.bound = static_cast<long long>(row.t) * per;
    row.holds = static_cast<long long>(row.min_comp) >= row.bound;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace cpairs
