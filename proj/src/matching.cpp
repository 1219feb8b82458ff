#include "cpairs/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace cpairs {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

std::vector<int> complement_of(int size, const std::vector<int>& set) {
  std::vector<char> in(static_cast<std::size_t>(size), 0);
  for (int v : set) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int v = 0; v < size; ++v)
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<int> iota_vec(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

/// Left vertices reachable by alternating paths from unmatched left vertices.
std::vector<int> koenig_left(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> seen_l(static_cast<std::size_t>(g.left), 0);
  std::vector<char> seen_r(static_cast<std::size_t>(g.right), 0);
  std::queue<int> q;
  for (int u = 0; u < g.left; ++u)
    if (m.mate_left[static_cast<std::size_t>(u)] < 0) {
      seen_l[static_cast<std::size_t>(u)] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (seen_r[static_cast<std::size_t>(v)]) continue;
      seen_r[static_cast<std::size_t>(v)] = 1;
      const int w = m.mate_right[static_cast<std::size_t>(v)];
      if (w >= 0 && !seen_l[static_cast<std::size_t>(w)]) {
        seen_l[static_cast<std::size_t>(w)] = 1;
        q.push(w);
      }
    }
  }
  std::vector<int> out;
  for (int u = 0; u < g.left; ++u)
    if (seen_l[static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

int deficiency(const BipartiteGraph& g, const std::vector<int>& set) {
  return static_cast<int>(set.size()) - static_cast<int>(neighborhood(g, Side::Left, set).size());
}

std::vector<int> inclusion_maximal_violator(const BipartiteGraph& g, std::vector<int> current) {
  std::vector<char> in(static_cast<std::size_t>(g.left), 0);
  for (int u : current) in[static_cast<std::size_t>(u)] = 1;
  for (int v = 0; v < g.left; ++v) {
    if (in[static_cast<std::size_t>(v)]) continue;
    std::vector<int> trial = current;
    trial.push_back(v);
    const int base = deficiency(g, trial);
    // best extension of trial: max-deficiency set of the residual graph
    const auto used_r = neighborhood(g, Side::Left, trial);
    std::vector<int> rest_l;
    for (int u = 0; u < g.left; ++u)
      if (!in[static_cast<std::size_t>(u)] && u != v) rest_l.push_back(u);
    const auto rest_r = complement_of(g.right, used_r);
    const BipartiteGraph residual = g.induced(rest_l, rest_r);
    const Matching rm = max_matching(residual);
    const int extra = residual.left - rm.size;
    if (base + extra < 1) continue;
    for (int u : trial)
      if (!in[static_cast<std::size_t>(u)]) in[static_cast<std::size_t>(u)] = 1;
    if (extra > 0)
      for (int idx : koenig_left(residual, rm)) in[static_cast<std::size_t>(rest_l[static_cast<std::size_t>(idx)])] = 1;
    current.clear();
    for (int u = 0; u < g.left; ++u)
      if (in[static_cast<std::size_t>(u)]) current.push_back(u);
  }
  return current;
}

}  // namespace

void BipartiteGraph::add_edge(int u, int v) {
  if (u < 0 || u >= left || v < 0 || v >= right) throw std::out_of_range("edge endpoint outside the graph");
  adj[static_cast<std::size_t>(u)].push_back(v);
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph t(right, left);
  for (int u = 0; u < left; ++u)
    for (int v : adj[static_cast<std::size_t>(u)]) t.adj[static_cast<std::size_t>(v)].push_back(u);
  return t;
}

BipartiteGraph BipartiteGraph::induced(const std::vector<int>& lefts, const std::vector<int>& rights) const {
  std::vector<int> rmap(static_cast<std::size_t>(right), -1);
  for (std::size_t i = 0; i < rights.size(); ++i) rmap[static_cast<std::size_t>(rights[i])] = static_cast<int>(i);
  BipartiteGraph h(static_cast<int>(lefts.size()), static_cast<int>(rights.size()));
  for (std::size_t i = 0; i < lefts.size(); ++i)
    for (int v : adj[static_cast<std::size_t>(lefts[i])])
      if (rmap[static_cast<std::size_t>(v)] >= 0) h.adj[i].push_back(rmap[static_cast<std::size_t>(v)]);
  return h;
}

Matching max_matching(const BipartiteGraph& g) {
  Matching m;
  m.mate_left.assign(static_cast<std::size_t>(g.left), -1);
  m.mate_right.assign(static_cast<std::size_t>(g.right), -1);
  std::vector<int> dist(static_cast<std::size_t>(g.left));

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < g.left; ++u) {
      if (m.mate_left[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.adj[static_cast<std::size_t>(u)]) {
        const int w = m.mate_right[static_cast<std::size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> it(static_cast<std::size_t>(g.left));
  auto dfs = [&](auto&& self, int u) -> bool {
    auto& pos = it[static_cast<std::size_t>(u)];
    const auto& nb = g.adj[static_cast<std::size_t>(u)];
    for (; pos < nb.size(); ++pos) {
      const int v = nb[pos];
      const int w = m.mate_right[static_cast<std::size_t>(v)];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 && self(self, w))) {
        m.mate_left[static_cast<std::size_t>(u)] = v;
        m.mate_right[static_cast<std::size_t>(v)] = u;
        ++pos;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u = 0; u < g.left; ++u)
      if (m.mate_left[static_cast<std::size_t>(u)] < 0 && dfs(dfs, u)) ++m.size;
  }
  return m;
}

std::vector<int> neighborhood(const BipartiteGraph& g, Side side, const std::vector<int>& set) {
  if (side == Side::Right) return neighborhood(g.transposed(), Side::Left, set);
  std::vector<char> hit(static_cast<std::size_t>(g.right), 0);
  for (int u : set)
    for (int v : g.adj[static_cast<std::size_t>(u)]) hit[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.right; ++v)
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

int max_deficiency(const BipartiteGraph& g, Side side) {
  const int n = side == Side::Left ? g.left : g.right;
  return n - max_matching(g).size;
}

std::optional<std::vector<int>> hall_violator(const BipartiteGraph& g, Side side, bool maximal) {
  if (side == Side::Right) return hall_violator(g.transposed(), Side::Left, maximal);
  const Matching m = max_matching(g);
  if (m.size == g.left) return std::nullopt;
  auto set = koenig_left(g, m);
  if (maximal) set = inclusion_maximal_violator(g, std::move(set));
  return set;
}

ExchangePlan plan_exchange(const BipartiteGraph& g) {
  ExchangePlan plan;
  const Matching full = max_matching(g);
  if (full.size == 0) throw std::domain_error("plan_exchange: the graph has no edges");
  if (full.size == g.left) {
    plan.case_label = "cover";
    for (int u = 0; u < g.left; ++u) {
      plan.remove_left.push_back(u);
      plan.add_right.push_back(full.mate_left[static_cast<std::size_t>(u)]);
    }
    return plan;
  }

  const auto xs = iota_vec(g.left);
  const auto ys = neighborhood(g, Side::Left, xs);
  const BipartiteGraph h = g.induced(xs, ys);  // right side re-indexed to Y

  if (h.left <= h.right) {
    plan.case_label = "1";
    const auto x0 = *hall_violator(h, Side::Left, true);
    const auto rest_x = complement_of(h.left, x0);
    const auto rest_y = complement_of(h.right, neighborhood(h, Side::Left, x0));
    const BipartiteGraph sub = h.induced(rest_x, rest_y);
    const Matching sm = max_matching(sub);
    if (sm.size != sub.left) throw std::logic_error("plan_exchange: maximal violator leaves X uncovered");
    for (int i = 0; i < sub.left; ++i) {
      plan.remove_left.push_back(rest_x[static_cast<std::size_t>(i)]);
      plan.add_right.push_back(ys[static_cast<std::size_t>(rest_y[static_cast<std::size_t>(sm.mate_left[static_cast<std::size_t>(i)])])]);
    }
    return plan;
  }

  const Matching hm = max_matching(h);
  if (hm.size == h.right) {
    plan.case_label = "2";
    for (int v = 0; v < h.right; ++v) {
      plan.remove_left.push_back(hm.mate_right[static_cast<std::size_t>(v)]);
      plan.add_right.push_back(ys[static_cast<std::size_t>(v)]);
    }
    return plan;
  }

  auto y0 = *hall_violator(h, Side::Right);
  while (true) {
    const auto nx = neighborhood(h, Side::Right, y0);
    const BipartiteGraph sub = h.induced(nx, y0);
    const Matching sm = max_matching(sub);
    if (sm.size == sub.left) {
      plan.case_label = "2a";
      for (int i = 0; i < sub.left; ++i) {
        plan.remove_left.push_back(nx[static_cast<std::size_t>(i)]);
        plan.add_right.push_back(ys[static_cast<std::size_t>(y0[static_cast<std::size_t>(sm.mate_left[static_cast<std::size_t>(i)])])]);
      }
      return plan;
    }
    const auto z = *hall_violator(sub, Side::Left);
    const auto nz = neighborhood(sub, Side::Left, z);
    std::vector<char> drop(y0.size(), 0);
    for (int idx : nz) drop[static_cast<std::size_t>(idx)] = 1;
    std::vector<int> next;
    for (std::size_t i = 0; i < y0.size(); ++i)
      if (!drop[i]) next.push_back(y0[i]);
    if (next.empty() || next.size() == y0.size()) throw std::logic_error("plan_exchange: shrink step made no progress");
    y0 = std::move(next);
    ++plan.shrink_iterations;
  }
}

}  // namespace cpairs
