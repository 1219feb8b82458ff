#include "cpairs/compression.hpp"

#include <algorithm>
#include <stdexcept>

#include "cpairs/errors.hpp"
#include "cpairs/kernels.hpp"
#include "cpairs/matching.hpp"

namespace cpairs {

namespace {

const ChainProductPoset& ternary_poset(const Family& f, const char* what) {
  const auto* cp = dynamic_cast<const ChainProductPoset*>(&f.poset());
  if (cp == nullptr || cp->shape().k() != 2)
    throw UnsupportedError(std::string(what) + " is defined on {0,1,2}^n only");
  return *cp;
}

kernels::Grid grid_of(const ChainProductPoset& p) { return {p.shape().n(), p.shape().k()}; }

int zeros_of(const ChainProductPoset& p, ElementId e) {
  int z = 0;
  for (auto c : p.coords(e)) z += c == 0;
  return z;
}

/// (a, b) of the violating pair chosen by the top-compression rule.
std::optional<std::pair<int, int>> top_violation(const Family& f, const ChainProductPoset& p) {
  const int n = p.shape().n();
  const auto grid = grid_of(p);
  std::optional<std::pair<int, int>> best;
  std::vector<std::uint32_t> cnt(p.size());
  for (int b = n; b < p.rank(); ++b) {
    std::fill(cnt.begin(), cnt.end(), 0u);
    bool any = false;
    for (ElementId e : p.layer(b))
      if (!f.contains(e)) {
        cnt[e] = 1;
        any = true;
      }
    if (!any) continue;
    kernels::down_zeta_serial(cnt, grid);
    for (int a = p.rank(); a > std::max(b, n); --a) {
      if (best && a < best->first) break;
      bool hit = false;
      for (ElementId e : p.layer(a))
        if (f.contains(e) && cnt[e] > 0) {
          hit = true;
          break;
        }
      if (hit) {
        if (!best || a > best->first || (a == best->first && b > best->second)) best = {{a, b}};
        break;
      }
    }
  }
  return best;
}

CompressStep finish_step(const Family& before, Family after, int a, int b, const ExchangePlan& plan,
                         const std::vector<ElementId>& xs, const std::vector<ElementId>& ys) {
  CompressStep s(std::move(after));
  s.a = a;
  s.b = b;
  s.case_label = plan.case_label;
  s.shrink_iterations = plan.shrink_iterations;
  for (std::size_t i = 0; i < plan.remove_left.size(); ++i)
    s.swapped.emplace_back(xs[static_cast<std::size_t>(plan.remove_left[i])],
                           ys[static_cast<std::size_t>(plan.add_right[i])]);
  s.comp_before = comp_count(before);
  s.comp_after = comp_count(s.family);
  s.potential_before = twice_potential(before);
  s.potential_after = twice_potential(s.family);
  return s;
}

Family apply_plan(const Family& f, const ExchangePlan& plan, const std::vector<ElementId>& xs,
                  const std::vector<ElementId>& ys) {
  std::vector<ElementId> removed;
  std::vector<ElementId> added;
  for (int i : plan.remove_left) removed.push_back(xs[static_cast<std::size_t>(i)]);
  for (int j : plan.add_right) added.push_back(ys[static_cast<std::size_t>(j)]);
  return f.exchange(removed, added);
}

template <class EdgePred>
BipartiteGraph build_graph(const std::vector<ElementId>& xs, const std::vector<ElementId>& ys, EdgePred edge) {
  BipartiteGraph g(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (edge(xs[i], ys[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

std::vector<ElementId> non_members(const Family& f, int r) {
  std::vector<ElementId> out;
  for (ElementId e : f.poset().layer(r))
    if (!f.contains(e)) out.push_back(e);
  return out;
}

CompressStep complemented(const CompressStep& s, const ChainProductPoset& p) {
  CompressStep out = s;
  out.family = complement_family(s.family);
  out.a = p.rank() - s.a;
  out.b = p.rank() - s.b;
  for (auto& [x, y] : out.swapped) {
    x = p.complement_id(x);
    y = p.complement_id(y);
  }
  return out;
}

/// Members strictly above e at rank > r.
bool has_member_above(const Family& f, ElementId e, int r) {
  const auto& p = f.poset();
  for (int s = r + 1; s <= p.rank(); ++s)
    for (ElementId c : p.layer(s))
      if (f.contains(c) && p.leq(e, c)) return true;
  return false;
}

std::optional<CompressStep> three_step_c1(const Family& f, const ChainProductPoset& p) {
  const int n = p.shape().n();
  const int a = n + 2;
  const int b = n - 1;
  const auto xs = f.layer_members(a);
  auto ys = non_members(f, b);
  auto edge = [&](ElementId x, ElementId y) { return p.leq(y, x) && zeros_of(p, x) != zeros_of(p, y); };
  auto g = build_graph(xs, ys, edge);
  auto plan = plan_exchange(g);
  auto step = finish_step(f, apply_plan(f, plan, xs, ys), a, b, plan, xs, ys);
  if (step.comp_after <= step.comp_before) return step;

  std::vector<ElementId> kept;
  for (ElementId y : ys)
    if (!has_member_above(f, y, a)) kept.push_back(y);
  ys = std::move(kept);
  g = build_graph(xs, ys, edge);
  bool any_edge = false;
  for (const auto& nb : g.adj) any_edge = any_edge || !nb.empty();
  if (!any_edge) return step;
  plan = plan_exchange(g);
  auto restricted = finish_step(f, apply_plan(f, plan, xs, ys), a, b, plan, xs, ys);
  restricted.case_label += "/restricted";
  return restricted;
}

struct MidViolation {
  bool upper = true;
  int a = 0;
  int b = 0;
};

std::optional<MidViolation> mid_violation(const Family& f) {
  const auto& p = f.poset();
  const int rank = p.rank();
  std::optional<MidViolation> up;
  std::optional<MidViolation> down;
  for (ElementId x : f.members()) {
    const int ra = p.rank_of(x);
    const int da = p.twice_distance_of_rank(ra);
    for (ElementId y = 0; y < p.size(); ++y) {
      if (f.contains(y)) continue;
      const int rb = p.rank_of(y);
      if (p.twice_distance_of_rank(rb) >= da || !p.comparable(x, y)) continue;
      if (2 * ra > rank) {
        if (!up || ra > up->a || (ra == up->a && rb > up->b)) up = MidViolation{true, ra, rb};
      } else {
        if (!down || ra < down->a || (ra == down->a && rb < down->b)) down = MidViolation{false, ra, rb};
      }
    }
  }
  return up ? up : down;
}

}  // namespace

Family complement_family(const Family& f) {
  const auto* cp = dynamic_cast<const ChainProductPoset*>(&f.poset());
  if (cp == nullptr) throw UnsupportedError("complementation needs a chain product");
  std::vector<ElementId> out;
  for (ElementId e : f.members()) out.push_back(cp->complement_id(e));
  return Family(*cp, out);
}

bool is_top_compressed(const Family& f) { return !top_violation(f, ternary_poset(f, "top compression")).has_value(); }

bool is_bottom_compressed(const Family& f) { return is_top_compressed(complement_family(f)); }

std::optional<CompressStep> top_compress_step(const Family& f) {
  const auto& p = ternary_poset(f, "top compression");
  const auto v = top_violation(f, p);
  if (!v) return std::nullopt;
  const auto [a, b] = *v;
  const auto xs = f.layer_members(a);
  const auto ys = non_members(f, b);
  const auto g = build_graph(xs, ys, [&](ElementId x, ElementId y) { return p.leq(y, x); });
  const auto plan = plan_exchange(g);
  return finish_step(f, apply_plan(f, plan, xs, ys), a, b, plan, xs, ys);
}

std::optional<CompressStep> bottom_compress_step(const Family& f) {
  const auto& p = ternary_poset(f, "bottom compression");
  const auto s = top_compress_step(complement_family(f));
  if (!s) return std::nullopt;
  return complemented(*s, p);
}

std::vector<ThreeCompressViolation> three_compress_check(const Family& f) {
  const auto& p = ternary_poset(f, "3-compression");
  if (!is_top_compressed(f) || !is_bottom_compressed(f))
    throw std::domain_error("3-compression needs a top- and bottom-compressed family");
  const int n = p.shape().n();
  std::vector<ThreeCompressViolation> out;
  auto scan = [&](const Family& g, int condition, bool flip) {
    if (n + 2 > p.rank() || n - 1 < 0) return;
    const auto below = non_members(g, n - 1);
    for (ElementId x : g.layer_members(n + 2)) {
      if (has_member_above(g, x, n + 2)) continue;
      const int x0 = zeros_of(p, x);
      for (ElementId y : below)
        if (zeros_of(p, y) > x0 && p.leq(y, x)) {
          if (flip)
            out.push_back({condition, p.complement_id(x), p.complement_id(y)});
          else
            out.push_back({condition, x, y});
        }
    }
  };
  scan(f, 1, false);
  scan(complement_family(f), 2, true);
  return out;
}

std::optional<CompressStep> three_compress_step(const Family& f) {
  const auto& p = ternary_poset(f, "3-compression");
  const auto violations = three_compress_check(f);
  if (violations.empty()) return std::nullopt;
  if (violations.front().condition == 1) return three_step_c1(f, p);
  const auto s = three_step_c1(complement_family(f), p);
  return complemented(*s, p);
}

void validate_involution(const std::vector<int>& pi, int n) {
  if (static_cast<int>(pi.size()) != n) throw std::domain_error("involution has the wrong length");
  for (int i = 0; i < n; ++i) {
    const int j = pi[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || pi[static_cast<std::size_t>(j)] != i) throw std::domain_error("permutation is not an involution");
  }
}

ElementId permute(const ChainProductPoset& p, ElementId e, const std::vector<int>& pi) {
  const auto c = p.coords(e);
  std::size_t id = 0;
  for (std::size_t i = 0; i < c.size(); ++i) id += c[i] * p.stride(pi[i]);
  return static_cast<ElementId>(id);
}

Family pi_compress(const Family& g, const std::vector<int>& pi, int low_rank) {
  const auto& p = ternary_poset(g, "pi-compression");
  const int n = p.shape().n();
  validate_involution(pi, n);
  if (low_rank < 0 || low_rank >= n) throw std::domain_error("pi_compress: low rank must be below n");
  const int high = 2 * n - low_rank;
  for (int r = 0; r <= p.rank(); ++r) {
    const std::size_t have = g.layer_count(r);
    if ((r < low_rank || r > high) && have > 0) throw std::domain_error("pi_compress: member outside the rank band");
    if (r > low_rank && r < high && have != p.layer_size(r))
      throw std::domain_error("pi_compress: a rank strictly inside the band is not full");
  }
  std::vector<ElementId> removed;
  std::vector<ElementId> added;
  for (ElementId x : g.layer_members(low_rank)) {
    const ElementId image = permute(p, p.complement_id(x), pi);
    if (!g.contains(image)) {
      removed.push_back(x);
      added.push_back(image);
    }
  }
  return g.exchange(removed, added);
}

bool is_mid_compressed(const Family& f) { return !mid_violation(f).has_value(); }

std::optional<CompressStep> mid_compress_step(const Family& f, bool property_q_asserted) {
  if (!property_q_asserted) throw UnsupportedError("mid-compression requires Property (Q) to be asserted");
  const auto v = mid_violation(f);
  if (!v) return std::nullopt;
  const auto& p = f.poset();
  const auto xs = f.layer_members(v->a);
  const auto ys = non_members(f, v->b);
  const auto g = build_graph(xs, ys, [&](ElementId x, ElementId y) { return p.comparable(x, y); });
  const auto plan = plan_exchange(g);
  return finish_step(f, apply_plan(f, plan, xs, ys), v->a, v->b, plan, xs, ys);
}

Family compress_to_fixpoint(const Family& f, CompressKind kind, std::vector<CompressStep>* trace,
                            bool property_q_asserted) {
  Family cur = f;
  const long long budget = twice_potential(f);
  for (long long steps = 0;; ++steps) {
    std::optional<CompressStep> s;
    switch (kind) {
      case CompressKind::Top:
        s = top_compress_step(cur);
        break;
      case CompressKind::Bottom:
        s = bottom_compress_step(cur);
        break;
      case CompressKind::Three:
        s = top_compress_step(cur);
        if (!s) s = bottom_compress_step(cur);
        if (!s) s = three_compress_step(cur);
        break;
      case CompressKind::Mid:
        s = mid_compress_step(cur, property_q_asserted);
        break;
    }
    if (!s) return cur;
    if (steps >= budget || s->potential_after >= s->potential_before)
      throw std::logic_error("compression failed to decrease the potential");
    cur = s->family;
    if (trace) trace->push_back(std::move(*s));
  }
}

}  // namespace cpairs
