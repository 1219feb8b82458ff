#include "cpairs/suites.hpp"

#include <algorithm>
#include <utility>

#include "cpairs/claims.hpp"

namespace cpairs {

namespace {

std::vector<int> range_or(const std::optional<int>& pinned, int lo, int hi) {
  if (pinned) return {*pinned};
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

void append(std::vector<Check>& out, std::vector<Check> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kleitman-small", "subspace-small", "property-q",   "scd",
                                                 "shadows",        "claims-sec2",    "sec3",         "sec5",
                                                 "lower-bounds",   "compression-props"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const SuiteParams& ps) {
  std::vector<Check> out;
  if (name == "kleitman-small") {
    for (int n : range_or(ps.n, 1, 4)) out.push_back(verify_kleitman(n, ps.workers));
  } else if (name == "subspace-small") {
    std::vector<std::pair<int, int>> grid = {{2, 2}, {3, 2}, {2, 3}};
    if (ps.q || ps.n) grid = {{ps.q.value_or(2), ps.n.value_or(2)}};
    for (auto [q, n] : grid) out.push_back(verify_subspace_centeredness(q, n, ps.workers));
  } else if (name == "property-q") {
    const std::vector<int> qs = ps.q ? std::vector<int>{*ps.q} : std::vector<int>{2, 3, 5};
    for (int q : qs)
      for (int n : range_or(ps.n, 1, 6)) append(out, verify_property_q(q, n));
  } else if (name == "scd") {
    if (ps.n || ps.k) {
      out.push_back(verify_scd_instance(ps.n.value_or(3), ps.k.value_or(2)));
    } else {
      out.push_back(verify_scd_grid(2187));
      out.push_back(verify_pigeonhole(ps.seed, ps.samples));
    }
  } else if (name == "shadows") {
    for (int n : range_or(ps.n, 1, 4))
      for (int k : range_or(ps.k, 1, 4)) out.push_back(verify_shadows(n, k));
  } else if (name == "claims-sec2") {
    for (int n : range_or(ps.n, 1, 5)) out.push_back(verify_claimfuncond(n));
    for (int n : range_or(ps.n, 2, 5)) out.push_back(verify_3compressclaim(n));
    for (int n : range_or(ps.n, 2, 6)) out.push_back(verify_3compress_formulas(n));
    for (int n : range_or(ps.n, 1, 10)) out.push_back(verify_averagethird(n, n <= 10));
    for (int n : range_or(ps.n, 1, 7)) out.push_back(verify_number_nbrs(n));
  } else if (name == "sec3") {
    append(out, verify_sec3(range_or(ps.n, 8, 12), ps.workers));
  } else if (name == "sec5") {
    const std::vector<int> ns = ps.n ? std::vector<int>{*ps.n} : std::vector<int>{20, 50, 100};
    for (int n : ns)
      for (int k : range_or(ps.k, 2, 4)) append(out, verify_sec5(n, k));
    if (!ps.n && !ps.k) out.push_back(verify_sec5_backends(24));
  } else if (name == "lower-bounds") {
    std::vector<std::pair<int, int>> grid = {{2, 2}, {3, 2}, {2, 3}};
    if (ps.n || ps.k) grid = {{ps.n.value_or(2), ps.k.value_or(2)}};
    for (auto [n, k] : grid) append(out, verify_lower_bounds(n, k, ps.workers));
  } else if (name == "compression-props") {
    append(out, verify_compression_props(ps.seed, ps.samples, ps.workers));
    append(out, verify_oracle_consistency(ps.seed, ps.samples, 10000, ps.workers));
  } else {
    throw UsageError("unknown suite '" + name + "'");
  }
  return out;
}

Report run_verify_suite(const std::vector<std::string>& names, const SuiteParams& ps) {
  const auto& known = suite_names();
  for (const auto& name : names)
    if (std::find(known.begin(), known.end(), name) == known.end()) throw UsageError("unknown suite '" + name + "'");
  Report report;
  report.config = {{"suites", names}, {"seed", ps.seed}, {"workers", ps.workers}, {"samples", ps.samples}};
  if (ps.n) report.config["n"] = *ps.n;
  if (ps.k) report.config["k"] = *ps.k;
  if (ps.q) report.config["q"] = *ps.q;
  for (const auto& name : names) append(report.checks, run_suite(name, ps));
  return report;
}

}  // namespace cpairs
