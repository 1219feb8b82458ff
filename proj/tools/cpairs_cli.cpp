// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed
// or I/O broke, 2 usage error, 3 capacity exceeded.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpairs/claims.hpp"
#include "cpairs/compression.hpp"
#include "cpairs/constructions.hpp"
#include "cpairs/errors.hpp"
#include "cpairs/family.hpp"
#include "cpairs/graded_poset.hpp"
#include "cpairs/report.hpp"
#include "cpairs/search.hpp"
#include "cpairs/suites.hpp"

namespace {

using nlohmann::json;
using namespace cpairs;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Globals {
  std::uint64_t seed = 1;
  int workers = 1;
  bool deterministic = false;
  std::string out;
  std::string format = "json";
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_output(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("cannot write to stdout");
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + g.out + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("cannot write '" + g.out + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return json::parse(f);
}

int emit_report(const Globals& g, Report r) {
  if (!g.deterministic) r.timestamp = utc_timestamp();
  write_output(g, g.format == "csv" ? emit_csv(r) : emit_json(r));
  return r.any_fail() ? kExitFail : 0;
}

/// Plain JSON payloads; CSV needs a row view supplied by the caller.
void emit_value(const Globals& g, const json& value, const std::string& csv) {
  write_output(g, g.format == "csv" ? csv : value.dump(2) + "\n");
}

json ids_to_json(const GradedPoset& p, const std::vector<ElementId>& ids) {
  json out = json::array();
  for (ElementId e : ids) out.push_back(p.encode(e));
  return out;
}

std::string family_csv(const Family& f) {
  std::string out = "element\n";
  for (ElementId e : f.members()) out += f.poset().encode(e) + "\n";
  return out;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& names, const SuiteParams& base) {
  SuiteParams ps = base;
  ps.seed = g.seed;
  ps.workers = g.workers;
  const std::vector<std::string> chosen = names.empty() ? suite_names() : names;
  return emit_report(g, run_verify_suite(chosen, ps));
}

int cmd_search_exhaustive(const Globals& g, const std::string& poset_spec, long m, bool all_m) {
  const auto p = make_poset(parse_poset_spec(poset_spec));
  std::vector<OptimalityReport> reps;
  if (all_m || m < 0) {
    reps = exhaustive_all(*p, g.workers);
  } else {
    reps.push_back(exhaustive_min_comp(*p, static_cast<std::size_t>(m), g.workers));
  }
  json arr = json::array();
  std::string csv = "m,min_comp,centered_min_comp,centered_achieves,witness\n";
  for (const auto& r : reps) {
    arr.push_back({{"m", r.m},
                   {"min_comp", r.min_comp},
                   {"witness", ids_to_json(*p, r.witness)},
                   {"centered_min_comp", r.centered_min_comp},
                   {"centered_witness", ids_to_json(*p, r.centered_witness)},
                   {"centered_achieves", r.centered_achieves}});
    std::string w;
    for (ElementId e : r.witness) w += (w.empty() ? "" : " ") + p->encode(e);
    csv += std::to_string(r.m) + "," + std::to_string(r.min_comp) + "," + std::to_string(r.centered_min_comp) + "," +
           (r.centered_achieves ? "true" : "false") + "," + w + "\n";
  }
  emit_value(g, arr, csv);
  return 0;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "' (expected a..b)");
  }
}

int cmd_search_anneal(const Globals& g, int n, int k, const std::string& range, std::uint64_t budget) {
  const ChainProductPoset p(ChainProduct(n, k));
  auto [lo, hi] = parse_range(range);
  if (lo == 0 || hi < lo || hi > p.size()) throw UsageError("m-range must satisfy 1 <= a <= b <= |P|");
  CenteredMinimizer cm(p, g.workers);
  json arr = json::array();
  std::string csv = "m,found_comp,centered_min,beats_centered\n";
  for (std::size_t m = lo; m <= hi; ++m) {
    const auto r = local_search_counterexample(p, m, budget, g.seed + m, cm);
    arr.push_back({{"m", m},
                   {"found_comp", r.best_comp},
                   {"centered_min", r.centered_min},
                   {"beats_centered", r.beats_centered()},
                   {"steps", r.steps},
                   {"family", ids_to_json(p, r.best)}});
    csv += std::to_string(m) + "," + std::to_string(r.best_comp) + "," + std::to_string(r.centered_min) + "," +
           (r.beats_centered() ? "true" : "false") + "\n";
  }
  emit_value(g, arr, csv);
  return 0;
}

int cmd_construct_sec3(const Globals& g, int n, const std::string& family_out) {
  Report r;
  r.config = {{"command", "construct sec3"}, {"n", n}};
  r.checks = verify_sec3({n}, g.workers);
  if (!family_out.empty()) {
    const ChainProductPoset p(ChainProduct(n, 2));
    std::ofstream f(family_out);
    f << family_to_json(build_family_sec3(p)).dump() << "\n";
    if (!f) throw std::runtime_error("cannot write '" + family_out + "'");
  }
  return emit_report(g, std::move(r));
}

int cmd_construct_sec5(const Globals& g, int n, int k, int j) {
  Report r;
  r.config = {{"command", "construct sec5"}, {"n", n}, {"k", k}, {"j", j}};
  r.checks = verify_sec5(n, k, j);
  return emit_report(g, std::move(r));
}

int cmd_scd(const Globals& g, int n, int k, bool verify) {
  const ChainProduct shape(n, k);
  Report r;
  r.config = {{"command", "scd"}, {"n", n}, {"k", k}};
  if (verify) {
    r.checks.push_back(verify_scd_instance(n, k));
  } else {
    const auto scd = build_scd(shape);
    json chains = json::array();
    for (const auto& c : scd.chains) {
      json chain = json::array();
      for (const auto& e : c) chain.push_back(encode(shape, e));
      chains.push_back(chain);
    }
    r.checks.push_back(make_info("scd.chains", {{"n", n}, {"k", k}}, nullptr,
                                 {{"count", scd.chains.size()}, {"chains", chains}}));
  }
  return emit_report(g, std::move(r));
}

std::vector<int> parse_pi(const std::string& text) {
  std::vector<int> pi;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      pi.push_back(std::stoi(part));
    } catch (const std::logic_error&) {
      throw UsageError("bad --pi entry '" + part + "'");
    }
  }
  return pi;
}

int cmd_compress(const Globals& g, const std::string& kind, const std::string& family_path, const std::string& trace_path,
                 const std::string& pi_text, int low_rank, bool property_q) {
  const json input = read_json_file(family_path);
  const auto p = make_poset(input.at("poset"));
  const Family f = family_from_json(*p, input);
  std::vector<CompressStep> trace;
  std::unique_ptr<Family> result;
  if (kind == "pi") {
    const auto* cp = dynamic_cast<const ChainProductPoset*>(p.get());
    if (cp == nullptr) throw UsageError("pi compression needs a chain product");
    std::vector<int> pi = pi_text.empty() ? std::vector<int>{} : parse_pi(pi_text);
    if (pi.empty())
      for (int i = 0; i < cp->shape().n(); ++i) pi.push_back(i);
    if (low_rank < 0) low_rank = cp->shape().n() - 3;
    result = std::make_unique<Family>(pi_compress(f, pi, low_rank));
    CompressStep s(*result);
    s.a = low_rank;
    s.b = 2 * cp->shape().n() - low_rank;
    s.case_label = "pi";
    s.comp_before = comp_count(f, CompBackend::Auto, g.workers);
    s.comp_after = comp_count(*result, CompBackend::Auto, g.workers);
    s.potential_before = twice_potential(f);
    s.potential_after = twice_potential(*result);
    trace.push_back(std::move(s));
  } else {
    CompressKind k;
    if (kind == "top") {
      k = CompressKind::Top;
    } else if (kind == "bottom") {
      k = CompressKind::Bottom;
    } else if (kind == "three") {
      k = CompressKind::Three;
    } else if (kind == "mid") {
      k = CompressKind::Mid;
    } else {
      throw UsageError("unknown transform '" + kind + "'");
    }
    result = std::make_unique<Family>(compress_to_fixpoint(f, k, &trace, property_q));
  }
  if (!trace_path.empty()) {
    std::ofstream t(trace_path);
    if (!t) throw std::runtime_error("cannot open '" + trace_path + "'");
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto& s = trace[i];
      json swapped = json::array();
      for (auto [out_id, in_id] : s.swapped) swapped.push_back({p->encode(out_id), p->encode(in_id)});
      t << json{{"step", i + 1},
                {"a", s.a},
                {"b", s.b},
                {"case", s.case_label},
                {"swapped", swapped},
                {"comp_before", s.comp_before},
                {"comp_after", s.comp_after},
                {"potential", s.potential_after}}
               .dump()
        << "\n";
    }
    if (!t) throw std::runtime_error("cannot write '" + trace_path + "'");
  }
  emit_value(g, family_to_json(*result), family_csv(*result));
  return 0;
}

int cmd_comp(const Globals& g, const std::string& family_path, const std::string& backend_name, bool degrees) {
  const json input = read_json_file(family_path);
  const auto p = make_poset(input.at("poset"));
  const Family f = family_from_json(*p, input);
  CompBackend backend = CompBackend::Auto;
  if (backend_name == "pairwise") {
    backend = CompBackend::Pairwise;
  } else if (backend_name == "transform") {
    backend = CompBackend::Transform;
  } else if (backend_name != "auto") {
    throw UsageError("unknown backend '" + backend_name + "'");
  }
  const Count comp = comp_count(f, backend, g.workers);
  json out = {{"poset", p->descriptor()}, {"size", f.size()}, {"comp", comp}};
  std::string csv = "element,comp\n";
  if (degrees) {
    json deg = json::object();
    for (const auto& [e, c] : comp_report(f, g.workers).degrees) {
      deg[p->encode(e)] = c;
      csv += p->encode(e) + "," + std::to_string(c) + "\n";
    }
    out["degrees"] = deg;
  } else {
    csv = "size,comp\n" + std::to_string(f.size()) + "," + std::to_string(comp) + "\n";
  }
  emit_value(g, out, csv);
  return 0;
}

int cmd_centered(const Globals& g, const std::string& poset_spec, std::size_t m, const std::string& fill, bool exact) {
  const auto p = make_poset(parse_poset_spec(poset_spec));
  if (m > p->size()) throw UsageError("m exceeds the poset size");
  FillOrder order = FillOrder::DegreeAscending;
  if (fill == "lex") {
    order = FillOrder::Lexicographic;
  } else if (fill != "degree") {
    throw UsageError("unknown fill order '" + fill + "'");
  }
  std::unique_ptr<Family> f;
  if (exact) {
    CenteredMinimizer cm(*p, g.workers);
    f = std::make_unique<Family>(*p, cm.minimum(m).members);
  } else {
    f = std::make_unique<Family>(build_centered(*p, m, order));
  }
  json out = family_to_json(*f);
  out["comp"] = comp_count(*f, CompBackend::Auto, g.workers);
  out["centered"] = is_centered(*f);
  out["canonical_centered"] = is_canonical_centered(*f);
  emit_value(g, out, family_csv(*f));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparable pairs in graded posets: exact verification, search and constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--deterministic", g.deterministic, "Omit the timestamp");
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> suites;
  SuiteParams suite_params;
  int vn = 0;
  int vk = 0;
  int vq = 0;
  auto* verify = app.add_subcommand("verify", "Run named verification suites (all when none given)");
  verify->add_option("suites", suites, "Suite names");
  auto* vn_opt = verify->add_option("--n", vn, "Pin n");
  auto* vk_opt = verify->add_option("--k", vk, "Pin k");
  auto* vq_opt = verify->add_option("--q", vq, "Pin q");
  verify->add_option("--samples", suite_params.samples, "Random samples per property");

  auto* search = app.add_subcommand("search", "Exhaustive or annealing search");
  search->require_subcommand(1);
  std::string poset_spec;
  long m = -1;
  bool all_m = false;
  auto* exhaustive = search->add_subcommand("exhaustive", "Exact minimum comp per size");
  exhaustive->add_option("--poset", poset_spec, "chain:N:K or subspace:Q:N")->required();
  exhaustive->add_option("--m", m, "Single size");
  exhaustive->add_flag("--all-m", all_m, "Every size (default)");
  int an = 2;
  int ak = 16;
  std::string range;
  std::uint64_t budget = 200000;
  auto* anneal = search->add_subcommand("anneal", "Annealing against the exact centered minimum");
  anneal->add_option("--n", an);
  anneal->add_option("--k", ak);
  anneal->add_option("--m-range", range, "a..b")->required();
  anneal->add_option("--budget", budget, "Proposed swaps per size");

  auto* construct = app.add_subcommand("construct", "Counterexample constructions");
  construct->require_subcommand(1);
  int cn = 0;
  int ck = 2;
  int cj = 0;
  std::string family_out;
  auto* sec3 = construct->add_subcommand("sec3", "Family beating the canonical centered ones in {0,1,2}^n");
  sec3->add_option("--n", cn)->required();
  sec3->add_option("--family-out", family_out, "Also write the family JSON here");
  auto* sec5 = construct->add_subcommand("sec5", "One-element exchange beating the centered window");
  sec5->add_option("--n", cn)->required();
  sec5->add_option("--k", ck)->required();
  sec5->add_option("--j", cj)->required();

  int sn = 0;
  int sk = 0;
  bool sverify = false;
  auto* scd = app.add_subcommand("scd", "Symmetric chain decomposition");
  scd->add_option("--n", sn)->required();
  scd->add_option("--k", sk)->required();
  scd->add_flag("--verify", sverify, "Report the invariants instead of the chains");

  std::string kind;
  std::string family_path;
  std::string trace_path;
  std::string pi_text;
  int low_rank = -1;
  bool property_q = false;
  auto* compress = app.add_subcommand("compress", "Apply a compression to a family file");
  compress->add_option("kind", kind, "top|bottom|three|pi|mid")
      ->required()
      ->check(CLI::IsMember({"top", "bottom", "three", "pi", "mid"}));
  compress->add_option("--family", family_path)->required();
  compress->add_option("--trace", trace_path, "JSON lines, one per step");
  compress->add_option("--pi", pi_text, "Involution as comma-separated images");
  compress->add_option("--low-rank", low_rank, "Lower band rank for pi (default n-3)");
  compress->add_flag("--property-q", property_q, "Assert Property (Q) for mid compression");

  std::string backend = "auto";
  bool degrees = false;
  auto* comp = app.add_subcommand("comp", "Count comparable pairs of a family file");
  comp->add_option("--family", family_path)->required();
  comp->add_option("--backend", backend, "auto|pairwise|transform");
  comp->add_flag("--degrees", degrees, "Per-member comparability");

  std::size_t cm = 0;
  std::string fill = "degree";
  bool exact = false;
  auto* centered = app.add_subcommand("centered", "Build a centered family");
  centered->add_option("--poset", poset_spec)->required();
  centered->add_option("--m", cm)->required();
  centered->add_option("--fill", fill, "degree|lex");
  centered->add_flag("--exact", exact, "Exact centered minimum instead of the greedy fill");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*vn_opt) suite_params.n = vn;
    if (*vk_opt) suite_params.k = vk;
    if (*vq_opt) suite_params.q = vq;
    if (*verify) return cmd_verify(g, suites, suite_params);
    if (*exhaustive) return cmd_search_exhaustive(g, poset_spec, all_m ? -1 : m, all_m);
    if (*anneal) return cmd_search_anneal(g, an, ak, range, budget);
    if (*sec3) return cmd_construct_sec3(g, cn, family_out);
    if (*sec5) return cmd_construct_sec5(g, cn, ck, cj);
    if (*scd) return cmd_scd(g, sn, sk, sverify);
    if (*compress) return cmd_compress(g, kind, family_path, trace_path, pi_text, low_rank, property_q);
    if (*comp) return cmd_comp(g, family_path, backend, degrees);
    if (*centered) return cmd_centered(g, poset_spec, cm, fill, exact);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
