#include <doctest.h>

#include <random>

#include "cpairs/report.hpp"

using namespace cpairs;

namespace {

nlohmann::json random_value(std::mt19937_64& rng, int depth) {
  const int kind = std::uniform_int_distribution<int>(0, depth > 0 ? 6 : 4)(rng);
  switch (kind) {
    case 0:
      return nullptr;
    case 1:
      return std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    case 2:
      return std::uniform_int_distribution<std::int64_t>(-1000000, 1000000)(rng);
    case 3: {
      static const std::vector<std::string> words = {"a", "b,c", "say \"hi\"", "line\nbreak", "", "12345678901234567890"};
      return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
    }
    case 4:
      return to_string(BigCount(1) << std::uniform_int_distribution<int>(0, 200)(rng));
    case 5: {
      auto a = nlohmann::json::array();
      const int len = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int i = 0; i < len; ++i) a.push_back(random_value(rng, depth - 1));
      return a;
    }
    default: {
      auto o = nlohmann::json::object();
      const int len = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int i = 0; i < len; ++i) o["k" + std::to_string(i)] = random_value(rng, depth - 1);
      return o;
    }
  }
}

Report random_report(std::mt19937_64& rng) {
  Report r;
  r.config = {{"seed", std::uniform_int_distribution<int>(0, 100)(rng)}};
  const int count = std::uniform_int_distribution<int>(0, 6)(rng);
  for (int i = 0; i < count; ++i) {
    Check c;
    c.claim_id = "claim." + std::to_string(i);
    c.parameters = {{"n", i}, {"extra", random_value(rng, 2)}};
    c.expected = random_value(rng, 2);
    c.actual = random_value(rng, 2);
    c.status = static_cast<Status>(std::uniform_int_distribution<int>(0, 2)(rng));
    r.checks.push_back(std::move(c));
  }
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) r.timestamp = "2026-01-01T00:00:00Z";
  return r;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("empty report") {
    const Report r;
    const auto text = emit_json(r);
    CHECK(text == "{\n  \"checks\": [],\n  \"config\": {},\n  \"version\": \"1.0.0\"\n}\n");
    CHECK(report_from_json(nlohmann::json::parse(text)) == r);
    CHECK(emit_csv(r) == "claim_id,parameters,expected,actual,status\n");
    CHECK(parse_csv(emit_csv(r)).empty());
    CHECK_FALSE(r.any_fail());
  }

  TEST_CASE("one-row CSV") {
    Report r;
    r.checks.push_back(make_check("scd.invariants", {{"k", 2}, {"n", 3}}, {{"chains", "7"}}, {{"chains", 7}}, true));
    CHECK(emit_csv(r) ==
          "claim_id,parameters,expected,actual,status\n"
          "scd.invariants,\"{\"\"k\"\":2,\"\"n\"\":3}\",\"{\"\"chains\"\":\"\"7\"\"}\",\"{\"\"chains\"\":7}\",pass\n");
    CHECK(parse_csv(emit_csv(r)) == r.checks);
  }

  TEST_CASE("status names") {
    for (Status s : {Status::Pass, Status::Fail, Status::Info}) CHECK(parse_status(status_name(s)) == s);
    CHECK_THROWS(parse_status("maybe"));
    Report r;
    r.checks.push_back(make_info("x", {}, nullptr, 1));
    CHECK_FALSE(r.any_fail());
    r.checks.push_back(make_check("y", {}, 1, 2, false));
    CHECK(r.any_fail());
  }

  TEST_CASE("JSON and CSV round trips over random reports") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 100; ++rep) {
      const Report r = random_report(rng);
      const auto text = emit_json(r);
      CHECK(report_from_json(nlohmann::json::parse(text)) == r);
      CHECK(emit_json(report_from_json(nlohmann::json::parse(text))) == text);
      CHECK(parse_csv(emit_csv(r)) == r.checks);
    }
  }

  TEST_CASE("CSV parser errors") {
    CHECK_THROWS(parse_csv("a,b\n"));
    CHECK_THROWS(parse_csv("claim_id,parameters,expected,actual,status\nx,{},1\n"));
    CHECK_THROWS(parse_csv("claim_id,parameters,expected,actual,status\n\"x,{},1,2,pass\n"));
  }
}
