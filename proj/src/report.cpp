#include "cpairs/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpairs {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      row.push_back(std::move(cell));
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      cell += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted CSV cell");
  if (!cell.empty() || !row.empty()) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Info:
      return "info";
  }
  return "info";
}

Status parse_status(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "info") return Status::Info;
  throw std::runtime_error("unknown status '" + std::string(s) + "'");
}

Check make_check(std::string claim_id, nlohmann::json parameters, nlohmann::json expected, nlohmann::json actual,
                 bool ok) {
  return {std::move(claim_id), std::move(parameters), std::move(expected), std::move(actual),
          ok ? Status::Pass : Status::Fail};
}

Check make_info(std::string claim_id, nlohmann::json parameters, nlohmann::json expected, nlohmann::json actual) {
  return {std::move(claim_id), std::move(parameters), std::move(expected), std::move(actual), Status::Info};
}

bool Report::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"claim_id", c.claim_id},
                      {"parameters", c.parameters},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"status", status_name(c.status)}});
  nlohmann::json j = {{"version", r.version}, {"config", r.config}, {"checks", checks}};
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  r.config = j.at("config");
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("claim_id").get<std::string>(), c.at("parameters"), c.at("expected"), c.at("actual"),
                        parse_status(c.at("status").get<std::string>())});
  if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

std::string emit_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string emit_csv(const Report& r) {
  std::string out = "claim_id,parameters,expected,actual,status\n";
  for (const auto& c : r.checks) {
    out += csv_cell(c.claim_id) + ',' + csv_cell(c.parameters.dump()) + ',' + csv_cell(c.expected.dump()) + ',' +
           csv_cell(c.actual.dump()) + ',' + std::string(status_name(c.status)) + '\n';
  }
  return out;
}

std::vector<Check> parse_csv(std::string_view text) {
  const auto rows = csv_rows(text);
  if (rows.empty() || rows.front() != std::vector<std::string>{"claim_id", "parameters", "expected", "actual", "status"})
    throw std::runtime_error("CSV header mismatch");
  std::vector<Check> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != 5) throw std::runtime_error("CSV row has the wrong number of cells");
    out.push_back({row[0], nlohmann::json::parse(row[1]), nlohmann::json::parse(row[2]), nlohmann::json::parse(row[3]),
                   parse_status(row[4])});
  }
  return out;
}

}  // namespace cpairs
