#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpairs/bigcount.hpp"

namespace cpairs {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Status { Pass, Fail, Info };

std::string_view status_name(Status s);
Status parse_status(std::string_view s);

/// One named verification outcome.
struct Check {
  std::string claim_id;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json actual;
  Status status = Status::Info;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Pass when `ok`, otherwise fail.
Check make_check(std::string claim_id, nlohmann::json parameters, nlohmann::json expected, nlohmann::json actual,
                 bool ok);
Check make_info(std::string claim_id, nlohmann::json parameters, nlohmann::json expected, nlohmann::json actual);

struct Report {
  std::string version{kToolVersion};
  nlohmann::json config = nlohmann::json::object();
  std::vector<Check> checks;
  std::optional<std::string> timestamp;

  bool any_fail() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Exact integers travel as decimal strings.
inline nlohmann::json big_json(const BigCount& v) { return to_string(v); }

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Keys sorted, two-space indent, trailing newline.
std::string emit_json(const Report& r);
/// Header plus one row per check; cells holding JSON are dumped compactly.
std::string emit_csv(const Report& r);
/// Inverse of emit_csv (version, config and timestamp are not carried).
std::vector<Check> parse_csv(std::string_view text);

}  // namespace cpairs
