#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpairs/report.hpp"

namespace cpairs {

/// Unknown suite names and other bad invocations.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Grid overrides; an unset field means the suite's default grid.
struct SuiteParams {
  std::uint64_t seed = 1;
  int workers = 1;
  std::size_t samples = 1000;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> q;
};

const std::vector<std::string>& suite_names();

/// Checks of one suite, in a fixed order.
std::vector<Check> run_suite(const std::string& name, const SuiteParams& params);

/// All named suites into one report. Throws UsageError for unknown names
/// before running anything.
Report run_verify_suite(const std::vector<std::string>& names, const SuiteParams& params);

}  // namespace cpairs
