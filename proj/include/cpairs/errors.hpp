#pragma once

#include <stdexcept>
#include <string>

namespace cpairs {

/// Input is too large for the requested exact computation.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation is not defined for this poset (e.g. k != 2 for top compression).
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cpairs
