#pragma once

#include <stdexcept>
#include <string>

namespace rfclust {

// Failure of a numeric procedure (singular system, degenerate input,
// all EM initializations failed). Distinct from std::invalid_argument,
// which is reserved for configuration and precondition violations.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rfclust
