#pragma once

#include <stdexcept>
#include <string>

namespace smallworld {

// Event log violates the per-flow ordering contract.
class log_corruption_error : public std::runtime_error {
 public:
  explicit log_corruption_error(const std::string& what) : std::runtime_error(what) {}
};

// A metric has no defined value for the given input, e.g. an average path
// length with no reachable pair or a correlation over constant ranks.
class undefined_metric_error : public std::runtime_error {
 public:
  explicit undefined_metric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smallworld
