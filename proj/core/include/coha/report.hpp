#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace coha {

// One checked identity instance. The residual is LHS - RHS in the JSON form
// of whatever model the check runs in; it is null exactly when pass is true.
struct CheckResult {
  std::string relation;
  std::map<std::string, long> params;
  bool pass = true;
  std::optional<nlohmann::json> residual;
  // Free-form observation attached to a failure (e.g. a measured ratio).
  std::string note;

  nlohmann::json to_json() const;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t failures() const;
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void append(const Report& other);
  nlohmann::json to_json() const;
};

}  // namespace coha
