#include "coha/report.hpp"

#include <algorithm>

namespace coha {

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j;
  j["relation"] = relation;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["pass"] = pass;
  j["residual"] = residual ? *residual : nlohmann::json(nullptr);
  if (!note.empty()) j["note"] = note;
  return j;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  return arr;
}

}  // namespace coha
