#ifndef MULTIQUILT_REPORT_HPP
#define MULTIQUILT_REPORT_HPP

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace multiquilt {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;

  nlohmann::json to_json() const { return {{"name", name}, {"passed", passed}, {"detail", detail}}; }
};

inline bool all_passed(const std::vector<CheckResult>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const CheckResult& c) { return c.passed; });
}

inline nlohmann::json checks_to_json(const std::vector<CheckResult>& cs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : cs) a.push_back(c.to_json());
  return a;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_REPORT_HPP
