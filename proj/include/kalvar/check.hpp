#pragma once

#include <string>
#include <vector>

namespace kalvar {

/// Outcome of a structured consistency check. A failing check is data, not an exception.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace kalvar
