#pragma once

#include <string>
#include <vector>

namespace corepart {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }

  void add(std::string id, bool ok, std::string expected = "", std::string actual = "") {
    checks.push_back({std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail,
                      std::move(expected), std::move(actual)});
  }

  void skip(std::string id, std::string reason) {
    checks.push_back({std::move(id), CheckStatus::Skip, "", std::move(reason)});
  }

  void merge(const SuiteReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
};

}  // namespace corepart
