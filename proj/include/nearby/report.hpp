#pragma once

// Command reports. JSON schema:
//   {"command": str, "kind": str, "passed": bool,
//    "checks": [{"name": str, "passed": bool, "detail": str}], "data": object}
// The text rendering is derived from the same object.

#include <string>
#include <vector>

#include <json.hpp>

namespace nearby {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::string kind;
  std::vector<CheckResult> checks;
  nlohmann::json data = nlohmann::json::object();

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const noexcept;
};

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace nearby
