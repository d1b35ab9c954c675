#include "nearby/report.hpp"

#include <sstream>

namespace nearby {

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool Report::passed() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"command", r.command}, {"kind", r.kind}, {"passed", r.passed()}, {"checks", std::move(checks)},
          {"data", r.data}};
}

namespace {

void render_data(std::ostringstream& os, const nlohmann::json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render_data(os, value, indent + "  ");
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << indent << key << ": " << value.dump() << '\n';
    }
  }
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  if (!r.kind.empty()) os << " (" << r.kind << ")";
  os << '\n';
  for (const auto& c : r.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  render_data(os, r.data, "");
  if (!r.checks.empty()) os << (r.passed() ? "result: PASS" : "result: FAIL") << '\n';
  return os.str();
}

}  // namespace nearby
