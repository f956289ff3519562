#include "gkmhess/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace gkmhess {

bool RunReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int RunReport::failed_count() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.passed) ++n;
  return n;
}

void RunReport::add(std::string id, bool ok, std::string detail) {
  checks.push_back(CheckItem{std::move(id), ok, std::move(detail)});
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "# " << command << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.id << "\n";
    if (!c.passed && !c.detail.empty()) out << "     " << c.detail << "\n";
  }
  out << (internal_error ? "ERROR" : passed() ? "PASS" : "FAIL") << " (" << checks.size()
      << " checks, " << failed_count() << " failed, " << duration_ms << " ms)\n";
  return out.str();
}

std::string RunReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["status"] = internal_error ? "error" : passed() ? "pass" : "fail";
  j["total"] = checks.size();
  j["failed"] = failed_count();
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["id"] = c.id;
    item["status"] = c.passed ? "pass" : "fail";
    if (!c.detail.empty()) item["detail"] = c.detail;
    items.push_back(std::move(item));
  }
  j["checks"] = std::move(items);
  if (include_timing) j["duration_ms"] = duration_ms;
  return j.dump(2);
}

}  // namespace gkmhess
