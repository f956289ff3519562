// Structured pass/fail reports for the verification suites and the CLI.
// JSON output is byte-identical for identical inputs and seed; timing is
// only included when explicitly requested.
#pragma once

#include <string>
#include <vector>

namespace gkmhess {

struct CheckItem {
  std::string id;
  bool passed = false;
  // Empty on success; on failure carries a counterexample payload
  // (serialized element, vertex, and polynomial as appropriate).
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<CheckItem> checks;
  double duration_ms = 0.0;
  // Set when a check failed by throwing rather than by comparing unequal.
  bool internal_error = false;

  bool passed() const;
  int failed_count() const;
  void add(std::string id, bool ok, std::string detail = "");

  std::string to_text() const;
  std::string to_json(bool include_timing = false) const;
};

}  // namespace gkmhess
