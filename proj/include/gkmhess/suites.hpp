// Named verification suites shared by the command line `verify` subcommand
// and the acceptance test binary.  Reports are deterministic for a fixed
// seed: per-case random streams are derived from the case identifier, and
// concurrent fan-out merges case results in case order, so the thread count
// never changes the output.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkmhess/report.hpp"

namespace gkmhess {

struct SuiteOptions {
  // Restrict suites that range over several ranks to a single n.
  std::optional<int> only_n;
  std::uint64_t seed = 1;
  // Per-case sample count for the randomized suites; 0 means the suite
  // default (which meets the documented minimum).
  int samples = 0;
  // Maximum number of concurrently running cases.
  int threads = 1;
};

// Canonical suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite by name (or "all") and returns the merged report.
// Throws std::invalid_argument for an unknown name.
RunReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace gkmhess
