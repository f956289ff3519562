// Acceptance gate: runs each verification suite at its contractual scale and
// enforces the wall-clock budget, printing one line per criterion.  Exits
// nonzero when any criterion fails a check or its budget.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "gkmhess/suites.hpp"

namespace {

int thread_count() {
  int threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("GKM_HESS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end && *end == '\0' && v >= 1) threads = std::min<long>(threads, v);
  }
  return threads;
}

struct Criterion {
  int number;
  std::string suite;
  std::string label;
  double budget_ms;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "appendix-fixtures", "frozen rank-3 basis tables, arrows included", 1000},
      {2, "worked-examples", "phi images and the two action examples", 1000},
      {3, "minimal-cases", "three small condition sets, full chains", 1000},
      {4, "lemma-compute", "thirteen divided-difference identities, 200 samples per rank",
       30000},
      {5, "braid", "square-zero, braid, commutation, 100 samples per rank", 30000},
      {6, "stability", "image stays in the subring for every stable pair, 50 samples",
       60000},
      {7, "theorem-stable", "round-trip decomposition for every stable pair, 50 samples",
       60000},
      {8, "theorem-almost-stable",
       "projections and inclusions for every almost-stable pair, 50 samples", 120000},
      {9, "double-schubert", "recursion tables, specialization, flow-up shape", 30000},
      {10, "modular", "coloring identity for every modular triple through rank 5", 300000},
      {11, "graded-modular", "graded identity for every modular triple through rank 4",
       120000},
      {12, "involution", "kernel = fixed subring on the criterion-7 samples", 60000},
  };

  gkmhess::SuiteOptions opts;
  opts.seed = 1;
  opts.threads = thread_count();

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    gkmhess::RunReport report;
    bool threw = false;
    std::string what;
    try {
      report = gkmhess::run_suite(c.suite, opts);
    } catch (const std::exception& e) {
      threw = true;
      what = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

    const bool checks_ok = !threw && !report.internal_error && report.passed();
    const bool time_ok = ms <= c.budget_ms;
    const bool ok = checks_ok && time_ok;
    all_ok = all_ok && ok;

    std::printf("%s criterion %2d [%s]: %s (%.0f ms, budget %.0f ms, %zu checks)\n",
                ok ? "PASS" : "FAIL", c.number, c.suite.c_str(), c.label.c_str(), ms,
                c.budget_ms, report.checks.size());
    if (threw) {
      std::printf("     exception: %s\n", what.c_str());
    } else if (!checks_ok) {
      int shown = 0;
      for (const auto& item : report.checks) {
        if (item.passed) continue;
        std::printf("     failed: %s%s%s\n", item.id.c_str(),
                    item.detail.empty() ? "" : " -- ", item.detail.c_str());
        if (++shown == 3) break;
      }
      const int failed = report.failed_count();
      if (failed > shown) std::printf("     (%d more failures)\n", failed - shown);
    } else if (!time_ok) {
      std::printf("     over budget by %.0f ms\n", ms - c.budget_ms);
    }
    std::fflush(stdout);
  }

  std::printf("%s\n", all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return all_ok ? 0 : 1;
}
