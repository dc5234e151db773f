#pragma once

#include <cstdint>
#include <string>
#include <vector>

/// Acceptance suites: ten self-contained property checks, each returning a
/// counted pass/fail report. Every suite draws its own instances from a
/// seeded generator, so runs are reproducible; suites that compare closed
/// forms against the numeric oracle accept oracle tuning knobs.
namespace betinfo {

struct SuiteOptions {
  std::size_t trials = 0;        // 0 = suite default
  std::uint64_t seed = 20260822;
  std::size_t oracle_grid = 0;   // 0 = optimizer default
  std::size_t oracle_restarts = 0;
};

struct SuiteResult {
  int id;                 // 1..10
  std::string name;
  bool pass;
  std::size_t checks;     // individual comparisons performed
  std::size_t failures;   // comparisons out of tolerance
  std::string detail;     // human-readable summary (counts, worst residuals)
  double seconds;
};

/// Run acceptance criterion `id` (1..10). Throws std::invalid_argument for an
/// unknown id.
SuiteResult run_criterion(int id, const SuiteOptions& opt = {});

std::vector<SuiteResult> run_all_criteria(const SuiteOptions& opt = {});

/// Named front end used by the CLI: canonical names (one per criterion) plus
/// accepted aliases. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<std::string> suite_names();

}  // namespace betinfo
