// Acceptance runner: executes one numbered verification suite (or all of
// them) and prints a single PASS/FAIL line per suite. Exit status is zero
// only if every executed suite passed.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "betinfo/suites.hpp"

namespace {

void print_line(const betinfo::SuiteResult& r) {
  std::printf("[%s] criterion %d (%s): checks=%zu failures=%zu %s (%.2fs)\n",
              r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.checks,
              r.failures, r.detail.c_str(), r.seconds);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  betinfo::SuiteOptions opt;  // defaults: full trial counts, fixed seed
  bool all_pass = true;

  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
      return 1;
    }
    const betinfo::SuiteResult r = betinfo::run_criterion(n, opt);
    print_line(r);
    all_pass = r.pass;
  } else {
    for (const betinfo::SuiteResult& r : betinfo::run_all_criteria(opt)) {
      print_line(r);
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}
