/*
 * Acceptance gate.  Runs the eleven verification suites, one per acceptance
 * criterion, prints a PASS or FAIL line for each with the check tally, and
 * lists every failing check.  Exits nonzero when any criterion fails.  All
 * comparisons inside the suites are exact.
 */

#include <cstdio>
#include <cstddef>
#include <vector>

#include "qgram/verify.hpp"

int main() {
  struct Criterion {
    const char* label;
    const char* suite;
  };
  const Criterion criteria[] = {
      {"golden derivative expansions", "golden"},
      {"rewriting order semantics", "orders"},
      {"term-count tables and closed forms", "counts"},
      {"derivative word shapes", "shapes"},
      {"Eulerian oracle equivalence", "eulerian"},
      {"cycle-statistic oracle equivalence", "roselle"},
      {"tree-family oracle equivalence", "andre"},
      {"randomized calculus laws", "calculus"},
      {"generating-function identities", "series"},
      {"tree-polynomial recurrences", "recurrences"},
      {"bijection statistic transport", "bijections"},
  };

  bool all_pass = true;
  std::size_t index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    std::vector<qgram::CheckResult> results = qgram::run_suite(c.suite);
    std::size_t passed = 0;
    for (const qgram::CheckResult& r : results)
      if (r.pass) ++passed;
    const bool ok = passed == results.size();
    all_pass = all_pass && ok;
    std::printf("%s criterion %zu: %s (%zu/%zu checks)\n",
                ok ? "PASS" : "FAIL", index, c.label, passed, results.size());
    if (!ok)
      for (const qgram::CheckResult& r : results)
        if (!r.pass)
          std::printf("    failed: %s: %s\n", r.name.c_str(),
                      r.notes.c_str());
  }
  return all_pass ? 0 : 1;
}
