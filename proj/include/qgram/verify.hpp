#pragma once

/*
 * Verification suites.
 *
 * Each suite bundles a family of exact checks: golden expansions, rewriting
 * orders, term-count sequences, word-shape classification, statistic
 * generating polynomials, randomized calculus laws, series identities,
 * recurrences, and bijection transports.  A check either passes exactly or
 * fails; there are no tolerances anywhere.
 *
 * Suites are addressed by name so that both the command line tool and the
 * acceptance runner can share one implementation.  run_suite("all", ...)
 * concatenates every suite.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace qgram {

/* Outcome of one named check. `notes` carries a short diagnostic on failure. */
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string notes;
};

/*
 * Knobs shared by the suites.  `order` bounds series truncation, `steps`
 * bounds derivative depth where a suite honours it, `cases` scales the
 * randomized law checks, and `seed` fixes the RNG so runs are reproducible.
 */
struct VerifyOptions {
  int order = 8;
  int steps = 0;
  int cases = 200;
  std::uint64_t seed = 0xC0FFEEULL;
};

/* Names accepted by run_suite, in display order. */
std::vector<std::string> suite_names();

/*
 * Run one suite by name ("golden", "orders", "counts", "shapes", "eulerian",
 * "roselle", "andre", "calculus", "series", "q-eulerian", "recurrences",
 * "bijections", or "all").  Unknown names raise Err::UnknownName.
 */
std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& opt = {});

}  // namespace qgram
