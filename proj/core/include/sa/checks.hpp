#pragma once

#include "sa/io.hpp"
#include "sa/lattice.hpp"
#include "sa/zoo.hpp"

namespace sa {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string theorem;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;  // witness on failure, reason on skip, notes on pass
};

struct SuiteOptions {
  std::uint64_t seed = kSampleSeed;
  int subset_samples = 40;          // random subsets per subset-quantified law
  int exhaustive_subset_limit = 10; // ≤ this universe: enumerate all subsets
  int bruteforce_limit = 16;        // ≤ this carrier: SA(V) by brute force
  std::vector<std::string> theorems;  // filter, e.g. {"2.9"}; empty = all
};

// Theorem/property identifiers the suite always reports on, in order.
const std::vector<std::string>& theorem_registry();

// True if `filter` names a registry entry ("thm-2.9" or bare "2.9").
bool known_theorem(const std::string& filter);

// Runs every registry entry against one instance. Entries excluded by the
// filter are reported as skipped; a pass/fail is never silently absent.
std::vector<CheckResult> run_theorem_suite(const ZooInstance& z,
                                           const SuiteOptions& opts);

struct InstanceReport {
  std::string instance;
  std::string verify_mode;  // axiom-verification provenance
  std::vector<CheckResult> checks;
};

// Checks all instances (ordered by name) and assembles the deterministic
// report. exit_code: 0 all pass, 1 some check failed.
struct RunReport {
  std::vector<InstanceReport> instances;
  int exit_code = 0;
};

RunReport run_checks(const std::vector<ZooInstance>& instances,
                     const SuiteOptions& opts);

Json report_to_json(const RunReport& r, const SuiteOptions& opts);

}  // namespace sa
