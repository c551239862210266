#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace logmaj {

struct RunConfig {
  uint64_t seed = 42;
  std::map<std::string, double> tolerances;  // overrides: karcher_tol, quad_eps, eq_tol, ...
  int max_dim = 6;                           // ensemble dimension cap (>= 2)
  int threads = 0;                           // 0: LOGMAJ_THREADS or hardware
  std::string out;                           // report file; empty = stdout summary only
  std::string format = "json";               // json | csv

  double tol(const std::string& key, double fallback) const;
  int effective_threads() const;
};

struct SuiteOutcome {
  std::string suite;
  long cases = 0;
  long failures = 0;
  double worst_margin = 0.0;  // min slack across all checks; >= 0 iff no failure
  uint64_t seed = 0;
  double seconds = 0.0;
  std::vector<std::string> case_lines;
};

// araki, extended, divergence, gt, karcher, taylor, eqcase, ltk
const std::vector<std::string>& suite_names();

// Runs one named suite (or "all"). Per-case errors are recorded as case
// failures, never thrown.
SuiteOutcome run_suite(const std::string& name, const RunConfig& cfg);

std::string summary_json(const SuiteOutcome& outcome);

// case lines in cfg.format plus, for json, the summary as the last line
void write_report(const SuiteOutcome& outcome, const RunConfig& cfg);

}  // namespace logmaj
