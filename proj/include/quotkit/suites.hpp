#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quotkit/report.hpp"

namespace quotkit {

/// Closed integer interval, written "n" or "lo..hi".
struct Range {
  int lo = 0;
  int hi = 0;

  /// Error(bad_config) on malformed text or lo > hi.
  static Range parse(std::string_view text);
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Parameters a suite reads: r, d, l, m, k, l1, m1, l2, m2, bound, order,
/// trials, len. Absent ranges take suite defaults.
struct SuiteConfig {
  std::string suite;
  std::map<std::string, Range> ranges;
  int threads = 1;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

/// Runs every check of the suite over its grid. Reports come back in grid
/// order whatever the thread count; a module error becomes a failed report.
/// Error(bad_config) for an unknown suite, unknown parameter or bad range.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

/// Fixed-point count reports for the counts subcommand.
std::vector<CheckReport> run_counts(const SuiteConfig& config);

/// One localization report. splitting may be empty (trivial). When the spec
/// has the shape of the Ext formula the closed form is the expected value,
/// otherwise the report only asks for an integer.
CheckReport chi_report(int r, int d, const std::vector<int>& splitting, std::string_view spec);

/// Batch of chi jobs: a JSON list of {"r", "d", "splitting", "spec"}.
/// Error(bad_config) on malformed input.
std::vector<CheckReport> run_batch(std::string_view json_text, int threads);

/// Formula, source phrase and conventions for a suite or check name.
/// Error(unknown_check) otherwise.
std::string explain(std::string_view name);

}  // namespace quotkit
