#pragma once

#include <iosfwd>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdelta/graph.hpp"
#include "kdelta/stats.hpp"

namespace kdelta::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// Bad flag combinations found after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "--delta" value: a plain integer, "pNN", or a fraction in (0, 1] that picks
// the nearest-rank IET percentile of the loaded graph.
struct DeltaSpec {
  std::string text;
  std::optional<Timestamp> value;
  std::optional<double> fraction;
};
DeltaSpec parse_delta_spec(const std::string& text);
Timestamp resolve_delta(const DeltaSpec& spec, const TemporalGraph& g);

struct RunConfig {
  std::string command;  // core truss components stats shells verify generate
  std::string input = "-";
  std::string output = "-";
  std::vector<DeltaSpec> deltas;
  std::optional<Weight> k;
  std::optional<TimeInterval> interval;
  bool labeled = false;
  LabelClasses classes;
  char delimiter = '\t';

  // components
  std::optional<Weight> within_core;
  std::optional<Weight> within_truss;
  // shells
  std::string kind = "core";
  bool at_least = false;
  // stats
  bool percentiles = false;
  std::vector<double> fractions{0.10, 0.25, 0.50, 0.75};
  std::optional<std::string> sweep;
  bool label_report = false;
  std::string summary;
  // generate
  std::uint64_t seed = 1;
  std::size_t nodes = 100;
  std::size_t edges = 1000;
  Timestamp t_min = 0;
  Timestamp t_max = 10000;
  double fact_fraction = -1.0;
};

// Executes one command. Throws UsageError for conflicting options and
// kdelta::Error for domain failures.
// Results for "-" go to `out`; load reports and notes go to `log`.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

// Parses argv, runs, and maps exceptions to exit codes.
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

// Writes `content` to `path` through a temporary file in the directory named
// by KDELTA_TMPDIR (or the system temp dir), then moves it into place. "-"
// writes to `out` instead.
void write_output(const std::string& path, const std::string& content,
                  std::ostream& out);

}  // namespace kdelta::cli
