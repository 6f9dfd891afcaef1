#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace phaseshift::cli {

enum ExitStatus : int { kSuccess = 0, kComputationFailed = 1, kConfigInvalid = 2 };

struct RunOptions {
  std::string out_path;  // overrides config.output_path when non-empty
  bool degrees = false;
};

struct JobOutput {
  std::string csv;
  int passed = 0;  // selftest only
  int failed = 0;
};

/// Computes the job and renders its CSV. Throws phaseshift::Error on numerical failures.
JobOutput render_job(const JobConfig& config, bool degrees);

/// Selftest suite; one CSV row per check.
JobOutput run_selftest(const JobConfig& config);

/// Full command: compute, write the CSV to the output path (or `out` when none), report on `log`.
int run(const JobConfig& config, const RunOptions& options, std::ostream& out, std::ostream& log);

/// Fixed 12-significant-digit formatting used for every numeric CSV field.
std::string format_number(double value);

}  // namespace phaseshift::cli
