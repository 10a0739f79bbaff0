#pragma once

#include "bvlift/config.hpp"

namespace bvlift {

struct CliOptions {
  std::string out_dir = ".";
  std::optional<double> quad_tol;
  std::optional<int> cantor_depth;
  std::optional<int> jmax;
  std::optional<std::uint64_t> seed;
  std::optional<double> p;
  std::optional<double> k;
};

/// Built-in experiments: "oscillation", "jump-smoothing", "shifted-jump",
/// "cantor", "radial". Writes <id>.csv and <id>.svg into out_dir, prints a
/// PASS/FAIL line per bound assertion. Exit code 0 = all pass, 1 = an
/// assertion failed, 2 = evaluation error.
int run_reproduce(const std::string& id, const CliOptions& opts);

/// Executes a parsed config (run_experiment or embedding_experiment).
int run_config(const ExperimentConfig& cfg);

/// Reads, parses, and executes a config file; parse errors are printed
/// with line numbers and yield exit code 2.
int run_config_file(const std::string& path, const CliOptions& opts);

}  // namespace bvlift
