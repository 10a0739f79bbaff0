#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bvlift/quadrature.hpp"

namespace bvlift {

struct ExperimentConfig {
  std::string name = "experiment";
  std::string family = "oscillation";
  std::string base = "step";  // limit function of a mollified family
  std::vector<std::string> integrands = {"area"};
  double p = 2.0;
  double k = 3.0;
  int jmax = 64;
  std::vector<int> indices;  // explicit override of the geometric range
  int dimension = 2;         // radial families
  QuadratureSpec quad;
  std::string out_dir = ".";
  std::uint64_t seed = 42;
};

struct ConfigError {
  int line = 0;
  std::string message;
};

struct ParseResult {
  std::optional<ExperimentConfig> config;  // empty when errors exist
  std::vector<ConfigError> errors;
};

/// Line-oriented key=value format with optional [section] headers
/// ([experiment], [quadrature], [output]); '#' starts a comment. Unknown
/// keys, malformed lines, and unknown registry names are reported with
/// their line numbers.
ParseResult parse_config(const std::string& text);

}  // namespace bvlift
