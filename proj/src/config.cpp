#include "bvlift/config.hpp"

#include <algorithm>
#include <sstream>

namespace bvlift {

namespace {

const char* kFamilies[] = {"oscillation", "jump_smoothing", "shifted_jump",
                           "mollified", "radial_steepening",
                           "radial_mollified_step"};
const char* kBases[] = {"linear", "smooth", "step", "halfstep", "three-jump",
                        "two-jump-quad", "cantor", "cantor-mix"};
const char* kIntegrands[] = {"abs", "area", "nonconvex", "ex55"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string normalized(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

bool known_family(const std::string& name) {
  const std::string n = normalized(name);
  for (const char* f : kFamilies)
    if (n == f) return true;
  return false;
}

bool known_base(const std::string& name) {
  for (const char* b : kBases)
    if (name == b) return true;
  return false;
}

bool known_integrand(const std::string& name) {
  for (const char* f : kIntegrands)
    if (name == f) return true;
  if (name.rfind("ygrowth-", 0) == 0) {
    const std::string suffix = name.substr(8);
    if (suffix == "p") return true;
    try {
      std::size_t pos = 0;
      const double p = std::stod(suffix, &pos);
      return pos == suffix.size() && p >= 1.0;
    } catch (...) {
      return false;
    }
  }
  return false;
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

bool parse_int(const std::string& s, long long& out) {
  try {
    std::size_t pos = 0;
    out = std::stoll(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

ParseResult parse_config(const std::string& text) {
  ParseResult result;
  ExperimentConfig cfg;
  std::vector<ConfigError>& errors = result.errors;
  std::istringstream in(text);
  std::string raw;
  std::string section = "experiment";
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back({lineno, "unterminated section header"});
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "experiment" && section != "quadrature" &&
          section != "output")
        errors.push_back({lineno, "unknown section [" + section + "]"});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back({lineno, "expected key=value, got '" + line + "'"});
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto bad = [&](const std::string& msg) { errors.push_back({lineno, msg}); };
    long long iv = 0;
    double dv = 0.0;
    if (section == "quadrature") {
      if (key == "theta_order" && parse_int(value, iv) && iv >= 2)
        cfg.quad.theta_order = static_cast<int>(iv);
      else if (key == "ac_tolerance" && parse_double(value, dv) && dv > 0.0)
        cfg.quad.ac_tolerance = dv;
      else if (key == "cantor_depth" && parse_int(value, iv) && iv >= 1)
        cfg.quad.cantor_depth = static_cast<int>(iv);
      else if (key == "subdivision_budget" && parse_int(value, iv) && iv >= 1)
        cfg.quad.subdivision_budget = iv;
      else
        bad("bad [quadrature] entry '" + key + "=" + value + "'");
      continue;
    }
    if (section == "output") {
      if (key == "dir")
        cfg.out_dir = value;
      else if (key == "name")
        cfg.name = value;
      else
        bad("bad [output] entry '" + key + "'");
      continue;
    }
    if (key == "family") {
      if (known_family(value))
        cfg.family = normalized(value);
      else
        bad("unknown family '" + value + "'");
    } else if (key == "base") {
      if (known_base(value))
        cfg.base = value;
      else
        bad("unknown base function '" + value + "'");
    } else if (key == "integrands") {
      std::vector<std::string> names;
      std::istringstream parts(value);
      std::string item;
      bool ok = true;
      while (std::getline(parts, item, ',')) {
        item = trim(item);
        if (!known_integrand(item)) {
          bad("unknown integrand '" + item + "'");
          ok = false;
          break;
        }
        names.push_back(item);
      }
      if (ok && !names.empty()) cfg.integrands = names;
    } else if (key == "p") {
      if (parse_double(value, dv) && dv >= 1.0)
        cfg.p = dv;
      else
        bad("p must be a real >= 1");
    } else if (key == "k") {
      if (parse_double(value, dv) && dv >= 0.0)
        cfg.k = dv;
      else
        bad("k must be a nonnegative real");
    } else if (key == "jmax") {
      if (parse_int(value, iv) && iv >= 1)
        cfg.jmax = static_cast<int>(iv);
      else
        bad("jmax must be a positive integer");
    } else if (key == "indices") {
      std::vector<int> idx;
      std::istringstream parts(value);
      std::string item;
      bool ok = true;
      while (std::getline(parts, item, ',')) {
        if (!parse_int(trim(item), iv) || iv < 1) {
          bad("indices must be positive integers");
          ok = false;
          break;
        }
        idx.push_back(static_cast<int>(iv));
      }
      if (ok && !idx.empty()) cfg.indices = idx;
    } else if (key == "dimension") {
      if (parse_int(value, iv) && iv >= 1)
        cfg.dimension = static_cast<int>(iv);
      else
        bad("dimension must be a positive integer");
    } else if (key == "seed") {
      if (parse_int(value, iv) && iv >= 0)
        cfg.seed = static_cast<std::uint64_t>(iv);
      else
        bad("seed must be a nonnegative integer");
    } else {
      bad("unknown key '" + key + "'");
    }
  }
  if (errors.empty()) result.config = cfg;
  return result;
}

}  // namespace bvlift
