#include <CLI11.hpp>

#include "bvlift/cli_driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bvlift: BV convergence experiments"};
  app.require_subcommand(1);

  bvlift::CliOptions opts;
  double quad_tol = 0.0;
  int cantor_depth = 0, jmax = 0;
  std::uint64_t seed = 0;
  double p = 0.0, k = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--quad-tol", quad_tol, "adaptive quadrature tolerance");
    cmd->add_option("--cantor-depth", cantor_depth, "IFS refinement depth");
    cmd->add_option("--jmax", jmax, "largest family index");
    cmd->add_option("--seed", seed, "seed for randomized dictionaries");
    cmd->add_option("--p", p, "exponent for the lp_dist column");
    cmd->add_option("--k", k, "tail-mass radius");
  };

  std::string example_id, config_path;
  auto* reproduce = app.add_subcommand("reproduce", "run a built-in example");
  reproduce->add_option("id", example_id, "example identifier")->required();
  add_common(reproduce);
  auto* run = app.add_subcommand("run", "run a config-file experiment");
  run->add_option("config", config_path, "config file path")->required();
  add_common(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto count = [&](const char* name) {
    return reproduce->count(name) + run->count(name);
  };
  if (count("--quad-tol")) opts.quad_tol = quad_tol;
  if (count("--cantor-depth")) opts.cantor_depth = cantor_depth;
  if (count("--jmax")) opts.jmax = jmax;
  if (count("--seed")) opts.seed = seed;
  if (count("--p")) opts.p = p;
  if (count("--k")) opts.k = k;

  try {
    if (reproduce->parsed()) return bvlift::run_reproduce(example_id, opts);
    return bvlift::run_config_file(config_path, opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
