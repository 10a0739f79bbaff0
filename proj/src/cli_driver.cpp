#include "bvlift/cli_driver.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bvlift/families.hpp"
#include "bvlift/report.hpp"

namespace bvlift {

namespace {

std::vector<int> geometric_range(int jmax) {
  std::vector<int> out{1};
  for (int j = 2; j <= jmax; j *= 2) out.push_back(j);
  return out;
}

struct AssertionLog {
  bool all_pass = true;
  void check(bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", what.c_str());
    all_pass = all_pass && ok;
  }
};

CsvTable report_table(const ConvergenceReport& r) {
  CsvTable t;
  t.header = {"j",        "l1_dist",  "lp_dist",          "sup_dist",
              "strict_dist", "area_strict_dist"};
  for (const auto& n : r.integrand_names) t.header.push_back("F_" + n);
  for (const auto& n : r.integrand_names) t.header.push_back("Fgraph_" + n);
  t.header.push_back("lifting_mass_gap");
  t.header.push_back("tail_mass");
  for (const auto& row : r.rows) {
    std::vector<double> v{static_cast<double>(row.index), row.l1_dist,
                          row.lp_dist,    row.sup_dist,   row.strict_dist,
                          row.area_strict_dist};
    v.insert(v.end(), row.F_direct.begin(), row.F_direct.end());
    v.insert(v.end(), row.F_graph.begin(), row.F_graph.end());
    v.push_back(row.lifting_mass_gap);
    v.push_back(row.tail_mass);
    t.rows.push_back(std::move(v));
  }
  // limit row, flagged with index 0: all distances vanish by definition
  std::vector<double> lim{0, 0, 0, 0, 0, 0};
  lim.insert(lim.end(), r.F_limit_direct.begin(), r.F_limit_direct.end());
  lim.insert(lim.end(), r.F_limit_graph.begin(), r.F_limit_graph.end());
  lim.push_back(0.0);
  lim.push_back(0.0);
  t.rows.push_back(std::move(lim));
  return t;
}

void write_report_files(const std::string& stem, const ConvergenceReport& r) {
  write_csv(stem + ".csv", report_table(r));
  std::vector<double> xs;
  SvgSeries strict{"strict_dist", {}}, area{"area_strict_dist", {}},
      sup{"sup_dist", {}};
  for (const auto& row : r.rows) {
    xs.push_back(row.index);
    strict.y.push_back(row.strict_dist);
    area.y.push_back(row.area_strict_dist);
    sup.y.push_back(row.sup_dist);
  }
  write_svg_logx(stem + ".svg", r.family, xs, {strict, area, sup});
}

QuadratureSpec apply_overrides(const CliOptions& opts) {
  QuadratureSpec q;
  if (opts.quad_tol) q.ac_tolerance = *opts.quad_tol;
  if (opts.cantor_depth) q.cantor_depth = *opts.cantor_depth;
  return q;
}

int reproduce_oscillation(const CliOptions& opts) {
  const QuadratureSpec q = apply_overrides(opts);
  FamilyParams params;
  params.index_range = geometric_range(opts.jmax.value_or(64));
  auto fam = make_family("oscillation", params);
  auto rep = run_experiment(fam, {"area", "abs"}, opts.p.value_or(2.0),
                            opts.k.value_or(3.0), q);
  write_report_files(opts.out_dir + "/oscillation", rep);
  AssertionLog log;
  bool tv_ok = true;
  for (const auto& row : rep.rows) tv_ok &= row.lifting_mass_gap <= 1e-9;
  log.check(tv_ok, "total_variation(u_j) = 1 within 1e-9 for all j");
  log.check(rep.rows.back().strict_dist < 1e-2,
            "strict_dist(u_j, x) < 1e-2 at the final index");
  // the column's limit is its area-gap part; the L1 summand still decays
  const double area_gap =
      rep.rows.back().area_strict_dist - rep.rows.back().l1_dist;
  log.check(std::abs(area_gap - 0.0993) <= 1e-3,
            "area_strict_dist tends to 0.0993 (within 1e-3): strict but not "
            "area-strict");
  return log.all_pass ? 0 : 1;
}

int reproduce_jump_smoothing(const CliOptions& opts) {
  const QuadratureSpec q = apply_overrides(opts);
  FamilyParams params;
  params.index_range = geometric_range(opts.jmax.value_or(64));
  auto fam = make_family("jump_smoothing", params);
  auto rep = run_experiment(fam, {"area"}, opts.p.value_or(2.0),
                            opts.k.value_or(3.0), q);
  write_report_files(opts.out_dir + "/jump-smoothing", rep);
  AssertionLog log;
  bool sup_ok = true, dec_ok = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    sup_ok &= std::abs(rep.rows[i].sup_dist - 1.0) <= 1e-12;
    if (i > 0)
      dec_ok &= rep.rows[i].area_strict_dist <=
                rep.rows[i - 1].area_strict_dist + 1e-12;
  }
  log.check(sup_ok, "sup_dist(u_j, u) = 1 within 1e-12 for all j");
  log.check(dec_ok, "area_strict_dist is nonincreasing in j");
  return log.all_pass ? 0 : 1;
}

int reproduce_shifted_jump(const CliOptions& opts) {
  const QuadratureSpec q = apply_overrides(opts);
  FamilyParams params;
  params.index_range = geometric_range(opts.jmax.value_or(64));
  auto fam = make_family("shifted_jump", params);
  auto rep = run_experiment(fam, {"ex55"}, opts.p.value_or(2.0),
                            opts.k.value_or(3.0), q);
  write_report_files(opts.out_dir + "/shifted-jump", rep);
  AssertionLog log;
  bool zero_ok = true;
  for (const auto& row : rep.rows) zero_ok &= row.F_direct.at(0) == 0.0;
  log.check(zero_ok, "F[u_j] = 0 exactly for all j");
  log.check(rep.F_limit_direct.at(0) == 1.0, "F[u] = 1 exactly at the limit");
  return log.all_pass ? 0 : 1;
}

int reproduce_cantor(const CliOptions& opts) {
  const QuadratureSpec q = apply_overrides(opts);
  BVFunction1D u = named_function("cantor");
  auto d = decompose(u, q);
  const double area = area_functional(u, q);
  CsvTable t;
  t.header = {"ac_mass", "jump_mass", "cantor_mass", "area_functional"};
  t.rows.push_back({d.ac_mass, d.jump_mass, d.cantor_mass, area});
  write_csv(opts.out_dir + "/cantor.csv", t);
  const int n = 256;
  std::vector<double> xs;
  SvgSeries vals{"u(x)", {}};
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / (n + 1);
    xs.push_back(x);
    vals.y.push_back(u(x)[0]);
  }
  write_svg_logx(opts.out_dir + "/cantor.svg", "cantor staircase", xs, {vals});
  std::printf("decomposition: ac=%g jump=%g cantor=%g\n", d.ac_mass,
              d.jump_mass, d.cantor_mass);
  AssertionLog log;
  log.check(d.ac_mass <= 1e-12 && d.jump_mass == 0.0 &&
                std::abs(d.cantor_mass - 1.0) <= 1e-12,
            "decomposition is ac=0 jump=0 cantor=1");
  log.check(std::abs(area - 2.0) <= 1e-9,
            "area functional of the staircase equals 2");
  return log.all_pass ? 0 : 1;
}

int reproduce_radial(const CliOptions& opts) {
  const QuadratureSpec q = apply_overrides(opts);
  FamilyParams params;
  params.dimension = 2;
  params.index_range = geometric_range(opts.jmax.value_or(16384));
  auto fam = make_radial_family("radial_steepening", params);
  auto rep = embedding_experiment(fam, opts.p.value_or(0.0), q);
  CsvTable t;
  t.header = {"j", "strict_dist", "lp_dist", "sup_dist"};
  std::vector<double> xs;
  SvgSeries strict{"strict_dist", {}}, lp{"lp_dist", {}}, sup{"sup_dist", {}};
  for (const auto& row : rep.rows) {
    t.rows.push_back({static_cast<double>(row.index), row.strict_dist,
                      row.lp_dist, row.sup_dist});
    xs.push_back(row.index);
    strict.y.push_back(row.strict_dist);
    lp.y.push_back(row.lp_dist);
    sup.y.push_back(row.sup_dist);
  }
  write_csv(opts.out_dir + "/radial.csv", t);
  write_svg_logx(opts.out_dir + "/radial.svg", "radial embedding (d=2)", xs,
                 {strict, lp, sup});
  AssertionLog log;
  log.check(rep.rows.back().lp_dist < 1e-2,
            "critical L^p distance < 1e-2 at the final index (d=2)");
  bool sup_ok = true;
  for (const auto& row : rep.rows)
    sup_ok &= std::abs(row.sup_dist - 1.0) <= 1e-12;
  log.check(sup_ok, "sup distance stays at 1 for all j");
  return log.all_pass ? 0 : 1;
}

}  // namespace

int run_reproduce(const std::string& id, const CliOptions& opts) {
  try {
    if (id == "oscillation") return reproduce_oscillation(opts);
    if (id == "jump-smoothing" || id == "jump_smoothing")
      return reproduce_jump_smoothing(opts);
    if (id == "shifted-jump" || id == "shifted_jump")
      return reproduce_shifted_jump(opts);
    if (id == "cantor") return reproduce_cantor(opts);
    if (id == "radial") return reproduce_radial(opts);
    std::fprintf(stderr, "unknown example id '%s'\n", id.c_str());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "evaluation error: %s\n", e.what());
    return 2;
  }
}

int run_config(const ExperimentConfig& cfg) {
  try {
    const std::string stem = cfg.out_dir + "/" + cfg.name;
    if (cfg.family.rfind("radial", 0) == 0) {
      FamilyParams params;
      params.dimension = cfg.dimension;
      params.index_range =
          cfg.indices.empty() ? geometric_range(cfg.jmax) : cfg.indices;
      auto fam = make_radial_family(cfg.family, params);
      auto rep = embedding_experiment(fam, cfg.p, cfg.quad);
      CsvTable t;
      t.header = {"j", "strict_dist", "lp_dist", "sup_dist"};
      std::vector<double> xs;
      SvgSeries strict{"strict_dist", {}}, lp{"lp_dist", {}}, sup{"sup_dist", {}};
      for (const auto& row : rep.rows) {
        t.rows.push_back({static_cast<double>(row.index), row.strict_dist,
                          row.lp_dist, row.sup_dist});
        xs.push_back(row.index);
        strict.y.push_back(row.strict_dist);
        lp.y.push_back(row.lp_dist);
        sup.y.push_back(row.sup_dist);
      }
      write_csv(stem + ".csv", t);
      write_svg_logx(stem + ".svg", rep.family, xs, {strict, lp, sup});
      return 0;
    }
    FamilyParams params;
    if (!cfg.indices.empty())
      params.index_range = cfg.indices;
    else if (cfg.family != "mollified")
      params.index_range = geometric_range(cfg.jmax);
    params.base_name = cfg.base;
    auto fam = make_family(cfg.family, params);
    auto rep = run_experiment(fam, cfg.integrands, cfg.p, cfg.k, cfg.quad);
    write_report_files(stem, rep);
    for (const auto& row : rep.rows)
      if (!row.diagnostic.empty()) {
        std::fprintf(stderr, "row j=%d: %s\n", row.index, row.diagnostic.c_str());
        return 2;
      }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "evaluation error: %s\n", e.what());
    return 2;
  }
}

int run_config_file(const std::string& path, const CliOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "cannot open config file '%s'\n", path.c_str());
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  auto parsed = parse_config(buf.str());
  if (!parsed.config) {
    for (const auto& e : parsed.errors)
      std::fprintf(stderr, "%s:%d: %s\n", path.c_str(), e.line,
                   e.message.c_str());
    return 2;
  }
  ExperimentConfig cfg = *parsed.config;
  if (!opts.out_dir.empty() && opts.out_dir != ".") cfg.out_dir = opts.out_dir;
  if (opts.quad_tol) cfg.quad.ac_tolerance = *opts.quad_tol;
  if (opts.cantor_depth) cfg.quad.cantor_depth = *opts.cantor_depth;
  if (opts.jmax) cfg.jmax = *opts.jmax;
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.p) cfg.p = *opts.p;
  if (opts.k) cfg.k = *opts.k;
  return run_config(cfg);
}

}  // namespace bvlift
