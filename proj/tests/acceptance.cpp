// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Runs the full experiment surface end to end.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "bvlift/families.hpp"

using namespace bvlift;

namespace {

constexpr double kOscillationAreaLimit = 1.5131795766437733;

int failures = 0;

void report(bool ok, const std::string& what) {
  std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

bool criterion_oscillation() {
  auto fam = make_family("oscillation");
  for (int j = 1; j <= 64; ++j)
    if (std::abs(total_variation(fam.generator(j)) - 1.0) > 1e-9) return false;
  auto u64 = fam.generator(64);
  if (strict_distance(u64, *fam.limit) >= 1e-2) return false;
  const double area = area_functional(u64);
  if (std::abs(area - kOscillationAreaLimit) > 1e-3) return false;
  return kOscillationAreaLimit - std::sqrt(2.0) > 0.09;
}

bool criterion_atomic_exactness() {
  auto f = make_integrand("ex55");
  auto fam = make_family("shifted_jump");
  for (int j : fam.index_range)
    if (evaluate_F(f, fam.generator(j)).total != 0.0) return false;
  return evaluate_F(f, *fam.limit).total == 1.0;
}

bool criterion_sup_vs_area_strict() {
  auto fam = make_family("jump_smoothing");
  for (int j : fam.index_range)
    if (std::abs(sup_distance(fam.generator(j), *fam.limit) - 1.0) > 1e-12)
      return false;
  return area_strict_distance(fam.generator(64), *fam.limit) < 1e-2;
}

bool criterion_cross_path() {
  for (const char* fname : {"abs", "area", "nonconvex", "ygrowth-2", "ex55"}) {
    auto f = make_integrand(fname);
    for (const auto& [uname, u] : generator_suite()) {
      auto a = evaluate_F(f, u);
      auto b = evaluate_F_graph(f, u);
      if (std::abs(a.total - b.total) > 1e-6) return false;
    }
  }
  return true;
}

bool criterion_lifting_identities() {
  for (const auto& [name, u] : generator_suite()) {
    auto mu = build_lifting(u);
    if (std::abs(total_mass(mu) - total_variation(u)) > 1e-9) return false;
    auto dict =
        make_bump_dictionary(2026, 20, u.domain(), u.dim(), u.sup_norm() + 0.5);
    for (const auto& phi : dict)
      if (std::abs(Q(phi, u, mu)) > 1e-6) return false;
  }
  return true;
}

bool criterion_functional_continuity() {
  for (const char* base : {"step", "three-jump", "two-jump-quad", "halfstep"}) {
    FamilyParams params;
    params.base = named_function(base);
    auto fam = make_family("mollified", params);
    for (const char* fname :
         {"abs", "area", "nonconvex", "ygrowth-2", "ex55"}) {
      auto f = make_integrand(fname);
      const double F_limit = evaluate_F(f, *fam.limit).total;
      double prev = 1e300, last = 1e300;
      for (int j : fam.index_range) {
        last = std::abs(evaluate_F(f, fam.generator(j)).total - F_limit);
        if (last > prev + 1e-10) return false;
        prev = last;
      }
      if (last >= 1e-2) return false;
    }
  }
  return true;
}

bool criterion_embedding() {
  FamilyParams params;
  params.dimension = 2;
  params.index_range = {1, 4, 16, 64, 256, 1024, 4096, 16384};
  for (const char* name : {"radial_steepening", "radial_mollified_step"}) {
    FamilyParams p = params;
    if (std::string(name) == "radial_mollified_step")
      p.index_range = {4, 6, 8, 10, 12, 14, 16};
    auto rep = embedding_experiment(make_radial_family(name, p));
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
      if (rep.rows[i].lp_dist > rep.rows[i - 1].lp_dist) return false;
    if (rep.rows.back().lp_dist >= 1e-2) return false;
  }
  // d = 1 contrast: the sup column is pinned at 1
  params.dimension = 1;
  params.index_range = {4, 64, 1024};
  auto rep1 = embedding_experiment(make_radial_family("radial_steepening", params));
  for (const auto& row : rep1.rows)
    if (std::abs(row.sup_dist - 1.0) > 1e-12) return false;
  return true;
}

bool criterion_recession_estimator() {
  Vec y0 = Vec::Zero(1);
  auto area = make_integrand("area");
  for (double a : {0.5, 2.0, -3.0}) {
    auto e = estimate_recession(area, 0.1, y0, Vec::Constant(1, a));
    if (!e || std::abs(e->value - std::abs(a)) > 1e-3) return false;
  }
  Integrand osc;
  osc.eval = [](double, const Vec&, const Vec& A) {
    const double a = A.norm();
    return a * std::sin(std::log1p(a));
  };
  return !estimate_recession(osc, 0.0, y0, Vec::Constant(1, 1.0)).has_value();
}

bool criterion_tail_mass() {
  for (const char* base : {"step", "three-jump"}) {
    FamilyParams params;
    params.base = named_function(base);
    auto fam = make_family("mollified", params);
    for (int j : fam.index_range) {
      auto u = fam.generator(j);
      double prev = 1e300;
      for (double k = 0.0; k <= u.sup_norm() + 1.25; k += 0.25) {
        const double cur = tail_gradient_mass(u, k);
        if (cur > prev + 1e-9) return false;
        prev = cur;
      }
      if (tail_gradient_mass(u, u.sup_norm() + 1.0) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  report(criterion_oscillation(),
         "oscillating family: unit variation, strict convergence, area limit");
  report(criterion_atomic_exactness(),
         "shifted indicator family: F[u_j] = 0 and F[u] = 1 exactly");
  report(criterion_sup_vs_area_strict(),
         "ramp family: sup distance pinned at 1, area-strict distance < 1e-2");
  report(criterion_cross_path(),
         "direct and graph evaluations agree on the 5 x 8 matrix");
  report(criterion_lifting_identities(),
         "lifting mass equals TV and Q vanishes on random bumps");
  report(criterion_functional_continuity(),
         "mollified families: |F[u_eps] - F[u]| decreases below 1e-2");
  report(criterion_embedding(),
         "radial families: L2 column decays below 1e-2, d=1 sup stays 1");
  report(criterion_recession_estimator(),
         "recession estimator: area integrand within 1e-3, oscillating "
         "integrand rejected");
  report(criterion_tail_mass(),
         "tail gradient mass nonincreasing in k and zero beyond sup|u| + 1");
  return failures == 0 ? 0 : 1;
}
