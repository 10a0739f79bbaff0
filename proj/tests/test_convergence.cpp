#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bvlift/families.hpp"

using namespace bvlift;
using std::numbers::pi;

namespace {
// limit of the oscillation family's area functional (high-order composite
// quadrature of the period integral, frozen up front)
constexpr double kOscillationAreaLimit = 1.5131795766437733;
}  // namespace

TEST_CASE("strict metric on the built-in families") {
  auto lin = named_function("linear");
  CHECK(strict_distance(lin, lin) == 0.0);
  auto osc = make_family("oscillation");
  for (int j : {1, 4, 16}) {
    auto uj = osc.generator(j);
    // TV gap is exactly zero, so the metric is the L1 term 1/(pi^2 j)
    CHECK(strict_distance(uj, *osc.limit) ==
          doctest::Approx(1.0 / (pi * pi * j)).epsilon(1e-9));
  }
  auto js = make_family("jump_smoothing");
  for (int j : {2, 16}) {
    CHECK(strict_distance(js.generator(j), *js.limit) ==
          doctest::Approx(1.0 / j).epsilon(1e-9));
  }
}

TEST_CASE("area-strict metric separates the oscillation family") {
  auto osc = make_family("oscillation");
  auto u64 = osc.generator(64);
  const double d = area_strict_distance(u64, *osc.limit);
  const double l1 = lp_distance(u64, *osc.limit, 1.0);
  CHECK(d - l1 ==
        doctest::Approx(kOscillationAreaLimit - std::sqrt(2.0)).epsilon(1e-9));
  CHECK(area_functional(u64) ==
        doctest::Approx(kOscillationAreaLimit).epsilon(1e-9));
}

TEST_CASE("area-strict metric closed form for the ramp family") {
  auto js = make_family("jump_smoothing");
  for (int j : {2, 8, 64}) {
    const double expected = 1.0 / j + 2.0 + 2.0 / j -
                            (2.0 / j) * std::sqrt(1.0 + double(j) * j);
    CHECK(area_strict_distance(js.generator(j), *js.limit) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("mollification basics") {
  auto flat = make_scalar({0.0, 1.0}, {}, {constant_piece(0.7)});
  auto mf = mollify(flat, 0.1);
  CHECK(mf.jumps().empty());
  CHECK(mf.cantor().empty());
  for (double x : {0.0, 0.05, 0.5, 0.97, 1.0})
    CHECK(mf(x)[0] == doctest::Approx(0.7).epsilon(1e-12));

  CHECK_THROWS_AS(mollify(flat, 0.3), std::invalid_argument);

  for (const char* name : {"step", "three-jump", "two-jump-quad", "cantor"}) {
    CAPTURE(name);
    auto u = named_function(name);
    for (double eps : {0.1, 0.02}) {
      auto ue = mollify(u, eps);
      CHECK(lp_distance(ue, u, 1.0) <= 3.0 * eps * total_variation(u));
    }
  }
}

TEST_CASE("mollified derivative matches finite differences") {
  auto u = named_function("cantor-mix");
  auto ue = mollify(u, 0.05);
  const double h = 1e-6;
  for (double x : {0.1, 0.35, 0.61, 0.9}) {
    const double fd = (ue(x + h)[0] - ue(x - h)[0]) / (2.0 * h);
    CHECK(ue.ac_derivative(x)[0] == doctest::Approx(fd).epsilon(1e-4));
  }
}

TEST_CASE("mollified staircase keeps its mass") {
  auto u = named_function("cantor");
  auto ue = mollify(u, 0.05);
  // total variation approaches 1 and never exceeds it by more than rounding
  const double tv = total_variation(ue);
  CHECK(tv <= 1.0 + 1e-8);
  CHECK(tv >= 0.8);
  // reflection averages rather than pins the endpoints; the middle-thirds
  // staircase is symmetric, so the two boundary offsets match
  CHECK(ue(0.0)[0] > 0.0);
  CHECK(ue(0.0)[0] < 0.2);
  CHECK(ue(1.0)[0] == doctest::Approx(1.0 - ue(0.0)[0]).epsilon(1e-9));
  double prev = ue(0.0)[0];
  for (int i = 1; i <= 64; ++i) {
    const double cur = ue(i / 64.0)[0];
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
}

TEST_CASE("make_family formulas") {
  auto osc = make_family("oscillation");
  auto u4 = osc.generator(4);
  for (double x : {0.1, 0.37, 0.8})
    CHECK(u4(x)[0] ==
          doctest::Approx(x + std::sin(8.0 * pi * x) / (8.0 * pi)));
  auto sj = make_family("shifted_jump");
  auto u10 = sj.generator(10);
  CHECK(u10.left_limit(-0.1)[0] == 0.0);
  CHECK(u10.right_limit(-0.1)[0] == 1.0);
  CHECK(u10(0.5)[0] == 1.0);
  FamilyParams params;
  params.base = named_function("cantor");
  auto mol = make_family("mollified", params);
  CHECK(total_variation(*mol.limit) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(make_family("nosuch"), std::invalid_argument);
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  auto random_fn = [&]() {
    const double bp = 0.3 + 0.4 * std::abs(coef(rng));
    return make_scalar({0.0, 1.0}, {bp},
                       {affine_piece(coef(rng), coef(rng)),
                        affine_piece(coef(rng), coef(rng))});
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto u = random_fn(), v = random_fn(), w = random_fn();
    for (auto metric : {strict_distance, area_strict_distance}) {
      const double duv = metric(u, v, {});
      const double dvu = metric(v, u, {});
      const double duw = metric(u, w, {});
      const double dwv = metric(w, v, {});
      CHECK(duv >= 0.0);
      CHECK(duv == doctest::Approx(dvu).epsilon(1e-10));
      CHECK(duv <= duw + dwv + 1e-9);
      CHECK(metric(u, u, {}) <= 1e-12);
    }
  }
}

TEST_CASE("area-strict convergence implies strict convergence") {
  // identical functions: both metrics vanish
  for (const auto& [name, u] : generator_suite()) {
    CAPTURE(name);
    CHECK(area_strict_distance(u, u) <= 1e-12);
    CHECK(strict_distance(u, u) <= 1e-12);
  }
  // a family whose area-strict column vanishes has a vanishing strict column
  auto js = make_family("jump_smoothing");
  auto rep = run_experiment(js, {"abs"}, 2.0, 3.0, {});
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    CHECK(rep.rows[i].area_strict_dist <= rep.rows[i - 1].area_strict_dist);
    CHECK(rep.rows[i].strict_dist <= rep.rows[i - 1].strict_dist + 1e-12);
  }
  CHECK(rep.rows.back().strict_dist <= rep.rows.back().area_strict_dist + 1e-12);
}

TEST_CASE("run_experiment fills the configured columns") {
  auto sj = make_family("shifted_jump");
  auto rep = run_experiment(sj, {"ex55", "abs"}, 2.0, 0.5, {});
  REQUIRE(rep.rows.size() == sj.index_range.size());
  for (const auto& row : rep.rows) {
    REQUIRE(row.F_direct.size() == 2);
    CHECK(row.F_direct[0] == 0.0);
    CHECK(row.diagnostic.empty());
  }
  CHECK(rep.F_limit_direct[0] == 1.0);
  // tail at k = 1/2: half of each unit jump lies outside the ball
  CHECK(rep.rows.back().tail_mass == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("F-continuity witness on an area-strictly convergent family") {
  FamilyParams params;
  params.base = named_function("step");
  params.index_range = {4, 6, 8};
  auto fam = make_family("mollified", params);
  auto rep = run_experiment(fam, {"area", "nonconvex"}, 2.0, 3.0, {});
  CHECK(rep.rows.back().area_strict_dist < 1e-2);
  for (std::size_t fi = 0; fi < rep.integrand_names.size(); ++fi) {
    const double gap =
        std::abs(rep.rows.back().F_direct[fi] - rep.F_limit_direct[fi]);
    CHECK(gap < 2e-2);
  }
}

TEST_CASE("embedding experiment") {
  FamilyParams params;
  params.dimension = 2;
  params.index_range = {4, 16, 64, 256};
  auto fam = make_radial_family("radial_steepening", params);
  auto rep = embedding_experiment(fam);
  CHECK(rep.p == doctest::Approx(2.0));
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    CHECK(rep.rows[i].lp_dist < rep.rows[i - 1].lp_dist);
  for (const auto& row : rep.rows)
    CHECK(row.sup_dist == doctest::Approx(1.0).epsilon(1e-12));
  // d = 1 contrast: the degenerate weight leaves the sup distance pinned
  params.dimension = 1;
  auto fam1 = make_radial_family("radial_steepening", params);
  auto rep1 = embedding_experiment(fam1);
  for (const auto& row : rep1.rows)
    CHECK(row.sup_dist == doctest::Approx(1.0).epsilon(1e-12));
}
