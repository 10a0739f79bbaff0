#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bvlift/families.hpp"

using namespace bvlift;
using std::numbers::pi;

TEST_CASE("cantor staircase pointwise values") {
  CantorComponent c{0.0, 1.0, 1.0 / 3.0, Vec::Constant(1, 1.0)};
  CHECK(c.staircase01(0.0, 24) == 0.0);
  CHECK(c.staircase01(1.0, 24) == 1.0);
  CHECK(c.staircase01(1.0 / 3.0, 24) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.staircase01(0.5, 24) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.staircase01(0.25, 40) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("cantor staircase depth convergence and monotonicity") {
  CantorComponent c{0.0, 1.0, 1.0 / 3.0, Vec::Constant(1, 1.0)};
  for (int k : {8, 12, 16, 20}) {
    for (int i = 0; i <= 200; ++i) {
      const double t = i / 200.0;
      CHECK(std::abs(c.staircase01(t, k) - c.staircase01(t, k + 4)) <=
            std::ldexp(1.0, -k));
    }
  }
  double prev = -1.0;
  for (int i = 0; i <= 500; ++i) {
    const double v = c.staircase01(i / 500.0, 24);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("cantor measure integration") {
  CantorComponent c{0.0, 1.0, 1.0 / 3.0, Vec::Constant(1, 1.0)};
  auto I = [&](auto phi) { return integrate_cantor01(c, phi, 1e-10, 40); };
  CHECK(I([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(I([](double x) { return x; }) == doctest::Approx(0.5).epsilon(1e-9));
  // second moment of the middle-thirds Cantor distribution: 1/4 + 1/8
  CHECK(I([](double x) { return x * x; }) ==
        doctest::Approx(0.375).epsilon(1e-9));
}

TEST_CASE("decompose: linear, jump limit, staircase") {
  auto lin = named_function("linear");
  auto d1 = decompose(lin);
  CHECK(d1.ac_mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d1.jumps.empty());
  CHECK(d1.cantor.empty());
  CHECK(d1.total() == doctest::Approx(1.0).epsilon(1e-12));

  auto sgn = make_scalar({-1.0, 1.0}, {0.0},
                         {constant_piece(-1.0), constant_piece(1.0)});
  auto d2 = decompose(sgn);
  CHECK(d2.jumps.size() == 1);
  CHECK(d2.jump_mass == doctest::Approx(2.0));
  CHECK(d2.total() == doctest::Approx(2.0));

  auto cant = named_function("cantor");
  auto d3 = decompose(cant);
  CHECK(d3.ac_mass <= 1e-12);
  CHECK(d3.cantor_mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d3.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("total variation of the oscillation family is exactly 1") {
  for (int j : {1, 2, 3, 8, 16, 64}) {
    const double w = 2.0 * pi * j;
    auto u = make_scalar(
        {0.0, 1.0}, {},
        {scalar_piece([w](double x) { return x + std::sin(w * x) / w; },
                      [w](double x) { return 1.0 + std::cos(w * x); })});
    CHECK(std::abs(total_variation(u) - 1.0) <= 1e-9);
  }
}

TEST_CASE("mass additivity across the generator suite") {
  for (const auto& [name, u] : generator_suite()) {
    CAPTURE(name);
    auto d = decompose(u);
    CHECK(std::abs(d.total() - (d.ac_mass + d.jump_mass + d.cantor_mass)) <=
          1e-8 * std::max(1.0, d.total()));
    CHECK(total_variation(u) == doctest::Approx(d.total()).epsilon(1e-12));
  }
}

TEST_CASE("jump averaging") {
  auto sgn = make_scalar({-1.0, 1.0}, {0.0},
                         {constant_piece(-1.0), constant_piece(1.0)});
  CHECK(jump_average(sgn, 0.0, 0.5)[0] == doctest::Approx(0.0));
  CHECK(jump_average(sgn, 0.0, 1.0)[0] == doctest::Approx(1.0));
  auto sq = make_scalar({0.0, 1.0}, {},
                        {scalar_piece([](double x) { return x * x; },
                                      [](double x) { return 2.0 * x; })});
  CHECK(jump_average(sq, 0.3, 0.7)[0] == doctest::Approx(0.09));
}

TEST_CASE("theta-integrals are invariant under trace swap") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const Vec up = Vec::Constant(1, 0.8), um = Vec::Constant(1, -0.4);
  for (int trial = 0; trial < 10; ++trial) {
    double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng),
           c4 = coef(rng);
    auto g = [&](double y) {
      return c0 + y * (c1 + y * (c2 + y * (c3 + y * c4)));
    };
    auto avg = [&](const Vec& a, const Vec& b) {
      return integrate_theta(
          [&](double th) { return g((th * b + (1.0 - th) * a)[0]); }, 32);
    };
    CHECK(avg(um, up) == doctest::Approx(avg(up, um)).epsilon(1e-13));
  }
}

TEST_CASE("compose and the chain rule") {
  auto lin = named_function("linear");
  C1Map dbl{1, 1, [](const Vec& y) { return Vec(2.0 * y); },
            [](const Vec&) { return Mat::Constant(1, 1, 2.0); }};
  auto v = compose(dbl, lin);
  CHECK(decompose(v).ac_mass == doctest::Approx(2.0).epsilon(1e-12));

  C1Map atan1{1, 1,
              [](const Vec& y) { return Vec::Constant(1, std::atan(y[0])); },
              [](const Vec& y) {
                return Mat::Constant(1, 1, 1.0 / (1.0 + y[0] * y[0]));
              }};
  auto step = make_scalar({-1.0, 1.0}, {0.0},
                          {constant_piece(0.0), constant_piece(1.0)});
  auto w = compose(atan1, step);
  REQUIRE(w.jumps().size() == 1);
  CHECK(w.jumps()[0].mass() == doctest::Approx(pi / 4.0).epsilon(1e-12));

  C1Map sq{1, 1, [](const Vec& y) { return Vec(y.cwiseProduct(y)); },
           [](const Vec& y) { return Mat::Constant(1, 1, 2.0 * y[0]); }};
  auto z = compose(sq, lin);
  CHECK(z.ac_derivative(0.25)[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(decompose(z).ac_mass == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(compose(sq, named_function("cantor")),
                  unsupported_cantor_composition);
}

TEST_CASE("chain-rule consistency on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-0.8, 0.8);
  for (int trial = 0; trial < 20; ++trial) {
    const double a0 = coef(rng), a1 = coef(rng), b0 = coef(rng), b1 = coef(rng);
    const double bp = 0.3 + 0.4 * std::abs(coef(rng));
    auto u = make_scalar({0.0, 1.0}, {bp},
                         {affine_piece(a1, a0), affine_piece(b1, b0)});
    const double c2 = coef(rng), c1 = coef(rng);
    C1Map g{1, 1,
            [c1, c2](const Vec& y) {
              return Vec::Constant(1, c2 * y[0] * y[0] + c1 * y[0]);
            },
            [c1, c2](const Vec& y) {
              return Mat::Constant(1, 1, 2.0 * c2 * y[0] + c1);
            }};
    auto gu = compose(g, u);
    // ac density at a sample point
    const double x = 0.5 * bp;
    CHECK(gu.ac_derivative(x)[0] ==
          doctest::Approx((2.0 * c2 * u(x)[0] + c1) * a1).epsilon(1e-6));
    // jump of g(u) equals g(u+) - g(u-)
    auto gval = [&](double y) { return c2 * y * y + c1 * y; };
    const double expected =
        std::abs(gval(u.right_limit(bp)[0]) - gval(u.left_limit(bp)[0]));
    double got = 0.0;
    if (!gu.jumps().empty()) got = gu.jumps()[0].mass();
    CHECK(got == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("volpert averaged superposition") {
  C1Map sq{1, 1, [](const Vec& y) { return Vec(y.cwiseProduct(y)); },
           [](const Vec& y) { return Mat::Constant(1, 1, 2.0 * y[0]); }};
  auto step = make_scalar({-1.0, 1.0}, {0.0},
                          {constant_piece(0.0), constant_piece(1.0)});
  CHECK(volpert_average(sq, step, 0.0)(0, 0) ==
        doctest::Approx(1.0).epsilon(1e-13));
  auto lin = named_function("linear");
  CHECK(volpert_average(sq, lin, 0.4)(0, 0) ==
        doctest::Approx(0.8).epsilon(1e-13));
  C1Map ident{1, 1, [](const Vec& y) { return y; },
              [](const Vec&) { return Mat::Identity(1, 1); }};
  CHECK(volpert_average(ident, step, 0.0)(0, 0) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("lp and sup distances") {
  auto lin = named_function("linear");
  CHECK(lp_distance(lin, lin, 1.0) == doctest::Approx(0.0));
  auto fam = make_family("jump_smoothing");
  for (int j : {2, 8, 32}) {
    auto uj = fam.generator(j);
    CHECK(sup_distance(uj, *fam.limit) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lp_distance(uj, *fam.limit, 1.0) ==
          doctest::Approx(1.0 / j).epsilon(1e-9));
  }
}

TEST_CASE("piece derivatives match finite differences") {
  for (const auto& [name, u] : generator_suite()) {
    CAPTURE(name);
    for (const auto& piece : u.pieces()) {
      const double len = piece.hi - piece.lo;
      const double h = 1e-6 * len;
      for (int i = 1; i < 8; ++i) {
        const double x = piece.lo + len * i / 8.0;
        const Vec fd = (piece.value(x + h) - piece.value(x - h)) / (2.0 * h);
        const Vec an = piece.derivative(x);
        CHECK((fd - an).norm() <= 1e-5 * std::max(1.0, an.norm()));
      }
    }
  }
}

TEST_CASE("radial reductions") {
  auto step_half = make_scalar({0.0, 1.0}, {0.5},
                               {constant_piece(1.0), constant_piece(0.0)});
  CHECK(radial_total_variation({step_half, 2}) ==
        doctest::Approx(pi).epsilon(1e-10));
  auto ramp = make_scalar({0.0, 1.0}, {}, {affine_piece(1.0, 0.0)});
  CHECK(radial_total_variation({ramp, 2}) == doctest::Approx(pi).epsilon(1e-10));
  auto flat = make_scalar({0.0, 1.0}, {}, {constant_piece(0.7)});
  CHECK(radial_total_variation({flat, 2}) == doctest::Approx(0.0));
  // d = 1 degenerates to the plain 1D operations
  auto tj = named_function("two-jump-quad");
  CHECK(radial_total_variation({tj, 1}) ==
        doctest::Approx(total_variation(tj)).epsilon(1e-10));
  auto zero = make_scalar({0.0, 1.0}, {}, {constant_piece(0.0)});
  CHECK(radial_lp_norm({tj, 1}, 2.0) ==
        doctest::Approx(lp_distance(tj, zero, 2.0)).epsilon(1e-10));
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(make_scalar({1.0, 0.0}, {}, {constant_piece(0.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_scalar({0.0, 1.0}, {1.5},
                  {constant_piece(0.0), constant_piece(1.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(make_scalar({0.0, 1.0}, {0.5}, {constant_piece(0.0)}),
                  std::invalid_argument);
}
