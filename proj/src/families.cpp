#include "bvlift/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bvlift {

Piece scalar_piece(std::function<double(double)> value,
                   std::function<double(double)> derivative, PieceKind kind) {
  Piece p;
  p.kind = kind;
  p.value = [value](double x) { return Vec::Constant(1, value(x)); };
  p.derivative = [derivative](double x) {
    return Vec::Constant(1, derivative(x));
  };
  return p;
}

Piece affine_piece(double slope, double intercept) {
  Piece p = scalar_piece([slope, intercept](double x) { return slope * x + intercept; },
                         [slope](double) { return slope; }, PieceKind::Affine);
  return p;
}

Piece constant_piece(double c) { return affine_piece(0.0, c); }

BVFunction1D make_scalar(Domain1D domain, std::vector<double> breakpoints,
                         std::vector<Piece> pieces,
                         std::vector<CantorComponent> cantor, int cantor_depth) {
  return BVFunction1D(domain, std::move(breakpoints), std::move(pieces),
                      std::move(cantor), cantor_depth);
}

BVFunction1D named_function(const std::string& name) {
  using std::numbers::pi;
  if (name == "linear")
    return make_scalar({0.0, 1.0}, {}, {affine_piece(1.0, 0.0)});
  if (name == "smooth") {
    return make_scalar(
        {0.0, 1.0}, {},
        {scalar_piece(
            [](double x) { return 0.3 * std::sin(2.0 * pi * x) + 0.5 * x * x; },
            [](double x) { return 0.6 * pi * std::cos(2.0 * pi * x) + x; })});
  }
  if (name == "step")
    return make_scalar({-1.0, 1.0}, {0.3},
                       {constant_piece(0.0), constant_piece(1.0)});
  if (name == "halfstep")
    return make_scalar({0.0, 1.0}, {0.5},
                       {constant_piece(0.0), constant_piece(0.75)});
  if (name == "three-jump") {
    return make_scalar({-1.0, 1.0}, {-0.4, 0.1, 0.55},
                       {affine_piece(0.5, 0.2), affine_piece(-0.25, -0.6),
                        affine_piece(0.1, 0.9), affine_piece(0.4, -0.2)});
  }
  if (name == "two-jump-quad") {
    auto quad = [](double a, double c, double s) {
      return scalar_piece(
          [a, c, s](double x) { return a + s * (x - c) * (x - c); },
          [c, s](double x) { return 2.0 * s * (x - c); });
    };
    return make_scalar({0.0, 1.0}, {0.35, 0.7},
                       {quad(0.0, 0.0, 1.0), quad(1.0, 0.5, -1.0),
                        quad(0.3, 0.7, 0.5)});
  }
  if (name == "cantor") {
    CantorComponent c{0.0, 1.0, 1.0 / 3.0, Vec::Constant(1, 1.0)};
    return make_scalar({0.0, 1.0}, {}, {constant_piece(0.0)}, {c});
  }
  if (name == "cantor-mix") {
    CantorComponent c{0.1, 0.9, 1.0 / 3.0, Vec::Constant(1, 0.8)};
    auto wave = [] {
      return scalar_piece(
          [](double x) { return 0.2 * std::sin(2.0 * pi * x); },
          [](double x) { return 0.4 * pi * std::cos(2.0 * pi * x); });
    };
    Piece lifted = wave();
    auto base = lifted.value;
    lifted.value = [base](double x) {
      return Vec(base(x) + Vec::Constant(1, 0.5));
    };
    return make_scalar({0.0, 1.0}, {0.6}, {wave(), lifted}, {c});
  }
  throw std::invalid_argument("named_function: unknown function '" + name + "'");
}

std::vector<NamedFunction> generator_suite() {
  std::vector<NamedFunction> suite;
  for (const char* name : {"linear", "smooth", "step", "halfstep", "three-jump",
                           "two-jump-quad", "cantor", "cantor-mix"})
    suite.push_back({name, named_function(name)});
  return suite;
}

namespace {

std::string normalized(std::string name) {
  for (char& c : name)
    if (c == '-') c = '_';
  return name;
}

std::vector<int> default_geometric(int jmax) {
  std::vector<int> out{1};
  for (int j = 2; j <= jmax; j *= 2) out.push_back(j);
  return out;
}

}  // namespace

SequenceFamily make_family(const std::string& raw_name,
                           const FamilyParams& params) {
  using std::numbers::pi;
  const std::string name = normalized(raw_name);
  SequenceFamily fam;
  fam.name = name;
  fam.index_range =
      params.index_range.empty() ? default_geometric(64) : params.index_range;
  if (name == "oscillation") {
    fam.generator = [](int j) {
      const double w = 2.0 * pi * j;
      return make_scalar(
          {0.0, 1.0}, {},
          {scalar_piece([w](double x) { return x + std::sin(w * x) / w; },
                        [w](double x) { return 1.0 + std::cos(w * x); })});
    };
    fam.limit = named_function("linear");
    return fam;
  }
  if (name == "jump_smoothing") {
    fam.generator = [](int j) {
      const double h = 1.0 / j;
      const double slope = static_cast<double>(j);
      if (h >= 1.0)
        return make_scalar({-1.0, 1.0}, {}, {affine_piece(slope, 0.0)});
      return make_scalar({-1.0, 1.0}, {-h, h},
                         {constant_piece(-1.0), affine_piece(slope, 0.0),
                          constant_piece(1.0)});
    };
    fam.limit = make_scalar({-1.0, 1.0}, {0.0},
                            {constant_piece(-1.0), constant_piece(1.0)});
    return fam;
  }
  if (name == "shifted_jump") {
    fam.generator = [](int j) {
      const double h = 1.0 / j;
      if (h >= 1.0) return make_scalar({-1.0, 1.0}, {}, {constant_piece(1.0)});
      return make_scalar({-1.0, 1.0}, {-h},
                         {constant_piece(0.0), constant_piece(1.0)});
    };
    fam.limit = make_scalar({-1.0, 1.0}, {0.0},
                            {constant_piece(0.0), constant_piece(1.0)});
    return fam;
  }
  if (name == "mollified") {
    BVFunction1D base =
        params.base ? *params.base : named_function(params.base_name);
    if (params.index_range.empty())
      fam.index_range = {4, 5, 6, 7, 8, 9, 10, 11};
    fam.generator = [base](int j) { return mollify(base, std::ldexp(1.0, -j)); };
    fam.limit = base;
    return fam;
  }
  throw std::invalid_argument("make_family: unknown family '" + raw_name + "'");
}

RadialFamily make_radial_family(const std::string& raw_name,
                                const FamilyParams& params) {
  const std::string name = normalized(raw_name);
  RadialFamily fam;
  fam.name = name;
  fam.dimension = params.dimension;
  fam.index_range =
      params.index_range.empty() ? default_geometric(64) : params.index_range;
  const int d = params.dimension;
  if (name == "radial_steepening") {
    fam.generator = [d](int j) {
      const double w = std::min(1.0 / j, 0.45);
      return RadialBV{make_scalar({0.0, 1.0}, {0.5, 0.5 + w},
                                  {constant_piece(1.0),
                                   affine_piece(-1.0 / w, 1.0 + 0.5 / w),
                                   constant_piece(0.0)}),
                      d};
    };
    fam.limit = RadialBV{make_scalar({0.0, 1.0}, {0.5},
                                     {constant_piece(1.0), constant_piece(0.0)}),
                         d};
    return fam;
  }
  if (name == "radial_mollified_step") {
    BVFunction1D step = make_scalar({0.0, 1.0}, {0.5},
                                    {constant_piece(1.0), constant_piece(0.0)});
    if (params.index_range.empty()) fam.index_range = {4, 6, 8, 10, 12, 14, 16};
    fam.generator = [step, d](int j) {
      return RadialBV{mollify(step, std::ldexp(1.0, -j)), d};
    };
    fam.limit = RadialBV{step, d};
    return fam;
  }
  throw std::invalid_argument("make_radial_family: unknown family '" + raw_name +
                              "'");
}

}  // namespace bvlift
