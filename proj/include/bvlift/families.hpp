#pragma once

#include "bvlift/convergence.hpp"

namespace bvlift {

/// Convenience builders for scalar (m = 1) functions.
Piece scalar_piece(std::function<double(double)> value,
                   std::function<double(double)> derivative,
                   PieceKind kind = PieceKind::GeneralC1);
Piece affine_piece(double slope, double intercept);
Piece constant_piece(double c);

BVFunction1D make_scalar(Domain1D domain, std::vector<double> breakpoints,
                         std::vector<Piece> pieces,
                         std::vector<CantorComponent> cantor = {},
                         int cantor_depth = 24);

/// Named functions for the CLI and the test matrix:
///   "linear"        x on (0,1)
///   "smooth"        0.3 sin(2 pi x) + 0.5 x^2 on (0,1)
///   "step"          1_{[0.3,1)} on (-1,1)
///   "halfstep"      0.75 * 1_{[0.5,1)} on (0,1)
///   "three-jump"    piecewise affine with jumps at -0.4, 0.1, 0.55 on (-1,1)
///   "two-jump-quad" piecewise quadratic with jumps at 0.35, 0.7 on (0,1)
///   "cantor"        the classic middle-thirds staircase on (0,1)
///   "cantor-mix"    smooth + jump + staircase blend on (0,1)
BVFunction1D named_function(const std::string& name);

struct NamedFunction {
  std::string name;
  BVFunction1D fn;
};

/// The eight named functions above, in a fixed order (the cross-check and
/// lifting test matrices iterate over this suite).
std::vector<NamedFunction> generator_suite();

}  // namespace bvlift
