#pragma once

#include "bvlift/bv_function.hpp"
#include "bvlift/integrand.hpp"

namespace bvlift {

struct FunctionalValue {
  double total = 0.0;
  double ac_part = 0.0;
  double jump_part = 0.0;
  double cantor_part = 0.0;
  double error_estimate = 0.0;
};

/// Direct evaluation: adaptive quadrature of f(x,u,grad u) per mesh cell,
/// theta-averaged recession at jump atoms, IFS quadrature of the recession
/// against each Cantor measure. Throws no_recession when u carries singular
/// mass but f has no recession evaluator.
FunctionalValue evaluate_F(const Integrand& f, const BVFunction1D& u,
                           const QuadratureSpec& q = {});

/// Independent cross-check through the graph map x -> (|x|, u(x)): the same
/// value computed with the perspective integrand against the graph's
/// derivative, normalized ac density included.
FunctionalValue evaluate_F_graph(const Integrand& f, const BVFunction1D& u,
                                 const QuadratureSpec& q = {});

/// Generalized surface area of the graph of u: integral of sqrt(1+|grad u|^2)
/// plus the full singular mass.
double area_functional(const BVFunction1D& u, const QuadratureSpec& q = {});

}  // namespace bvlift
