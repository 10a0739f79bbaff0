#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "bvlift/errors.hpp"
#include "bvlift/quadrature.hpp"

namespace bvlift {

/// Bounded open interval (a,b).
struct Domain1D {
  double a = 0.0;
  double b = 1.0;
  double length() const { return b - a; }
  bool contains(double x) const { return x > a && x < b; }
};

enum class PieceKind { Affine, GeneralC1 };

/// One smooth component of a BV function, defined on a closed mesh cell.
/// `value` and `derivative` must be C1-consistent; the Affine tag unlocks
/// exact integration shortcuts.
struct Piece {
  double lo = 0.0;
  double hi = 1.0;
  std::function<Vec(double)> value;
  std::function<Vec(double)> derivative;
  PieceKind kind = PieceKind::GeneralC1;
};

struct JumpAtom {
  double location = 0.0;
  Vec left_trace;   // u^-
  Vec right_trace;  // u^+
  Vec gap() const { return right_trace - left_trace; }
  double mass() const { return gap().norm(); }
  Vec direction() const { return gap() / mass(); }
};

/// Self-similar Cantor staircase supported on [lo,hi]: at every level the
/// middle fraction `removed_fraction` of each interval carries no mass.
/// The cumulative function rises from 0 at lo to mass_vector at hi.
struct CantorComponent {
  double lo = 0.0;
  double hi = 1.0;
  double removed_fraction = 1.0 / 3.0;  // lambda
  Vec mass_vector;                      // v (direction times total mass)
  double contraction() const { return 0.5 * (1.0 - removed_fraction); }
  /// Normalized cumulative function on [0,1]; depth-k approximation with
  /// error at most 2^-k.
  double staircase01(double t, int depth) const;
  Vec staircase(double x, int depth) const {
    return mass_vector * staircase01((x - lo) / (hi - lo), depth);
  }
};

/// Integrates phi against the component's normalized Cantor measure
/// (total mass 1). Adaptive in the IFS tree: a branch is accepted once
/// splitting it no longer moves the estimate, capped at max_depth.
double integrate_cantor01(const CantorComponent& c,
                          const std::function<double(double)>& phi, double tol,
                          int max_depth);
Vec integrate_cantor01_vec(const CantorComponent& c,
                           const std::function<Vec(double)>& phi, int dim,
                           double tol, int max_depth);

/// A vector-valued BV function on an interval: a breakpoint mesh of smooth
/// pieces, jump atoms at interior breakpoints where the one-sided traces
/// disagree, and optional Cantor staircases added on top of the pieces.
class BVFunction1D {
 public:
  static constexpr double kJumpTolerance = 1e-12;

  BVFunction1D(Domain1D domain, std::vector<double> interior_breakpoints,
               std::vector<Piece> pieces,
               std::vector<CantorComponent> cantor = {}, int cantor_depth = 24);

  const Domain1D& domain() const { return domain_; }
  int dim() const { return dim_; }
  int cantor_depth() const { return cantor_depth_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<JumpAtom>& jumps() const { return jumps_; }
  const std::vector<CantorComponent>& cantor() const { return cantor_; }

  /// Pointwise value: active piece plus overlapping staircases.
  Vec operator()(double x) const;
  /// Piecewise part only (no staircases).
  Vec piecewise_value(double x) const;
  Vec left_limit(double x) const;
  Vec right_limit(double x) const;
  /// Precise representative: midpoint of the one-sided limits at jumps.
  Vec precise_value(double x) const;
  /// Approximate gradient (piece derivative; staircases carry none).
  Vec ac_derivative(double x) const;
  /// Staircase contribution alone.
  Vec cantor_value(double x) const;
  /// Index of the mesh cell containing x.
  int piece_index(double x) const;
  /// sup |u| over a sampling grid plus all one-sided traces.
  double sup_norm() const;

 private:
  Domain1D domain_;
  std::vector<double> breakpoints_;  // interior only, sorted
  std::vector<Piece> pieces_;        // breakpoints_.size() + 1 entries
  std::vector<JumpAtom> jumps_;
  std::vector<CantorComponent> cantor_;
  int cantor_depth_;
  int dim_;
};

/// C1 Lipschitz map R^m -> R^n with an explicit Jacobian.
struct C1Map {
  int in_dim = 1;
  int out_dim = 1;
  std::function<Vec(const Vec&)> value;
  std::function<Mat(const Vec&)> jacobian;
};

struct DerivativeDecomposition {
  std::function<Vec(double)> ac_density;  // gradient of u
  std::vector<JumpAtom> jumps;
  std::vector<CantorComponent> cantor;
  double ac_mass = 0.0;      // integral of |grad u|
  double jump_mass = 0.0;    // sum of |u^+ - u^-|
  double cantor_mass = 0.0;  // sum of |v|
  double total() const { return ac_mass + jump_mass + cantor_mass; }
};

DerivativeDecomposition decompose(const BVFunction1D& u,
                                  const QuadratureSpec& q = {});
double total_variation(const BVFunction1D& u, const QuadratureSpec& q = {});

/// theta u^+(x) + (1-theta) u^-(x) at jumps; the precise representative
/// elsewhere.
Vec jump_average(const BVFunction1D& u, double x, double theta);

/// g o u with the chain-rule structure made explicit. Rejects functions
/// with Cantor components (their image leaves the constant-direction
/// staircase representation).
BVFunction1D compose(const C1Map& g, const BVFunction1D& u);

/// Vol'pert averaged superposition: integral over theta of grad g(u^theta(x)).
Mat volpert_average(const C1Map& g, const BVFunction1D& u, double x,
                    int theta_order = 32);

double lp_distance(const BVFunction1D& u, const BVFunction1D& v, double p,
                   const QuadratureSpec& q = {});
double sup_distance(const BVFunction1D& u, const BVFunction1D& v,
                    int samples_per_cell = 512);

/// Radial profile g on (0,R) standing in for x -> g(|x|) on the ball of
/// radius R in dimension d.
struct RadialBV {
  BVFunction1D profile;
  int dimension = 2;
};

/// Surface measure of the unit (d-1)-sphere; d = 1 degenerates to 1 so the
/// weighted formulas with exponent 0 reproduce the plain 1D operations.
double sphere_area(int d);

double radial_total_variation(const RadialBV& ru, const QuadratureSpec& q = {});
double radial_lp_norm(const RadialBV& ru, double p, const QuadratureSpec& q = {});
double radial_lp_distance(const RadialBV& ru, const RadialBV& rv, double p,
                          const QuadratureSpec& q = {});
double radial_sup_distance(const RadialBV& ru, const RadialBV& rv);

}  // namespace bvlift
