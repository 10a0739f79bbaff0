#pragma once

#include <cstdint>

#include "bvlift/functional.hpp"

namespace bvlift {

enum class LiftingKind { Ac, Jump, Cantor };

/// One structural piece of mu[u] = |Du| (x) nu. The measure is never
/// sampled: each kind pairs against test functions by its own exact rule.
struct LiftingComponent {
  LiftingKind kind = LiftingKind::Ac;
  double mass = 0.0;
  // ac: x-density |grad u| on the mesh cell [lo,hi] (piece index into the
  // source function), y = Dirac at u(x).
  double lo = 0.0, hi = 0.0;
  int piece = 0;
  // jump: x = Dirac at location, y = pushforward of dtheta along the
  // segment [left_trace, right_trace], polar = jump direction.
  double location = 0.0;
  Vec left_trace, right_trace;
  Vec polar;
  // cantor: x = the component's Cantor measure, y = Dirac at the precise
  // representative, polar = normalized mass vector.
  CantorComponent cantor;
};

struct LiftingMeasure {
  BVFunction1D source;
  std::vector<LiftingComponent> components;
};

/// C1 test function on Omega x R^m with compact x-support (x_lo, x_hi).
struct TestFunction {
  std::function<double(double x, const Vec& y)> eval;
  std::function<double(double x, const Vec& y)> grad_x;
  std::function<Vec(double x, const Vec& y)> grad_y;
  double x_lo = 0.0;
  double x_hi = 0.0;
};

LiftingMeasure build_lifting(const BVFunction1D& u, const QuadratureSpec& q = {});

double total_mass(const LiftingMeasure& mu);

/// Q_phi(u, mu) = int grad_x phi(x,u(x)) dx + int grad_y phi d mu; vanishes
/// when mu = build_lifting(u). Throws support_violation when phi's support
/// is not strictly inside the domain.
double Q(const TestFunction& phi, const BVFunction1D& u,
         const LiftingMeasure& mu, const QuadratureSpec& q = {});

/// int f(x,y,polar) d|mu[u]| for positively 1-homogeneous f; equals F[u].
/// Homogeneity is sampled first; failures throw not_homogeneous.
double functional_via_lifting(const Integrand& f, const BVFunction1D& u,
                              const QuadratureSpec& q = {});

/// int h(x) d mu(x,y) collapsed over y; equals int h dDu (vector in R^m).
Vec pushforward_pair(const LiftingMeasure& mu,
                     const std::function<double(double)>& h,
                     const QuadratureSpec& q = {});

/// |mu[u]|({(x,y): |y| >= k}).
double tail_gradient_mass(const BVFunction1D& u, double k,
                          const QuadratureSpec& q = {});

/// Vector pairing <mu, phi> = int phi(x,y) d mu(x,y) in R^m.
Vec pair_lifting(const LiftingMeasure& mu, const TestFunction& phi,
                 const QuadratureSpec& q = {});

struct LiftingConvergenceRow {
  int index = 0;
  double mass_gap = 0.0;     // |mass(mu_j) - mass(mu)|
  double pairing_gap = 0.0;  // max over the dictionary of |<mu_j - mu, phi>|
};

/// Empirical strict-convergence witness for the liftings of a family.
std::vector<LiftingConvergenceRow> lifting_convergence_report(
    const std::vector<int>& indices, const std::vector<BVFunction1D>& members,
    const BVFunction1D& limit, const std::vector<TestFunction>& dictionary,
    const QuadratureSpec& q = {});

/// Seeded dictionary of separable C1 bumps psi(x)chi(y) supported strictly
/// inside the domain and within |y| <= y_radius.
std::vector<TestFunction> make_bump_dictionary(std::uint64_t seed, int count,
                                               const Domain1D& domain, int m,
                                               double y_radius);

}  // namespace bvlift
