#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "bvlift/errors.hpp"

namespace bvlift {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Accuracy knobs shared by every integration path.
struct QuadratureSpec {
  int theta_order = 32;           // Gauss-Legendre node count for theta integrals
  double ac_tolerance = 1e-9;     // absolute tolerance per subinterval
  int cantor_depth = 24;          // IFS refinement depth for Cantor measures
  long subdivision_budget = 100000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

struct VecQuadResult {
  Vec value;
  double error = 0.0;
};

/// Gauss-Legendre rule on [-1,1]; nodes/weights computed once per order
/// by Newton iteration on the Legendre recurrence and cached.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  static const GaussLegendre& get(int order);
};

/// Fixed-order Gauss-Legendre integral of f over [a,b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order);
Vec integrate_gl_vec(const std::function<Vec(double)>& f, double a, double b,
                     int order, int dim);

/// Integral of f over [0,1] (handy for theta integrals).
double integrate_theta(const std::function<double(double)>& f, int order);
Vec integrate_theta_vec(const std::function<Vec(double)>& f, int order, int dim);
Mat integrate_theta_mat(const std::function<Mat(double)>& f, int order, int rows,
                        int cols);

/// Adaptive bisection with a Gauss pair error estimate: an interval is
/// accepted once |GL15(I) - GL15(I_left) - GL15(I_right)| falls below
/// the per-subinterval tolerance. Throws quadrature_failure when the
/// subdivision budget runs out first.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, long budget);
VecQuadResult integrate_adaptive_vec(const std::function<Vec(double)>& f, double a,
                                     double b, int dim, double abs_tol, long budget);

inline QuadResult integrate_adaptive(const std::function<double(double)>& f,
                                     double a, double b,
                                     const QuadratureSpec& q) {
  return integrate_adaptive(f, a, b, q.ac_tolerance, q.subdivision_budget);
}

}  // namespace bvlift
