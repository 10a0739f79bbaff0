#include "bvlift/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace bvlift {

namespace {

GaussLegendre build_rule(int order) {
  GaussLegendre rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  // Pin the weight sum to exactly 2 so constants integrate without
  // rounding residue (atomic jump terms rely on this).
  for (int iter = 0; iter < 4; ++iter) {
    double s = 0.0;
    for (double w : rule.weights) s += w;
    if (s == 2.0) break;
    rule.weights[n / 2] += 2.0 - s;
  }
  return rule;
}

}  // namespace

const GaussLegendre& GaussLegendre::get(int order) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order) {
  const auto& rule = GaussLegendre::get(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < order; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

Vec integrate_gl_vec(const std::function<Vec(double)>& f, double a, double b,
                     int order, int dim) {
  const auto& rule = GaussLegendre::get(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Vec acc = Vec::Zero(dim);
  for (int i = 0; i < order; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

double integrate_theta(const std::function<double(double)>& f, int order) {
  return integrate_gl(f, 0.0, 1.0, order);
}

Vec integrate_theta_vec(const std::function<Vec(double)>& f, int order, int dim) {
  return integrate_gl_vec(f, 0.0, 1.0, order, dim);
}

Mat integrate_theta_mat(const std::function<Mat(double)>& f, int order, int rows,
                        int cols) {
  const auto& rule = GaussLegendre::get(order);
  const double mid = 0.5, half = 0.5;
  Mat acc = Mat::Zero(rows, cols);
  for (int i = 0; i < order; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

namespace {
constexpr int kPanelOrder = 15;

struct Interval {
  double a, b;
  double coarse;  // GL15 over [a,b]
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, long budget) {
  if (a == b) return {0.0, 0.0};
  QuadResult out;
  std::vector<Interval> stack;
  stack.push_back({a, b, integrate_gl(f, a, b, kPanelOrder)});
  long used = 0;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (++used > budget)
      throw quadrature_failure("adaptive quadrature: subdivision budget exhausted");
    const double m = 0.5 * (iv.a + iv.b);
    const double left = integrate_gl(f, iv.a, m, kPanelOrder);
    const double right = integrate_gl(f, m, iv.b, kPanelOrder);
    const double err = std::abs(iv.coarse - left - right);
    if (err <= abs_tol || (iv.b - iv.a) < 1e-14 * (b - a)) {
      out.value += left + right;
      out.error += err;
    } else {
      stack.push_back({iv.a, m, left});
      stack.push_back({m, iv.b, right});
    }
  }
  return out;
}

VecQuadResult integrate_adaptive_vec(const std::function<Vec(double)>& f, double a,
                                     double b, int dim, double abs_tol, long budget) {
  struct VInterval {
    double a, b;
    Vec coarse;
  };
  VecQuadResult out;
  out.value = Vec::Zero(dim);
  if (a == b) return out;
  std::vector<VInterval> stack;
  stack.push_back({a, b, integrate_gl_vec(f, a, b, kPanelOrder, dim)});
  long used = 0;
  while (!stack.empty()) {
    VInterval iv = stack.back();
    stack.pop_back();
    if (++used > budget)
      throw quadrature_failure("adaptive quadrature (vector): budget exhausted");
    const double m = 0.5 * (iv.a + iv.b);
    Vec left = integrate_gl_vec(f, iv.a, m, kPanelOrder, dim);
    Vec right = integrate_gl_vec(f, m, iv.b, kPanelOrder, dim);
    const double err = (iv.coarse - left - right).cwiseAbs().sum();
    if (err <= abs_tol || (iv.b - iv.a) < 1e-14 * (b - a)) {
      out.value += left + right;
      out.error += err;
    } else {
      stack.push_back({iv.a, m, std::move(left)});
      stack.push_back({m, iv.b, std::move(right)});
    }
  }
  return out;
}

}  // namespace bvlift
