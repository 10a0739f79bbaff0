#include "bvlift/functional.hpp"

#include <cmath>

namespace bvlift {

namespace {

// Nudge a quadrature node off the integrand's exceptional set.
double shielded(double x, const ContinuityClass& c) {
  if (c.caratheodory)
    for (double n : c.exceptional_set)
      if (x == n) return x + 1e-13;
  return x;
}

bool has_singular_part(const BVFunction1D& u) {
  return !u.jumps().empty() || !u.cantor().empty();
}

void require_recession(const Integrand& f, const BVFunction1D& u,
                       const char* who) {
  if (has_singular_part(u) && !f.recession)
    throw no_recession(std::string(who) +
                       ": singular mass present but no recession function");
}

}  // namespace

FunctionalValue evaluate_F(const Integrand& f, const BVFunction1D& u,
                           const QuadratureSpec& q) {
  require_recession(f, u, "evaluate_F");
  FunctionalValue out;
  for (const auto& piece : u.pieces()) {
    auto r = integrate_adaptive(
        [&](double x) {
          const double xs = shielded(x, f.continuity);
          return f.eval(xs, u(xs), u.ac_derivative(xs));
        },
        piece.lo, piece.hi, q);
    out.ac_part += r.value;
    out.error_estimate += r.error;
  }
  for (const auto& j : u.jumps()) {
    const Vec dir = j.direction();
    out.jump_part +=
        j.mass() * integrate_theta(
                       [&](double theta) {
                         Vec ytheta = theta * j.right_trace +
                                      (1.0 - theta) * j.left_trace;
                         return f.recession(j.location, ytheta, dir);
                       },
                       q.theta_order);
  }
  for (const auto& c : u.cantor()) {
    const double mass = c.mass_vector.norm();
    const Vec vhat = c.mass_vector / mass;
    out.cantor_part +=
        mass * integrate_cantor01(
                   c,
                   [&](double x) {
                     const double xs = shielded(x, f.continuity);
                     return f.recession(xs, u.precise_value(xs), vhat);
                   },
                   q.ac_tolerance, q.cantor_depth);
    out.error_estimate += q.ac_tolerance + std::ldexp(mass, -q.cantor_depth);
  }
  out.total = out.ac_part + out.jump_part + out.cantor_part;
  return out;
}

FunctionalValue evaluate_F_graph(const Integrand& f, const BVFunction1D& u,
                                 const QuadratureSpec& q) {
  require_recession(f, u, "evaluate_F_graph");
  PerspectiveIntegrand pf;
  pf.base = f;
  FunctionalValue out;
  for (const auto& piece : u.pieces()) {
    auto r = integrate_adaptive(
        [&](double x) {
          const double xs = shielded(x, f.continuity);
          const double t = (xs < 0.0) ? -1.0 : 1.0;  // d|x|/dx a.e.
          const Vec grad = u.ac_derivative(xs);
          const double n = std::sqrt(1.0 + grad.squaredNorm());
          return pf.eval(xs, std::abs(xs), u(xs), t / n, Vec(grad / n)) * n;
        },
        piece.lo, piece.hi, q);
    out.ac_part += r.value;
    out.error_estimate += r.error;
  }
  for (const auto& j : u.jumps()) {
    const Vec dir = j.direction();
    out.jump_part +=
        j.mass() * integrate_theta(
                       [&](double theta) {
                         Vec ytheta = theta * j.right_trace +
                                      (1.0 - theta) * j.left_trace;
                         return pf.eval(j.location, std::abs(j.location), ytheta,
                                        0.0, dir);
                       },
                       q.theta_order);
  }
  for (const auto& c : u.cantor()) {
    const double mass = c.mass_vector.norm();
    const Vec vhat = c.mass_vector / mass;
    out.cantor_part +=
        mass * integrate_cantor01(
                   c,
                   [&](double x) {
                     const double xs = shielded(x, f.continuity);
                     return pf.eval(xs, std::abs(xs), u.precise_value(xs), 0.0,
                                    vhat);
                   },
                   q.ac_tolerance, q.cantor_depth);
    out.error_estimate += q.ac_tolerance + std::ldexp(mass, -q.cantor_depth);
  }
  out.total = out.ac_part + out.jump_part + out.cantor_part;
  return out;
}

double area_functional(const BVFunction1D& u, const QuadratureSpec& q) {
  return evaluate_F(make_integrand("area"), u, q).total;
}

}  // namespace bvlift
