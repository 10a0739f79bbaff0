#include "bvlift/lifting.hpp"

#include <cmath>
#include <random>

namespace bvlift {

LiftingMeasure build_lifting(const BVFunction1D& u, const QuadratureSpec& q) {
  LiftingMeasure mu{u, {}};
  const auto& pieces = u.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    LiftingComponent c;
    c.kind = LiftingKind::Ac;
    c.lo = pieces[i].lo;
    c.hi = pieces[i].hi;
    c.piece = static_cast<int>(i);
    if (pieces[i].kind == PieceKind::Affine) {
      c.mass = pieces[i].derivative(0.5 * (c.lo + c.hi)).norm() * (c.hi - c.lo);
    } else {
      c.mass = integrate_adaptive(
                   [&](double x) { return pieces[i].derivative(x).norm(); },
                   c.lo, c.hi, q)
                   .value;
    }
    mu.components.push_back(std::move(c));
  }
  for (const auto& j : u.jumps()) {
    LiftingComponent c;
    c.kind = LiftingKind::Jump;
    c.location = j.location;
    c.left_trace = j.left_trace;
    c.right_trace = j.right_trace;
    c.polar = j.direction();
    c.mass = j.mass();
    mu.components.push_back(std::move(c));
  }
  for (const auto& cc : u.cantor()) {
    LiftingComponent c;
    c.kind = LiftingKind::Cantor;
    c.cantor = cc;
    c.mass = cc.mass_vector.norm();
    c.polar = cc.mass_vector / c.mass;
    mu.components.push_back(std::move(c));
  }
  return mu;
}

double total_mass(const LiftingMeasure& mu) {
  double s = 0.0;
  for (const auto& c : mu.components) s += c.mass;
  return s;
}

namespace {

void require_interior_support(const TestFunction& phi, const Domain1D& d) {
  if (!(phi.x_lo > d.a && phi.x_hi < d.b && phi.x_lo < phi.x_hi))
    throw support_violation("test function support must lie strictly inside the domain");
}

}  // namespace

double Q(const TestFunction& phi, const BVFunction1D& u,
         const LiftingMeasure& mu, const QuadratureSpec& q) {
  require_interior_support(phi, u.domain());
  double acc = 0.0;
  for (const auto& piece : u.pieces()) {
    const double lo = std::max(piece.lo, phi.x_lo);
    const double hi = std::min(piece.hi, phi.x_hi);
    if (lo >= hi) continue;
    acc += integrate_adaptive([&](double x) { return phi.grad_x(x, u(x)); }, lo,
                              hi, q)
               .value;
  }
  for (const auto& c : mu.components) {
    switch (c.kind) {
      case LiftingKind::Ac: {
        const auto& piece = mu.source.pieces()[c.piece];
        const double lo = std::max(c.lo, phi.x_lo);
        const double hi = std::min(c.hi, phi.x_hi);
        if (lo >= hi) break;
        acc += integrate_adaptive(
                   [&](double x) {
                     return phi.grad_y(x, mu.source(x)).dot(piece.derivative(x));
                   },
                   lo, hi, q)
                   .value;
        break;
      }
      case LiftingKind::Jump: {
        if (c.location <= phi.x_lo || c.location >= phi.x_hi) break;
        const Vec gap = c.right_trace - c.left_trace;
        // adaptive in theta: generic test functions may have C1 kinks along
        // the jump segment that a fixed-order rule misses
        Vec avg = integrate_adaptive_vec(
                      [&](double theta) {
                        return phi.grad_y(c.location,
                                          Vec(theta * c.right_trace +
                                              (1.0 - theta) * c.left_trace));
                      },
                      0.0, 1.0, static_cast<int>(gap.size()), q.ac_tolerance,
                      q.subdivision_budget)
                      .value;
        acc += avg.dot(gap);
        break;
      }
      case LiftingKind::Cantor: {
        acc += c.mass *
               integrate_cantor01(
                   c.cantor,
                   [&](double x) {
                     if (x <= phi.x_lo || x >= phi.x_hi) return 0.0;
                     return phi.grad_y(x, mu.source.precise_value(x)).dot(c.polar);
                   },
                   q.ac_tolerance, q.cantor_depth);
        break;
      }
    }
  }
  return acc;
}

namespace {

void require_homogeneous(const Integrand& f, const BVFunction1D& u) {
  const Domain1D& d = u.domain();
  const double xs[] = {d.a + 0.25 * d.length(), d.a + 0.5 * d.length(),
                       d.a + 0.75 * d.length()};
  for (double x : xs) {
    Vec y = u(x);
    for (int dir = 0; dir < f.m; ++dir) {
      for (double sign : {1.0, -1.0}) {
        Vec A = sign * Vec::Unit(f.m, dir);
        const double base = f.eval(x, y, A);
        for (double lambda : {0.5, 2.0, 10.0}) {
          const double scaled = f.eval(x, y, Vec(lambda * A));
          if (std::abs(scaled - lambda * base) >
              1e-9 * lambda * std::max(std::abs(base), 1.0))
            throw not_homogeneous(
                "functional_via_lifting: integrand is not 1-homogeneous in A");
        }
      }
    }
  }
}

}  // namespace

double functional_via_lifting(const Integrand& f, const BVFunction1D& u,
                              const QuadratureSpec& q) {
  require_homogeneous(f, u);
  LiftingMeasure mu = build_lifting(u, q);
  double acc = 0.0;
  for (const auto& c : mu.components) {
    switch (c.kind) {
      case LiftingKind::Ac: {
        const auto& piece = mu.source.pieces()[c.piece];
        acc += integrate_adaptive(
                   [&](double x) {
                     Vec g = piece.derivative(x);
                     const double n = g.norm();
                     return n == 0.0 ? 0.0 : n * f.eval(x, u(x), Vec(g / n));
                   },
                   c.lo, c.hi, q)
                   .value;
        break;
      }
      case LiftingKind::Jump:
        acc += c.mass * integrate_theta(
                            [&](double theta) {
                              return f.eval(c.location,
                                            Vec(theta * c.right_trace +
                                                (1.0 - theta) * c.left_trace),
                                            c.polar);
                            },
                            q.theta_order);
        break;
      case LiftingKind::Cantor:
        acc += c.mass * integrate_cantor01(
                            c.cantor,
                            [&](double x) {
                              return f.eval(x, mu.source.precise_value(x), c.polar);
                            },
                            q.ac_tolerance, q.cantor_depth);
        break;
    }
  }
  return acc;
}

Vec pushforward_pair(const LiftingMeasure& mu,
                     const std::function<double(double)>& h,
                     const QuadratureSpec& q) {
  const int m = mu.source.dim();
  Vec acc = Vec::Zero(m);
  for (const auto& c : mu.components) {
    switch (c.kind) {
      case LiftingKind::Ac: {
        const auto& piece = mu.source.pieces()[c.piece];
        acc += integrate_adaptive_vec(
                   [&](double x) { return Vec(h(x) * piece.derivative(x)); },
                   c.lo, c.hi, m, q.ac_tolerance, q.subdivision_budget)
                   .value;
        break;
      }
      case LiftingKind::Jump:
        acc += h(c.location) * (c.right_trace - c.left_trace);
        break;
      case LiftingKind::Cantor:
        acc += c.cantor.mass_vector *
               integrate_cantor01(c.cantor, h, q.ac_tolerance, q.cantor_depth);
        break;
    }
  }
  return acc;
}

double tail_gradient_mass(const BVFunction1D& u, double k,
                          const QuadratureSpec& q) {
  double acc = 0.0;
  // ac part: |grad u| over {|u| >= k}; locate the level-set boundary by
  // sign scanning plus bisection inside each mesh cell.
  for (const auto& piece : u.pieces()) {
    auto level = [&](double x) { return u(x).norm() - k; };
    const int n = 256;
    std::vector<double> cuts{piece.lo};
    double prev = level(piece.lo);
    for (int i = 1; i <= n; ++i) {
      const double x = piece.lo + (piece.hi - piece.lo) * i / n;
      const double cur = level(x);
      if ((prev > 0.0) != (cur > 0.0)) {
        double lo = piece.lo + (piece.hi - piece.lo) * (i - 1) / n, hi = x;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          if ((level(mid) > 0.0) == (prev > 0.0))
            lo = mid;
          else
            hi = mid;
        }
        cuts.push_back(0.5 * (lo + hi));
      }
      prev = cur;
    }
    cuts.push_back(piece.hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (level(0.5 * (cuts[i] + cuts[i + 1])) >= 0.0) {
        acc += integrate_adaptive(
                   [&](double x) { return piece.derivative(x).norm(); }, cuts[i],
                   cuts[i + 1], q)
                   .value;
      }
    }
  }
  // jump part: dtheta-measure of the segment outside B_k, exact via the
  // quadratic |u^- + theta (u^+ - u^-)|^2 = k^2.
  for (const auto& j : u.jumps()) {
    const Vec g = j.gap();
    const double a = g.squaredNorm();
    const double b = 2.0 * j.left_trace.dot(g);
    const double cc = j.left_trace.squaredNorm() - k * k;
    double inside = 0.0;  // measure of {theta in [0,1]: |y(theta)| < k}
    const double disc = b * b - 4.0 * a * cc;
    if (disc > 0.0) {
      const double r1 = (-b - std::sqrt(disc)) / (2.0 * a);
      const double r2 = (-b + std::sqrt(disc)) / (2.0 * a);
      inside = std::max(0.0, std::min(1.0, r2) - std::max(0.0, r1));
    }
    acc += j.mass() * (1.0 - inside);
  }
  for (const auto& c : u.cantor()) {
    acc += c.mass_vector.norm() *
           integrate_cantor01(
               c,
               [&](double x) {
                 return u.precise_value(x).norm() >= k ? 1.0 : 0.0;
               },
               q.ac_tolerance, q.cantor_depth);
  }
  return acc;
}

Vec pair_lifting(const LiftingMeasure& mu, const TestFunction& phi,
                 const QuadratureSpec& q) {
  const int m = mu.source.dim();
  Vec acc = Vec::Zero(m);
  for (const auto& c : mu.components) {
    switch (c.kind) {
      case LiftingKind::Ac: {
        const auto& piece = mu.source.pieces()[c.piece];
        const double lo = std::max(c.lo, phi.x_lo);
        const double hi = std::min(c.hi, phi.x_hi);
        if (lo >= hi) break;
        acc += integrate_adaptive_vec(
                   [&](double x) {
                     return Vec(phi.eval(x, mu.source(x)) * piece.derivative(x));
                   },
                   lo, hi, m, q.ac_tolerance, q.subdivision_budget)
                   .value;
        break;
      }
      case LiftingKind::Jump: {
        if (c.location <= phi.x_lo || c.location >= phi.x_hi) break;
        const double avg =
            integrate_adaptive(
                [&](double theta) {
                  return phi.eval(c.location,
                                  Vec(theta * c.right_trace +
                                      (1.0 - theta) * c.left_trace));
                },
                0.0, 1.0, q)
                .value;
        acc += avg * (c.right_trace - c.left_trace);
        break;
      }
      case LiftingKind::Cantor:
        acc += c.cantor.mass_vector *
               integrate_cantor01(
                   c.cantor,
                   [&](double x) {
                     if (x <= phi.x_lo || x >= phi.x_hi) return 0.0;
                     return phi.eval(x, mu.source.precise_value(x));
                   },
                   q.ac_tolerance, q.cantor_depth);
        break;
    }
  }
  return acc;
}

std::vector<LiftingConvergenceRow> lifting_convergence_report(
    const std::vector<int>& indices, const std::vector<BVFunction1D>& members,
    const BVFunction1D& limit, const std::vector<TestFunction>& dictionary,
    const QuadratureSpec& q) {
  LiftingMeasure mu_limit = build_lifting(limit, q);
  const double limit_mass = total_mass(mu_limit);
  std::vector<Vec> limit_pairings;
  limit_pairings.reserve(dictionary.size());
  for (const auto& phi : dictionary)
    limit_pairings.push_back(pair_lifting(mu_limit, phi, q));
  std::vector<LiftingConvergenceRow> rows;
  for (std::size_t i = 0; i < members.size(); ++i) {
    LiftingMeasure mu = build_lifting(members[i], q);
    LiftingConvergenceRow row;
    row.index = i < indices.size() ? indices[i] : static_cast<int>(i);
    row.mass_gap = std::abs(total_mass(mu) - limit_mass);
    for (std::size_t d = 0; d < dictionary.size(); ++d) {
      row.pairing_gap =
          std::max(row.pairing_gap,
                   (pair_lifting(mu, dictionary[d], q) - limit_pairings[d]).norm());
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

double bump(double t) {
  const double s = 1.0 - t * t;
  return s > 0.0 ? s * s : 0.0;
}

double bump_prime(double t) {
  const double s = 1.0 - t * t;
  return s > 0.0 ? -4.0 * t * s : 0.0;
}

}  // namespace

std::vector<TestFunction> make_bump_dictionary(std::uint64_t seed, int count,
                                               const Domain1D& domain, int m,
                                               double y_radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double L = domain.length();
  std::vector<TestFunction> dict;
  dict.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double cx = domain.a + (0.15 + 0.7 * unit(rng)) * L;
    const double wx =
        std::min({0.05 * L + 0.07 * L * unit(rng), cx - domain.a - 1e-6 * L,
                  domain.b - cx - 1e-6 * L});
    Vec cy(m), wy(m);
    for (int d = 0; d < m; ++d) {
      cy[d] = (unit(rng) - 0.5) * y_radius;
      wy[d] = (0.5 + unit(rng)) * y_radius;
    }
    TestFunction phi;
    phi.x_lo = cx - wx;
    phi.x_hi = cx + wx;
    phi.eval = [cx, wx, cy, wy, m](double x, const Vec& y) {
      double v = bump((x - cx) / wx);
      for (int d = 0; d < m; ++d) v *= bump((y[d] - cy[d]) / wy[d]);
      return v;
    };
    phi.grad_x = [cx, wx, cy, wy, m](double x, const Vec& y) {
      double v = bump_prime((x - cx) / wx) / wx;
      for (int d = 0; d < m; ++d) v *= bump((y[d] - cy[d]) / wy[d]);
      return v;
    };
    phi.grad_y = [cx, wx, cy, wy, m](double x, const Vec& y) {
      const double px = bump((x - cx) / wx);
      Vec g(m);
      for (int d = 0; d < m; ++d) {
        double v = px * bump_prime((y[d] - cy[d]) / wy[d]) / wy[d];
        for (int e = 0; e < m; ++e)
          if (e != d) v *= bump((y[e] - cy[e]) / wy[e]);
        g[d] = v;
      }
      return g;
    };
    dict.push_back(std::move(phi));
  }
  return dict;
}

}  // namespace bvlift
