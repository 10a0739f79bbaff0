#include "bvlift/bv_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bvlift {

double CantorComponent::staircase01(double t, int depth) const {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double c = contraction();
  double acc = 0.0;
  double w = 1.0;
  for (int k = 0; k < depth; ++k) {
    if (t <= c) {
      t /= c;
      w *= 0.5;
    } else if (t >= 1.0 - c) {
      acc += 0.5 * w;
      w *= 0.5;
      t = (t - (1.0 - c)) / c;
    } else {
      return acc + 0.5 * w;  // plateau over the removed middle
    }
    if (t <= 0.0) return acc;
    if (t >= 1.0) return acc + w;
  }
  return acc + w * t;
}

namespace {

struct CantorNode {
  double lo, hi, mass, tol;
  int depth;
  double coarse;  // mass * phi(mid)
};

// Midpoint agreement between a node and its children is blind to integrands
// supported between the sample points (e.g. a narrow mollifier kernel), so
// refinement is forced for the first levels before the tolerance test may
// accept.
constexpr int kCantorMinDepth = 8;

}  // namespace

double integrate_cantor01(const CantorComponent& c,
                          const std::function<double(double)>& phi, double tol,
                          int max_depth) {
  const double ratio = c.contraction();
  double total = 0.0;
  std::vector<CantorNode> stack;
  stack.push_back({c.lo, c.hi, 1.0, tol, 0, phi(0.5 * (c.lo + c.hi))});
  while (!stack.empty()) {
    CantorNode n = stack.back();
    stack.pop_back();
    const double len = n.hi - n.lo;
    const double clen = ratio * len;
    const double lmid = n.lo + 0.5 * clen;
    const double rmid = n.hi - 0.5 * clen;
    const double lcoarse = 0.5 * n.mass * phi(lmid);
    const double rcoarse = 0.5 * n.mass * phi(rmid);
    const double fine = lcoarse + rcoarse;
    if ((n.depth >= kCantorMinDepth && std::abs(fine - n.coarse) <= n.tol) ||
        n.depth + 1 >= max_depth) {
      total += fine;
    } else {
      stack.push_back({n.lo, n.lo + clen, 0.5 * n.mass, 0.5 * n.tol, n.depth + 1, lcoarse});
      stack.push_back({n.hi - clen, n.hi, 0.5 * n.mass, 0.5 * n.tol, n.depth + 1, rcoarse});
    }
  }
  return total;
}

Vec integrate_cantor01_vec(const CantorComponent& c,
                           const std::function<Vec(double)>& phi, int dim,
                           double tol, int max_depth) {
  struct Node {
    double lo, hi, mass, tol;
    int depth;
    Vec coarse;
  };
  const double ratio = c.contraction();
  Vec total = Vec::Zero(dim);
  std::vector<Node> stack;
  stack.push_back({c.lo, c.hi, 1.0, tol, 0, Vec(phi(0.5 * (c.lo + c.hi)))});
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    const double len = n.hi - n.lo;
    const double clen = ratio * len;
    Vec lcoarse = 0.5 * n.mass * phi(n.lo + 0.5 * clen);
    Vec rcoarse = 0.5 * n.mass * phi(n.hi - 0.5 * clen);
    Vec fine = lcoarse + rcoarse;
    if ((n.depth >= kCantorMinDepth &&
         (fine - n.mass * n.coarse).cwiseAbs().sum() <= n.tol) ||
        n.depth + 1 >= max_depth) {
      total += fine;
    } else {
      stack.push_back({n.lo, n.lo + clen, 0.5 * n.mass, 0.5 * n.tol, n.depth + 1,
                       Vec(lcoarse / (0.5 * n.mass))});
      stack.push_back({n.hi - clen, n.hi, 0.5 * n.mass, 0.5 * n.tol, n.depth + 1,
                       Vec(rcoarse / (0.5 * n.mass))});
    }
  }
  return total;
}

BVFunction1D::BVFunction1D(Domain1D domain, std::vector<double> interior_breakpoints,
                           std::vector<Piece> pieces,
                           std::vector<CantorComponent> cantor, int cantor_depth)
    : domain_(domain),
      breakpoints_(std::move(interior_breakpoints)),
      pieces_(std::move(pieces)),
      cantor_(std::move(cantor)),
      cantor_depth_(cantor_depth) {
  if (!(domain_.a < domain_.b) || !std::isfinite(domain_.a) || !std::isfinite(domain_.b))
    throw std::invalid_argument("BVFunction1D: domain must be a finite interval");
  if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()))
    throw std::invalid_argument("BVFunction1D: breakpoints must be sorted");
  for (double bp : breakpoints_)
    if (!(bp > domain_.a && bp < domain_.b))
      throw std::invalid_argument("BVFunction1D: breakpoints must be interior");
  if (pieces_.size() != breakpoints_.size() + 1)
    throw std::invalid_argument("BVFunction1D: need one piece per mesh cell");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    pieces_[i].lo = (i == 0) ? domain_.a : breakpoints_[i - 1];
    pieces_[i].hi = (i == pieces_.size() - 1) ? domain_.b : breakpoints_[i];
    if (!pieces_[i].value || !pieces_[i].derivative)
      throw std::invalid_argument("BVFunction1D: piece needs value and derivative");
  }
  dim_ = static_cast<int>(pieces_[0].value(0.5 * (pieces_[0].lo + pieces_[0].hi)).size());
  for (const auto& c : cantor_) {
    if (!(c.lo >= domain_.a && c.hi <= domain_.b && c.lo < c.hi))
      throw std::invalid_argument("BVFunction1D: cantor support outside domain");
    if (!(c.removed_fraction > 0.0 && c.removed_fraction < 1.0))
      throw std::invalid_argument("BVFunction1D: removed fraction must be in (0,1)");
    if (c.mass_vector.size() != dim_ || c.mass_vector.norm() == 0.0)
      throw std::invalid_argument("BVFunction1D: bad cantor mass vector");
  }
  // Jump atoms are exactly the interior breakpoints with mismatched traces.
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const double x = breakpoints_[i];
    Vec l = pieces_[i].value(x);
    Vec r = pieces_[i + 1].value(x);
    if ((r - l).norm() > kJumpTolerance) {
      Vec stair = cantor_value(x);
      jumps_.push_back({x, l + stair, r + stair});
    }
  }
}

int BVFunction1D::piece_index(double x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<int>(it - breakpoints_.begin());
}

Vec BVFunction1D::cantor_value(double x) const {
  Vec s = Vec::Zero(dim_);
  for (const auto& c : cantor_) s += c.staircase(x, cantor_depth_);
  return s;
}

Vec BVFunction1D::piecewise_value(double x) const {
  return pieces_[piece_index(x)].value(x);
}

Vec BVFunction1D::operator()(double x) const {
  return piecewise_value(x) + cantor_value(x);
}

Vec BVFunction1D::left_limit(double x) const {
  int idx = piece_index(x);
  // at a breakpoint, upper_bound already selects the right-hand piece
  if (idx > 0 && x <= pieces_[idx].lo) --idx;
  return pieces_[idx].value(x) + cantor_value(x);
}

Vec BVFunction1D::right_limit(double x) const {
  return pieces_[piece_index(x)].value(x) + cantor_value(x);
}

Vec BVFunction1D::precise_value(double x) const {
  return 0.5 * (left_limit(x) + right_limit(x));
}

Vec BVFunction1D::ac_derivative(double x) const {
  return pieces_[piece_index(x)].derivative(x);
}

double BVFunction1D::sup_norm() const {
  double s = 0.0;
  const int n = 512;
  for (int i = 0; i <= n; ++i) {
    double x = domain_.a + (domain_.b - domain_.a) * i / n;
    s = std::max(s, (*this)(x).norm());
  }
  for (double bp : breakpoints_) {
    s = std::max(s, left_limit(bp).norm());
    s = std::max(s, right_limit(bp).norm());
  }
  return s;
}

DerivativeDecomposition decompose(const BVFunction1D& u, const QuadratureSpec& q) {
  DerivativeDecomposition d;
  d.ac_density = [&u](double x) { return u.ac_derivative(x); };
  d.jumps = u.jumps();
  d.cantor = u.cantor();
  for (const auto& piece : u.pieces()) {
    if (piece.kind == PieceKind::Affine) {
      d.ac_mass += piece.derivative(0.5 * (piece.lo + piece.hi)).norm() *
                   (piece.hi - piece.lo);
    } else {
      d.ac_mass += integrate_adaptive(
                       [&piece](double x) { return piece.derivative(x).norm(); },
                       piece.lo, piece.hi, q)
                       .value;
    }
  }
  for (const auto& j : u.jumps()) d.jump_mass += j.mass();
  for (const auto& c : u.cantor()) d.cantor_mass += c.mass_vector.norm();
  return d;
}

double total_variation(const BVFunction1D& u, const QuadratureSpec& q) {
  return decompose(u, q).total();
}

Vec jump_average(const BVFunction1D& u, double x, double theta) {
  for (const auto& j : u.jumps())
    if (j.location == x) return theta * j.right_trace + (1.0 - theta) * j.left_trace;
  return u.precise_value(x);
}

BVFunction1D compose(const C1Map& g, const BVFunction1D& u) {
  if (!u.cantor().empty())
    throw unsupported_cantor_composition(
        "compose: Cantor components leave the staircase representation");
  if (g.in_dim != u.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  std::vector<Piece> pieces;
  pieces.reserve(u.pieces().size());
  for (const auto& p : u.pieces()) {
    Piece np;
    np.kind = PieceKind::GeneralC1;
    np.value = [g, p](double x) { return g.value(p.value(x)); };
    np.derivative = [g, p](double x) {
      return Vec(g.jacobian(p.value(x)) * p.derivative(x));
    };
    pieces.push_back(std::move(np));
  }
  return BVFunction1D(u.domain(), u.breakpoints(), std::move(pieces), {},
                      u.cantor_depth());
}

Mat volpert_average(const C1Map& g, const BVFunction1D& u, double x,
                    int theta_order) {
  for (const auto& j : u.jumps()) {
    if (j.location == x) {
      return integrate_theta_mat(
          [&](double theta) {
            return g.jacobian(theta * j.right_trace + (1.0 - theta) * j.left_trace);
          },
          theta_order, g.out_dim, g.in_dim);
    }
  }
  return g.jacobian(u.precise_value(x));
}

namespace {

std::vector<double> merged_mesh(const BVFunction1D& u, const BVFunction1D& v) {
  std::vector<double> mesh;
  mesh.push_back(u.domain().a);
  mesh.insert(mesh.end(), u.breakpoints().begin(), u.breakpoints().end());
  mesh.insert(mesh.end(), v.breakpoints().begin(), v.breakpoints().end());
  mesh.push_back(u.domain().b);
  std::sort(mesh.begin(), mesh.end());
  mesh.erase(std::unique(mesh.begin(), mesh.end()), mesh.end());
  return mesh;
}

void require_same_domain(const BVFunction1D& u, const BVFunction1D& v) {
  if (u.domain().a != v.domain().a || u.domain().b != v.domain().b)
    throw std::invalid_argument("distance: functions live on different domains");
}

}  // namespace

double lp_distance(const BVFunction1D& u, const BVFunction1D& v, double p,
                   const QuadratureSpec& q) {
  require_same_domain(u, v);
  if (p < 1.0) throw std::invalid_argument("lp_distance: p must be >= 1");
  auto mesh = merged_mesh(u, v);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
    acc += integrate_adaptive(
               [&](double x) { return std::pow((u(x) - v(x)).norm(), p); },
               mesh[i], mesh[i + 1], q)
               .value;
  }
  return std::pow(acc, 1.0 / p);
}

double sup_distance(const BVFunction1D& u, const BVFunction1D& v,
                    int samples_per_cell) {
  require_same_domain(u, v);
  auto mesh = merged_mesh(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
    for (int k = 1; k < samples_per_cell; ++k) {
      double x = mesh[i] + (mesh[i + 1] - mesh[i]) * k / samples_per_cell;
      s = std::max(s, (u(x) - v(x)).norm());
    }
  }
  for (double x : mesh) {
    s = std::max(s, (u.left_limit(x) - v.left_limit(x)).norm());
    s = std::max(s, (u.right_limit(x) - v.right_limit(x)).norm());
  }
  return s;
}

double sphere_area(int d) {
  if (d < 1) throw std::invalid_argument("sphere_area: d >= 1 required");
  if (d == 1) return 1.0;  // degenerate reduction to the plain 1D formulas
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

double radial_total_variation(const RadialBV& ru, const QuadratureSpec& q) {
  const int d = ru.dimension;
  const double w = static_cast<double>(d - 1);
  const auto& g = ru.profile;
  double acc = 0.0;
  for (const auto& piece : g.pieces()) {
    acc += integrate_adaptive(
               [&](double r) { return piece.derivative(r).norm() * std::pow(r, w); },
               piece.lo, piece.hi, q)
               .value;
  }
  for (const auto& j : g.jumps()) acc += std::pow(j.location, w) * j.mass();
  for (const auto& c : g.cantor()) {
    acc += c.mass_vector.norm() *
           integrate_cantor01(
               c, [w](double r) { return std::pow(r, w); }, q.ac_tolerance,
               q.cantor_depth);
  }
  return sphere_area(d) * acc;
}

double radial_lp_norm(const RadialBV& ru, double p, const QuadratureSpec& q) {
  const double w = static_cast<double>(ru.dimension - 1);
  const auto& g = ru.profile;
  double acc = 0.0;
  for (const auto& piece : g.pieces()) {
    acc += integrate_adaptive(
               [&](double r) { return std::pow(g(r).norm(), p) * std::pow(r, w); },
               piece.lo, piece.hi, q)
               .value;
  }
  return std::pow(sphere_area(ru.dimension) * acc, 1.0 / p);
}

double radial_lp_distance(const RadialBV& ru, const RadialBV& rv, double p,
                          const QuadratureSpec& q) {
  if (ru.dimension != rv.dimension)
    throw std::invalid_argument("radial_lp_distance: dimension mismatch");
  require_same_domain(ru.profile, rv.profile);
  const double w = static_cast<double>(ru.dimension - 1);
  auto mesh = merged_mesh(ru.profile, rv.profile);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
    acc += integrate_adaptive(
               [&](double r) {
                 return std::pow((ru.profile(r) - rv.profile(r)).norm(), p) *
                        std::pow(r, w);
               },
               mesh[i], mesh[i + 1], q)
               .value;
  }
  return std::pow(sphere_area(ru.dimension) * acc, 1.0 / p);
}

double radial_sup_distance(const RadialBV& ru, const RadialBV& rv) {
  return sup_distance(ru.profile, rv.profile);
}

}  // namespace bvlift
