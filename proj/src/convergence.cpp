#include "bvlift/convergence.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace bvlift {

double strict_distance(const BVFunction1D& u, const BVFunction1D& v,
                       const QuadratureSpec& q) {
  return lp_distance(u, v, 1.0, q) +
         std::abs(total_variation(u, q) - total_variation(v, q));
}

double area_strict_distance(const BVFunction1D& u, const BVFunction1D& v,
                            const QuadratureSpec& q) {
  return lp_distance(u, v, 1.0, q) +
         std::abs(area_functional(u, q) - area_functional(v, q));
}

namespace {

// C1 bump kernel of unit mass on [-1,1] and its antiderivative.
double kernel(double s) {
  if (s <= -1.0 || s >= 1.0) return 0.0;
  const double w = 1.0 - s * s;
  return 0.9375 * w * w;
}

double kernel_prime(double s) {
  if (s <= -1.0 || s >= 1.0) return 0.0;
  return -3.75 * s * (1.0 - s * s);
}

double kernel_cdf(double s) {
  if (s <= -1.0) return 0.0;
  if (s >= 1.0) return 1.0;
  return 0.9375 * (s - 2.0 * s * s * s / 3.0 + s * s * s * s * s / 5.0) + 0.5;
}

struct MollifyCtx {
  BVFunction1D base;
  Domain1D dom;
  double eps;
  int m;
  std::vector<double> ebps;  // breakpoints of the reflected extension
  double tol;
  int depth;

  Vec p_ext(double y) const {
    if (y < dom.a) y = 2.0 * dom.a - y;
    if (y > dom.b) y = 2.0 * dom.b - y;
    y = std::min(std::max(y, dom.a), dom.b);
    return base.piecewise_value(y);
  }

  // s-partition of [-1,1] at the preimages of extension breakpoints.
  std::vector<double> segments(double x) const {
    std::vector<double> ss{-1.0, 1.0};
    for (double e : ebps)
      if (e > x - eps && e < x + eps) ss.push_back((x - e) / eps);
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    return ss;
  }

  Vec convolve(double x, const std::function<double(double)>& ker,
               double scale) const {
    Vec acc = Vec::Zero(m);
    auto ss = segments(x);
    for (std::size_t i = 0; i + 1 < ss.size(); ++i) {
      acc += integrate_gl_vec(
          [&](double s) { return Vec(ker(s) * p_ext(x - eps * s)); }, ss[i],
          ss[i + 1], 32, m);
    }
    return scale * acc;
  }

  // Staircase convolution through the cumulative representation: for a
  // normalized staircase c the mollified value is the Cantor integral of
  // W(x,t) below, reflections at both endpoints folded in analytically.
  double stair_weight(double x, double t) const {
    return kernel_cdf((x - t) / eps) + 1.0 -
           kernel_cdf((x + t - 2.0 * dom.a) / eps) -
           kernel_cdf((x + t - 2.0 * dom.b) / eps);
  }

  double stair_weight_dx(double x, double t) const {
    return (kernel((x - t) / eps) - kernel((x + t - 2.0 * dom.a) / eps) -
            kernel((x + t - 2.0 * dom.b) / eps)) /
           eps;
  }

  Vec value(double x) const {
    Vec acc = convolve(x, kernel, 1.0);
    for (const auto& c : base.cantor()) {
      acc += c.mass_vector *
             integrate_cantor01(
                 c, [&](double t) { return stair_weight(x, t); }, tol, depth);
    }
    return acc;
  }

  Vec derivative(double x) const {
    Vec acc = convolve(x, kernel_prime, 1.0 / eps);
    for (const auto& c : base.cantor()) {
      acc += c.mass_vector *
             integrate_cantor01(
                 c, [&](double t) { return stair_weight_dx(x, t); }, tol, depth);
    }
    return acc;
  }
};

}  // namespace

BVFunction1D mollify(const BVFunction1D& u, double eps, const QuadratureSpec& q) {
  const Domain1D dom = u.domain();
  if (!(eps > 0.0 && eps < 0.25 * dom.length()))
    throw std::invalid_argument("mollify: need 0 < eps < (b-a)/4");
  auto ctx = std::make_shared<MollifyCtx>(MollifyCtx{
      u, dom, eps, u.dim(), {}, q.ac_tolerance, q.cantor_depth});
  std::vector<double> base_pts{dom.a, dom.b};
  base_pts.insert(base_pts.end(), u.breakpoints().begin(), u.breakpoints().end());
  for (double p : base_pts) {
    ctx->ebps.push_back(p);
    ctx->ebps.push_back(2.0 * dom.a - p);
    ctx->ebps.push_back(2.0 * dom.b - p);
  }
  std::sort(ctx->ebps.begin(), ctx->ebps.end());
  ctx->ebps.erase(std::unique(ctx->ebps.begin(), ctx->ebps.end()),
                  ctx->ebps.end());
  // expose the smoothing-zone boundaries as breakpoints so that downstream
  // quadrature meshes isolate each narrow derivative spike
  std::vector<double> bps;
  for (double e : ctx->ebps)
    for (double p : {e - eps, e, e + eps})
      if (p > dom.a + 1e-12 * dom.length() && p < dom.b - 1e-12 * dom.length())
        bps.push_back(p);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  Piece proto;
  proto.kind = PieceKind::GeneralC1;
  proto.value = [ctx](double x) { return ctx->value(x); };
  proto.derivative = [ctx](double x) { return ctx->derivative(x); };
  std::vector<Piece> pieces(bps.size() + 1, proto);
  return BVFunction1D(dom, std::move(bps), std::move(pieces), {},
                      u.cantor_depth());
}

ConvergenceReport run_experiment(const SequenceFamily& family,
                                 const std::vector<std::string>& integrands,
                                 double p, double k, const QuadratureSpec& q) {
  if (!family.limit)
    throw std::invalid_argument("run_experiment: family has no limit");
  const BVFunction1D& limit = *family.limit;
  ConvergenceReport report;
  report.family = family.name;
  report.integrand_names = integrands;
  report.p = p;
  report.k = k;
  report.limit_total_variation = total_variation(limit, q);
  report.limit_area = area_functional(limit, q);
  std::vector<Integrand> fs;
  for (const auto& name : integrands) fs.push_back(make_integrand(name));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& f : fs) {
    try {
      report.F_limit_direct.push_back(evaluate_F(f, limit, q).total);
    } catch (const std::exception&) {
      report.F_limit_direct.push_back(nan);
    }
    try {
      report.F_limit_graph.push_back(evaluate_F_graph(f, limit, q).total);
    } catch (const std::exception&) {
      report.F_limit_graph.push_back(nan);
    }
  }
  for (int j : family.index_range) {
    ReportRow row;
    row.index = j;
    try {
      BVFunction1D uj = family.generator(j);
      row.l1_dist = lp_distance(uj, limit, 1.0, q);
      row.lp_dist = lp_distance(uj, limit, p, q);
      row.sup_dist = sup_distance(uj, limit);
      const double tvj = total_variation(uj, q);
      row.strict_dist = row.l1_dist +
                        std::abs(tvj - report.limit_total_variation);
      row.area_strict_dist =
          row.l1_dist + std::abs(area_functional(uj, q) - report.limit_area);
      row.lifting_mass_gap =
          std::abs(total_mass(build_lifting(uj, q)) -
                   total_mass(build_lifting(limit, q)));
      row.tail_mass = tail_gradient_mass(uj, k, q);
      for (const auto& f : fs) {
        try {
          row.F_direct.push_back(evaluate_F(f, uj, q).total);
        } catch (const std::exception& e) {
          row.F_direct.push_back(nan);
          row.diagnostic += std::string(e.what()) + "; ";
        }
        try {
          row.F_graph.push_back(evaluate_F_graph(f, uj, q).total);
        } catch (const std::exception& e) {
          row.F_graph.push_back(nan);
          row.diagnostic += std::string(e.what()) + "; ";
        }
      }
    } catch (const std::exception& e) {
      row.diagnostic += e.what();
      row.F_direct.resize(fs.size(), nan);
      row.F_graph.resize(fs.size(), nan);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

EmbeddingReport embedding_experiment(const RadialFamily& family, double p,
                                     const QuadratureSpec& q) {
  if (!family.limit)
    throw std::invalid_argument("embedding_experiment: family has no limit");
  const int d = family.dimension;
  if (p <= 0.0)
    p = (d > 1) ? static_cast<double>(d) / (d - 1)
                : std::numeric_limits<double>::infinity();
  EmbeddingReport report;
  report.family = family.name;
  report.dimension = d;
  report.p = p;
  const RadialBV& limit = *family.limit;
  const double limit_tv = radial_total_variation(limit, q);
  for (int j : family.index_range) {
    RadialBV gj = family.generator(j);
    EmbeddingRow row;
    row.index = j;
    row.strict_dist = radial_lp_distance(gj, limit, 1.0, q) +
                      std::abs(radial_total_variation(gj, q) - limit_tv);
    row.sup_dist = radial_sup_distance(gj, limit);
    row.lp_dist = std::isinf(p) ? row.sup_dist
                                : radial_lp_distance(gj, limit, p, q);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace bvlift
