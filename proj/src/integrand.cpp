#include "bvlift/integrand.hpp"

#include <cmath>
#include <stdexcept>

namespace bvlift {

namespace {

// C^infty smoothstep: 1 for t <= 0, 0 for t >= 1.
double smooth_cutoff(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return b / (a + b);
}

// Four deterministic perturbation patterns scaled by the stage radius.
void apply_pattern(int pattern, double r, double& dx, Vec& dy, Vec& dA) {
  switch (pattern) {
    case 0:
      break;
    case 1:
      dx = r;
      dy.setConstant(r);
      dA.setConstant(-r);
      break;
    case 2:
      dx = -r;
      dy.setConstant(-0.5 * r);
      dA.setConstant(0.37 * r);
      break;
    default:
      dx = 0.25 * r;
      for (Eigen::Index i = 0; i < dy.size(); ++i) dy[i] = (i % 2 ? -r : r);
      for (Eigen::Index i = 0; i < dA.size(); ++i) dA[i] = (i % 2 ? r : -r);
      break;
  }
}

}  // namespace

std::optional<RecessionEstimate> estimate_recession(
    const Integrand& f, double x, const Vec& y, const Vec& A,
    const RecessionSchedule& schedule) {
  auto probe = [&](double t, double r, int pattern) {
    double dx = 0.0;
    Vec dy = Vec::Zero(y.size());
    Vec dA = Vec::Zero(A.size());
    apply_pattern(pattern, r, dx, dy, dA);
    return f.eval(x + dx, y + dy, Vec(t * (A + dA))) / t;
  };
  // Coarse pass over the full schedule: the limit must stabilize in t.
  double prev = probe(std::ldexp(1.0, schedule.t_exp_min), schedule.radii.front(), 0);
  (void)prev;
  const double r_final = schedule.radii.back();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int e = schedule.t_exp_max - 4; e <= schedule.t_exp_max; ++e) {
    const double t = std::ldexp(1.0, e);
    for (int pattern = 0; pattern < 4; ++pattern) {
      const double v = probe(t, r_final, pattern);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  RecessionEstimate est;
  est.value = probe(std::ldexp(1.0, schedule.t_exp_max), 0.0, 0);
  est.spread = hi - lo;
  if (!(est.spread <= schedule.spread_threshold)) return std::nullopt;
  return est;
}

RecessionReport validate_recession(const Integrand& f,
                                   const std::vector<RecessionSample>& samples,
                                   const RecessionSchedule& schedule) {
  RecessionReport report;
  if (!f.recession) {
    report.any_no_recession = true;
    return report;
  }
  for (const auto& s : samples) {
    auto est = estimate_recession(f, s.x, s.y, s.A, schedule);
    if (!est) {
      report.any_no_recession = true;
      continue;
    }
    const double claimed = f.recession(s.x, s.y, s.A);
    report.max_estimate_deviation =
        std::max(report.max_estimate_deviation, std::abs(claimed - est->value));
    for (double lambda : {0.5, 2.0, 10.0}) {
      const double scaled = f.recession(s.x, s.y, Vec(lambda * s.A));
      const double residual = std::abs(scaled - lambda * claimed) /
                              (lambda * std::max(std::abs(claimed), 1.0));
      report.max_homogeneity_deviation =
          std::max(report.max_homogeneity_deviation, residual);
    }
  }
  report.passed = !report.any_no_recession &&
                  report.max_estimate_deviation <= schedule.spread_threshold &&
                  report.max_homogeneity_deviation <= 1e-9;
  return report;
}

double PerspectiveIntegrand::eval(double x, double /*r*/, const Vec& y, double t,
                                  const Vec& A) const {
  const double at = std::abs(t);
  if (at != 0.0) return at * base.eval(x, y, Vec(A / at));
  return base.recession(x, y, A);
}

PerspectiveIntegrand perspective(const Integrand& f) {
  PerspectiveIntegrand pf;
  pf.base = f;
  if (!pf.base.recession) {
    Vec y0 = Vec::Zero(f.m);
    Vec A0 = Vec::Unit(f.m, 0);
    if (!estimate_recession(f, 0.0, y0, A0))
      throw no_recession("perspective: integrand has no recession function");
    Integrand base = f;
    pf.base.recession = [base](double x, const Vec& y, const Vec& A) {
      auto est = estimate_recession(base, x, y, A);
      if (!est) throw no_recession("perspective: recession probe diverged");
      return est->value;
    };
  }
  return pf;
}

Integrand truncate_integrand(const Integrand& f, int k) {
  if (k < 1) throw std::invalid_argument("truncate_integrand: k >= 1 required");
  Integrand fk = f;
  const double kk = static_cast<double>(k);
  auto cutoff = [kk](const Vec& y) { return smooth_cutoff(y.norm() - kk); };
  auto base_eval = f.eval;
  fk.eval = [cutoff, base_eval](double x, const Vec& y, const Vec& A) {
    const double s = cutoff(y);
    return s == 0.0 ? 0.0 : s * base_eval(x, y, A);
  };
  if (f.recession) {
    auto base_rec = f.recession;
    fk.recession = [cutoff, base_rec](double x, const Vec& y, const Vec& A) {
      const double s = cutoff(y);
      return s == 0.0 ? 0.0 : s * base_rec(x, y, A);
    };
  }
  fk.growth.C = f.growth.C * (1.0 + std::pow(kk + 1.0, f.growth.p));
  fk.growth.p = 1.0;
  return fk;
}

GrowthReport growth_check(const Integrand& f,
                          const std::vector<RecessionSample>& samples) {
  GrowthReport report;
  std::vector<RecessionSample> grid = samples;
  if (grid.empty()) {
    const double xs[] = {-0.9, -0.5, 0.0, 0.5, 0.9};
    const double mags[] = {0.0, 0.1, 1.0, 10.0, 100.0, 1000.0};
    for (double x : xs)
      for (double my : mags)
        for (double ma : mags)
          for (int sy : {1, -1})
            for (int sa : {1, -1}) {
              RecessionSample s;
              s.x = x;
              s.y = Vec::Constant(f.m, sy * my);
              s.A = Vec::Constant(f.m, sa * ma);
              grid.push_back(std::move(s));
            }
  }
  report.worst_y = Vec::Zero(f.m);
  report.worst_A = Vec::Zero(f.m);
  for (const auto& s : grid) {
    const double denom = 1.0 + std::pow(s.y.norm(), f.growth.p) + s.A.norm();
    const double ratio = std::abs(f.eval(s.x, s.y, s.A)) / denom;
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_x = s.x;
      report.worst_y = s.y;
      report.worst_A = s.A;
    }
  }
  report.passed = report.worst_ratio <= f.growth.C * (1.0 + 1e-9);
  return report;
}

namespace {

double ex55_g(double x, double a) {
  if (a == 0.0) return 0.0;
  if (x >= 0.0) return a;
  if (x <= -1.0 / a) return 0.0;
  return a * a * (x + 1.0 / a);
}

}  // namespace

Integrand make_integrand(const std::string& name) {
  Integrand f;
  f.m = 1;
  if (name == "abs") {
    f.eval = [](double, const Vec&, const Vec& A) { return A.norm(); };
    f.recession = f.eval;
    f.growth = {1.0, 1.0};
    return f;
  }
  if (name == "area") {
    f.eval = [](double, const Vec&, const Vec& A) {
      return std::sqrt(1.0 + A.squaredNorm());
    };
    f.recession = [](double, const Vec&, const Vec& A) { return A.norm(); };
    f.growth = {1.0, 1.0};
    return f;
  }
  if (name == "nonconvex") {
    f.eval = [](double, const Vec&, const Vec& A) {
      return std::sqrt(1.0 + A.squaredNorm()) + std::exp(-A.squaredNorm());
    };
    f.recession = [](double, const Vec&, const Vec& A) { return A.norm(); };
    f.growth = {2.0, 1.0};
    return f;
  }
  if (name.rfind("ygrowth-", 0) == 0) {
    double p = 2.0;
    const std::string suffix = name.substr(8);
    if (suffix != "p") {
      std::size_t pos = 0;
      p = std::stod(suffix, &pos);
      if (pos != suffix.size() || p < 1.0)
        throw std::invalid_argument("make_integrand: bad exponent in " + name);
    }
    f.eval = [p](double, const Vec& y, const Vec& A) {
      return std::pow(y.norm(), p) + A.norm();
    };
    f.recession = [](double, const Vec&, const Vec& A) { return A.norm(); };
    f.growth = {1.0, p};
    return f;
  }
  if (name == "ex55") {
    f.eval = [](double x, const Vec&, const Vec& A) {
      const double a = A.cwiseAbs().maxCoeff();
      const double h = smooth_cutoff(a - 1.0);  // 1 on [0,1], 0 past 2
      if (h == 1.0) return 0.0;
      return (1.0 - h) * ex55_g(x, a);
    };
    f.recession = [](double x, const Vec&, const Vec& A) {
      return x >= 0.0 ? A.cwiseAbs().maxCoeff() : 0.0;
    };
    f.growth = {1.0, 1.0};
    f.continuity.caratheodory = true;
    f.continuity.exceptional_set = {0.0};
    return f;
  }
  throw std::invalid_argument("make_integrand: unknown integrand '" + name + "'");
}

}  // namespace bvlift
