#pragma once

#include <optional>
#include <string>

#include "bvlift/bv_function.hpp"

namespace bvlift {

/// |f(x,y,A)| <= C (1 + |y|^p + |A|).
struct GrowthBound {
  double C = 1.0;
  double p = 1.0;
};

struct ContinuityClass {
  bool caratheodory = false;
  std::vector<double> exceptional_set;  // x-points, finite
};

/// Integrand f(x,y,A) with optional recession evaluator f^inf, a growth
/// certificate, and continuity metadata consumed by the functional module.
struct Integrand {
  int m = 1;
  std::function<double(double x, const Vec& y, const Vec& A)> eval;
  std::function<double(double x, const Vec& y, const Vec& A)> recession;
  GrowthBound growth;
  ContinuityClass continuity;
};

struct RecessionSchedule {
  int t_exp_min = 4;
  int t_exp_max = 24;
  std::vector<double> radii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  double spread_threshold = 1e-3;
};

struct RecessionEstimate {
  double value = 0.0;
  double spread = 0.0;  // max deviation across probes at the final stage
};

/// Probes f(x',y',tA')/t over t = 2^4..2^24 with perturbations within
/// shrinking radii. Empty optional = the probes failed to contract below
/// the spread threshold (no recession function in the probed direction).
std::optional<RecessionEstimate> estimate_recession(
    const Integrand& f, double x, const Vec& y, const Vec& A,
    const RecessionSchedule& schedule = {});

struct RecessionSample {
  double x;
  Vec y;
  Vec A;
};

struct RecessionReport {
  double max_estimate_deviation = 0.0;   // |f.recession - probed limit|
  double max_homogeneity_deviation = 0.0;  // 1-homogeneity residual
  bool any_no_recession = false;         // some sample failed to contract
  bool passed = false;
};

RecessionReport validate_recession(const Integrand& f,
                                   const std::vector<RecessionSample>& samples,
                                   const RecessionSchedule& schedule = {});

/// f~(x,(r,y),(t,A)) = |t| f(x,y,A/|t|) for t != 0, recession at t = 0;
/// positively 1-homogeneous in (t,A) by construction.
struct PerspectiveIntegrand {
  Integrand base;
  double eval(double x, double r, const Vec& y, double t, const Vec& A) const;
};

/// Throws no_recession when f carries no recession evaluator and probing
/// (at a reference point) fails.
PerspectiveIntegrand perspective(const Integrand& f);

/// f_k = s_k(|y|) f with a smooth cutoff: f_k = f on {|y| <= k}, 0 on
/// {|y| >= k+1}.
Integrand truncate_integrand(const Integrand& f, int k);

struct GrowthReport {
  double worst_ratio = 0.0;  // max |f| / (1 + |y|^p + |A|)
  double worst_x = 0.0;
  Vec worst_y;
  Vec worst_A;
  bool passed = false;
};

/// Samples a log-scaled grid of (x,y,A); passes when the worst ratio stays
/// below the certified constant C.
GrowthReport growth_check(const Integrand& f,
                          const std::vector<RecessionSample>& samples = {});

/// Built-in integrands: "abs", "area", "nonconvex", "ygrowth-p" (or
/// "ygrowth-<number>" for a specific exponent), "ex55".
Integrand make_integrand(const std::string& name);

}  // namespace bvlift
