#pragma once

#include <optional>
#include <string>

#include "bvlift/lifting.hpp"

namespace bvlift {

/// L1 distance plus the total-variation gap.
double strict_distance(const BVFunction1D& u, const BVFunction1D& v,
                       const QuadratureSpec& q = {});

/// L1 distance plus the gap of the area functionals.
double area_strict_distance(const BVFunction1D& u, const BVFunction1D& v,
                            const QuadratureSpec& q = {});

/// Smooth approximation by convolution with a C1 bump kernel after even
/// reflection across the endpoints; returns a single-piece function with no
/// jumps or Cantor components. Staircases are convolved exactly through
/// their cumulative representation (integration by parts against the Cantor
/// measure). Requires eps < (b-a)/4.
BVFunction1D mollify(const BVFunction1D& u, double eps,
                     const QuadratureSpec& q = {});

struct SequenceFamily {
  std::string name;
  std::function<BVFunction1D(int)> generator;
  std::optional<BVFunction1D> limit;
  std::vector<int> index_range;
  double growth_p = 2.0;  // default exponent for the lp_dist column
};

struct RadialFamily {
  std::string name;
  std::function<RadialBV(int)> generator;
  std::optional<RadialBV> limit;
  std::vector<int> index_range;
  int dimension = 2;
};

struct FamilyParams {
  std::vector<int> index_range;            // empty = family default
  std::optional<BVFunction1D> base;        // mollified: the limit function
  std::string base_name = "step";          // mollified: registry fallback
  int dimension = 2;                       // radial families
};

/// Families: "oscillation", "jump_smoothing", "shifted_jump", "mollified",
/// "radial_steepening" (the last via make_radial_family).
SequenceFamily make_family(const std::string& name,
                           const FamilyParams& params = {});
RadialFamily make_radial_family(const std::string& name,
                                const FamilyParams& params = {});

struct ReportRow {
  int index = 0;
  double strict_dist = 0.0;
  double area_strict_dist = 0.0;
  double l1_dist = 0.0;
  double lp_dist = 0.0;
  double sup_dist = 0.0;
  std::vector<double> F_direct;  // per integrand
  std::vector<double> F_graph;
  double lifting_mass_gap = 0.0;
  double tail_mass = 0.0;
  std::string diagnostic;
};

struct ConvergenceReport {
  std::string family;
  std::vector<std::string> integrand_names;
  double p = 2.0;
  double k = 3.0;
  std::vector<ReportRow> rows;
  std::vector<double> F_limit_direct;  // per integrand, at the limit
  std::vector<double> F_limit_graph;
  double limit_total_variation = 0.0;
  double limit_area = 0.0;
};

ConvergenceReport run_experiment(const SequenceFamily& family,
                                 const std::vector<std::string>& integrands,
                                 double p, double k,
                                 const QuadratureSpec& q = {});

struct EmbeddingRow {
  int index = 0;
  double strict_dist = 0.0;
  double lp_dist = 0.0;
  double sup_dist = 0.0;
};

struct EmbeddingReport {
  std::string family;
  int dimension = 2;
  double p = 2.0;  // defaults to d/(d-1)
  std::vector<EmbeddingRow> rows;
};

EmbeddingReport embedding_experiment(const RadialFamily& family, double p = 0.0,
                                     const QuadratureSpec& q = {});

}  // namespace bvlift
