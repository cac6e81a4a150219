#ifndef BQAP_SCALARISATION_HPP
#define BQAP_SCALARISATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bqap/archive.hpp"
#include "bqap/encoding.hpp"
#include "bqap/solver.hpp"

namespace bqap {

enum class MethodKind { uniform, adaptive_averages, adaptive_dichotomic };

/// CLI/reporting names: "uniform", "adaptive-averages", "adaptive-dichotomic".
std::string method_name(MethodKind method);
MethodKind parse_method(const std::string& name);

struct ScalarisationPlan {
  MethodKind method = MethodKind::uniform;
  int num_weights = 10; // N >= 1 for uniform, N >= 2 for the adaptive methods
  double time_limit = 5.0;
  std::int64_t seed = 0;
  BudgetMode budget = BudgetMode::wall_clock;
  std::int64_t iteration_budget = 50000;
};

/// N evenly spaced weights: lambda1 = (i-1)/(N-1) for i = 1..N when N >= 2
/// (both endpoints included); the single midpoint weight when N = 1.
/// Throws ValidationError when N < 1.
std::vector<WeightVector> uniform_weights(int count);

/// Adjacent pair of front points with the largest euclidean distance after
/// min-max normalising each objective over the front (a zero-range
/// dimension maps to 0). Ties go to the pair whose left point has the
/// smallest f1.
struct FrontGap {
  std::size_t left_index = 0; // position of `left` in the f1-sorted front
  ObjectivePair left;
  ObjectivePair right;
  double distance = 0;
};

/// Throws DegenerateFrontError when the front has fewer than 2 points.
/// The input must be mutually non-dominated; it is sorted internally.
FrontGap largest_gap(std::vector<ObjectivePair> front);

/// All adjacent gaps of the front, widest first (ties by the left point's
/// f1). Same preconditions as largest_gap.
std::vector<FrontGap> gaps_by_distance(std::vector<ObjectivePair> front);

/// The weight under which both endpoints have equal scalarised value:
/// lambda1 = (f2L - f2R) / ((f2L - f2R) + (f1R - f1L)).
/// Requires left.f1 < right.f1 and left.f2 > right.f2, else
/// DegeneratePairError.
WeightVector dichotomic_weight(const ObjectivePair& left, const ObjectivePair& right);

/// Component-wise midpoint of two weights; sums to 1 by construction.
WeightVector averages_weight(const WeightVector& left, const WeightVector& right);

/// One backend call per uniform weight, every returned solution merged
/// into a fresh archive in weight order. Call i uses seed plan.seed + i.
Archive run_uniform(const BiQapInstance& instance, const Backend& backend,
                    const ScalarisationPlan& plan);

/// Endpoint runs (1,0) then (0,1), then N-2 adaptive iterations. Each
/// iteration targets the largest gap of the current archive front and
/// derives the next weight from the gap endpoints: their objective values
/// (adaptive-dichotomic) or their generating weights (adaptive-averages).
/// A derived weight equal (within 1e-9) to one already used falls back to
/// the next-widest gap, then to the midpoint of the two most distant used
/// weights; a front with fewer than 2 points falls back to (0.5, 0.5).
Archive run_adaptive(const BiQapInstance& instance, const Backend& backend,
                     const ScalarisationPlan& plan);

/// Dispatches on plan.method.
Archive run_method(const BiQapInstance& instance, const Backend& backend,
                   const ScalarisationPlan& plan);

} // namespace bqap

#endif // BQAP_SCALARISATION_HPP
