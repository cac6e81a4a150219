#include "bqap/scalarisation.hpp"

#include <algorithm>
#include <cmath>

#include "bqap/errors.hpp"

namespace bqap {

std::string method_name(MethodKind method) {
  switch (method) {
    case MethodKind::uniform: return "uniform";
    case MethodKind::adaptive_averages: return "adaptive-averages";
    case MethodKind::adaptive_dichotomic: return "adaptive-dichotomic";
  }
  return "unknown";
}

MethodKind parse_method(const std::string& name) {
  if (name == "uniform") return MethodKind::uniform;
  if (name == "adaptive-averages") return MethodKind::adaptive_averages;
  if (name == "adaptive-dichotomic") return MethodKind::adaptive_dichotomic;
  throw ValidationError("unknown method '" + name +
                        "' (expected uniform, adaptive-averages or adaptive-dichotomic)");
}

std::vector<WeightVector> uniform_weights(int count) {
  if (count < 1) throw ValidationError("need at least one weight");
  if (count == 1) return {WeightVector::of(0.5, 0.5)};
  std::vector<WeightVector> weights;
  weights.reserve(count);
  for (int i = 1; i <= count; ++i) {
    const double lambda1 = static_cast<double>(i - 1) / static_cast<double>(count - 1);
    weights.push_back(WeightVector::from_lambda1(lambda1));
  }
  return weights;
}

std::vector<FrontGap> gaps_by_distance(std::vector<ObjectivePair> front) {
  if (front.size() < 2)
    throw DegenerateFrontError("gap search needs at least 2 front points, got " +
                               std::to_string(front.size()));
  std::sort(front.begin(), front.end(),
            [](const ObjectivePair& a, const ObjectivePair& b) { return a.f1 < b.f1; });

  double min1 = front.front().f1, max1 = front.front().f1;
  double min2 = front.front().f2, max2 = front.front().f2;
  for (const ObjectivePair& p : front) {
    min1 = std::min(min1, p.f1);
    max1 = std::max(max1, p.f1);
    min2 = std::min(min2, p.f2);
    max2 = std::max(max2, p.f2);
  }
  const double range1 = max1 - min1;
  const double range2 = max2 - min2;
  const auto norm1 = [&](double v) { return range1 > 0 ? (v - min1) / range1 : 0.0; };
  const auto norm2 = [&](double v) { return range2 > 0 ? (v - min2) / range2 : 0.0; };

  std::vector<FrontGap> gaps;
  gaps.reserve(front.size() - 1);
  for (std::size_t i = 0; i + 1 < front.size(); ++i) {
    const double d1 = norm1(front[i + 1].f1) - norm1(front[i].f1);
    const double d2 = norm2(front[i].f2) - norm2(front[i + 1].f2);
    gaps.push_back({i, front[i], front[i + 1], std::sqrt(d1 * d1 + d2 * d2)});
  }
  // Stable sort on the f1-ordered gaps: ties keep the leftmost pair first.
  std::stable_sort(gaps.begin(), gaps.end(),
                   [](const FrontGap& a, const FrontGap& b) { return a.distance > b.distance; });
  return gaps;
}

FrontGap largest_gap(std::vector<ObjectivePair> front) {
  return gaps_by_distance(std::move(front)).front();
}

WeightVector dichotomic_weight(const ObjectivePair& left, const ObjectivePair& right) {
  if (!(left.f1 < right.f1 && left.f2 > right.f2))
    throw DegeneratePairError("endpoints must trade off strictly: left (" +
                              std::to_string(left.f1) + ", " + std::to_string(left.f2) +
                              ") vs right (" + std::to_string(right.f1) + ", " +
                              std::to_string(right.f2) + ")");
  const double drop2 = left.f2 - right.f2;
  const double rise1 = right.f1 - left.f1;
  const double lambda1 = drop2 / (drop2 + rise1);
  return WeightVector::of(lambda1, 1.0 - lambda1);
}

WeightVector averages_weight(const WeightVector& left, const WeightVector& right) {
  return WeightVector::of(0.5 * (left.lambda1 + right.lambda1),
                          0.5 * (left.lambda2 + right.lambda2));
}

namespace {

SolverRequest make_request(const BiQapInstance& instance, const WeightVector& weight,
                           const ScalarisationPlan& plan, int call_index) {
  return {instance, weight, plan.time_limit, plan.seed + call_index,
          plan.budget, plan.iteration_budget};
}

void insert_all(Archive& archive, const SolverResult& result) {
  for (const EvaluatedSolution& sol : result.solutions) archive.insert(sol);
}

bool weight_used(const std::vector<WeightVector>& used, const WeightVector& w) {
  for (const WeightVector& u : used)
    if (std::abs(u.lambda1 - w.lambda1) <= 1e-9 && std::abs(u.lambda2 - w.lambda2) <= 1e-9)
      return true;
  return false;
}

} // namespace

Archive run_uniform(const BiQapInstance& instance, const Backend& backend,
                    const ScalarisationPlan& plan) {
  const std::vector<WeightVector> weights = uniform_weights(plan.num_weights);
  Archive archive;
  int call_index = 0;
  for (const WeightVector& weight : weights)
    insert_all(archive, backend(make_request(instance, weight, plan, call_index++)));
  return archive;
}

Archive run_adaptive(const BiQapInstance& instance, const Backend& backend,
                     const ScalarisationPlan& plan) {
  if (plan.method == MethodKind::uniform)
    throw ValidationError("run_adaptive needs an adaptive method");
  if (plan.num_weights < 2)
    throw ValidationError("adaptive methods need at least 2 weights (the endpoint runs)");

  Archive archive;
  std::vector<WeightVector> used;
  int call_index = 0;
  const auto run_weight = [&](const WeightVector& weight) {
    insert_all(archive, backend(make_request(instance, weight, plan, call_index++)));
    used.push_back(weight);
  };

  // Minimise each objective individually before anything adaptive.
  run_weight(WeightVector::of(1.0, 0.0));
  run_weight(WeightVector::of(0.0, 1.0));

  for (int iteration = 2; iteration < plan.num_weights; ++iteration) {
    WeightVector next{0.5, 0.5};
    const auto& entries = archive.front_sorted();
    if (entries.size() >= 2) {
      bool found = false;
      for (const FrontGap& gap : gaps_by_distance(archive.objective_front())) {
        const WeightVector candidate =
            plan.method == MethodKind::adaptive_dichotomic
                ? dichotomic_weight(gap.left, gap.right)
                : averages_weight(entries[gap.left_index].generating_weight,
                                  entries[gap.left_index + 1].generating_weight);
        if (!weight_used(used, candidate)) {
          next = candidate;
          found = true;
          break;
        }
      }
      if (!found) {
        // Every gap-derived weight is already spent; bisect the two most
        // distant used weights instead.
        std::size_t best_a = 0, best_b = 1;
        double best_spread = -1;
        for (std::size_t a = 0; a < used.size(); ++a)
          for (std::size_t b = a + 1; b < used.size(); ++b) {
            const double spread = std::abs(used[a].lambda1 - used[b].lambda1);
            if (spread > best_spread) {
              best_spread = spread;
              best_a = a;
              best_b = b;
            }
          }
        next = averages_weight(used[best_a], used[best_b]);
      }
    }
    run_weight(next);
  }
  return archive;
}

Archive run_method(const BiQapInstance& instance, const Backend& backend,
                   const ScalarisationPlan& plan) {
  if (plan.method == MethodKind::uniform) return run_uniform(instance, backend, plan);
  return run_adaptive(instance, backend, plan);
}

} // namespace bqap
