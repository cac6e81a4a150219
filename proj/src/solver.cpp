#include "bqap/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "bqap/errors.hpp"
#include "bqap/rng.hpp"

namespace bqap {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ObjectiveCosts {
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;
};

ObjectiveCosts evaluate_costs(const BiQapInstance& instance, const std::vector<int>& loc) {
  const int n = instance.n;
  ObjectiveCosts costs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const std::int64_t d = instance.distance(loc[u], loc[v]);
      costs.f1 += instance.flow[0](u, v) * d;
      costs.f2 += instance.flow[1](u, v) * d;
    }
  return costs;
}

// Cost change of swapping the locations of facilities u and v, per
// objective, for general (possibly asymmetric) flow and distance matrices.
ObjectiveCosts swap_delta(const BiQapInstance& instance, const std::vector<int>& loc,
                          int u, int v) {
  const int n = instance.n;
  const int r = loc[u];
  const int s = loc[v];
  ObjectiveCosts delta;
  for (int layer = 0; layer < 2; ++layer) {
    const IntMatrix& F = instance.flow[layer];
    const IntMatrix& D = instance.distance;
    std::int64_t d = (F(u, u) - F(v, v)) * (D(s, s) - D(r, r)) +
                     (F(u, v) - F(v, u)) * (D(s, r) - D(r, s));
    for (int k = 0; k < n; ++k) {
      if (k == u || k == v) continue;
      const int pk = loc[k];
      d += (F(u, k) - F(v, k)) * (D(s, pk) - D(r, pk)) +
           (F(k, u) - F(k, v)) * (D(pk, s) - D(pk, r));
    }
    (layer == 0 ? delta.f1 : delta.f2) = d;
  }
  return delta;
}

// Keeps the best solutions seen, one per distinct objective pair, ordered
// by (scalarised value, f1, f2) and capped at SolverResult::solution_cap.
class SolutionPool {
public:
  explicit SolutionPool(const WeightVector& weight) : weight_(weight) {}

  void offer(const std::vector<int>& loc, ObjectiveCosts costs) {
    const double value = weight_.lambda1 * static_cast<double>(costs.f1) +
                         weight_.lambda2 * static_cast<double>(costs.f2);
    for (const Entry& e : entries_)
      if (e.costs.f1 == costs.f1 && e.costs.f2 == costs.f2) return; // first one wins
    Entry entry{loc, costs, value};
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), entry, entry_less);
    entries_.insert(pos, std::move(entry));
    if (entries_.size() > SolverResult::solution_cap) entries_.pop_back();
  }

  bool empty() const { return entries_.empty(); }

  SolverResult to_result(const WeightVector& weight) const {
    SolverResult result;
    for (const Entry& e : entries_) {
      Assignment a;
      a.loc = e.loc;
      result.solutions.push_back(
          {std::move(a),
           {static_cast<double>(e.costs.f1), static_cast<double>(e.costs.f2)},
           weight});
    }
    result.best_scalarised = entries_.front().value;
    return result;
  }

private:
  struct Entry {
    std::vector<int> loc;
    ObjectiveCosts costs;
    double value;
  };
  static bool entry_less(const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.costs.f1 != b.costs.f1) return a.costs.f1 < b.costs.f1;
    return a.costs.f2 < b.costs.f2;
  }

  WeightVector weight_;
  std::vector<Entry> entries_;
};

void validate_request(const SolverRequest& req) {
  req.instance.validate();
  if (!(req.time_limit > 0)) throw ValidationError("time limit must be positive");
  if (req.budget == BudgetMode::iteration_count && req.iteration_budget < 1)
    throw ValidationError("iteration budget must be positive");
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

} // namespace

SolverResult solve_sa(const SolverRequest& req) {
  validate_request(req);
  const BiQapInstance& instance = req.instance;
  const int n = instance.n;
  const double lambda1 = req.weight.lambda1;
  const double lambda2 = req.weight.lambda2;

  const auto start = Clock::now();
  Rng rng(static_cast<std::uint64_t>(req.seed));

  std::int64_t proposals = 0;
  const auto budget_left = [&] {
    if (req.budget == BudgetMode::iteration_count)
      return proposals < req.iteration_budget;
    return seconds_since(start) < req.time_limit;
  };

  // Initial temperature: spread of the scalarised value over 100 random
  // assignments, floored at 1.
  double initial_temp;
  {
    constexpr int probes = 100;
    std::vector<double> values;
    values.reserve(probes);
    for (int i = 0; i < probes; ++i) {
      const auto costs = evaluate_costs(instance, random_permutation(n, rng));
      values.push_back(lambda1 * static_cast<double>(costs.f1) +
                       lambda2 * static_cast<double>(costs.f2));
    }
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / probes;
    double ss = 0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    initial_temp = std::max(1.0, std::sqrt(ss / (probes - 1)));
  }
  const double min_temp = 1e-3 * initial_temp;
  const std::int64_t sweep = std::int64_t{n} * (n - 1) / 2;

  SolutionPool pool(req.weight);

  while (budget_left()) {
    std::vector<int> loc = random_permutation(n, rng);
    ObjectiveCosts costs = evaluate_costs(instance, loc);

    std::vector<int> best_loc = loc;
    ObjectiveCosts best_costs = costs;
    const auto scalarise = [&](const ObjectiveCosts& c) {
      return lambda1 * static_cast<double>(c.f1) + lambda2 * static_cast<double>(c.f2);
    };
    double best_value = scalarise(costs);

    double temp = initial_temp;
    while (temp >= min_temp && budget_left()) {
      for (std::int64_t step = 0; step < sweep && budget_left(); ++step) {
        ++proposals;
        const int u = static_cast<int>(rng.uniform_int(0, n - 1));
        int v = static_cast<int>(rng.uniform_int(0, n - 2));
        if (v >= u) ++v;
        const ObjectiveCosts delta = swap_delta(instance, loc, u, v);
        const double scalar_delta =
            lambda1 * static_cast<double>(delta.f1) + lambda2 * static_cast<double>(delta.f2);
        if (scalar_delta <= 0 ||
            rng.uniform_real01() < std::exp(-scalar_delta / temp)) {
          std::swap(loc[u], loc[v]);
          costs.f1 += delta.f1;
          costs.f2 += delta.f2;
          const double value = scalarise(costs);
          if (value < best_value ||
              (value == best_value &&
               (costs.f1 < best_costs.f1 ||
                (costs.f1 == best_costs.f1 && costs.f2 < best_costs.f2)))) {
            best_value = value;
            best_loc = loc;
            best_costs = costs;
          }
        }
      }
      temp *= 0.995;
    }
    pool.offer(best_loc, best_costs); // restart best, partial restarts included
  }

  SolverResult result = pool.to_result(req.weight);
  result.wall_time = seconds_since(start);
  return result;
}

SolverResult solve_exhaustive(const SolverRequest& req) {
  validate_request(req);
  const BiQapInstance& instance = req.instance;
  const int n = instance.n;
  if (n > 10)
    throw CapacityError("exhaustive backend handles n <= 10, got n = " + std::to_string(n));

  const auto start = Clock::now();
  const double lambda1 = req.weight.lambda1;
  const double lambda2 = req.weight.lambda2;

  SolutionPool minimisers(req.weight);
  double best_value = std::numeric_limits<double>::infinity();

  // Non-dominated pairs encountered, first representative kept.
  struct FrontEntry {
    std::vector<int> loc;
    ObjectiveCosts costs;
  };
  std::vector<FrontEntry> front;
  const auto offer_front = [&front](const std::vector<int>& loc, const ObjectiveCosts& c) {
    for (const FrontEntry& e : front) {
      if (e.costs.f1 == c.f1 && e.costs.f2 == c.f2) return;
      if (e.costs.f1 <= c.f1 && e.costs.f2 <= c.f2) return; // dominated
    }
    std::erase_if(front, [&c](const FrontEntry& e) {
      return c.f1 <= e.costs.f1 && c.f2 <= e.costs.f2;
    });
    front.push_back({loc, c});
  };

  std::vector<int> loc(n);
  std::iota(loc.begin(), loc.end(), 0);
  do {
    const ObjectiveCosts costs = evaluate_costs(instance, loc);
    const double value = lambda1 * static_cast<double>(costs.f1) +
                         lambda2 * static_cast<double>(costs.f2);
    if (value < best_value) {
      best_value = value;
      minimisers = SolutionPool(req.weight);
      minimisers.offer(loc, costs);
    } else if (value == best_value) {
      minimisers.offer(loc, costs);
    }
    offer_front(loc, costs);
  } while (std::next_permutation(loc.begin(), loc.end()));

  SolverResult result = minimisers.to_result(req.weight);
  for (const FrontEntry& e : front) {
    const ObjectivePair objs{static_cast<double>(e.costs.f1), static_cast<double>(e.costs.f2)};
    const bool already = std::any_of(
        result.solutions.begin(), result.solutions.end(),
        [&objs](const EvaluatedSolution& s) { return s.objectives == objs; });
    if (already) continue;
    Assignment a;
    a.loc = e.loc;
    result.solutions.push_back({std::move(a), objs, req.weight});
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [&](const EvaluatedSolution& a, const EvaluatedSolution& b) {
              const double va = scalarised_value(a.objectives, req.weight);
              const double vb = scalarised_value(b.objectives, req.weight);
              if (va != vb) return va < vb;
              if (a.objectives.f1 != b.objectives.f1) return a.objectives.f1 < b.objectives.f1;
              return a.objectives.f2 < b.objectives.f2;
            });
  result.wall_time = seconds_since(start);
  return result;
}

Backend make_backend(const std::string& name) {
  if (name == "sa") return solve_sa;
  if (name == "exhaustive") return solve_exhaustive;
  throw ValidationError("unknown backend '" + name + "' (expected sa or exhaustive)");
}

} // namespace bqap
