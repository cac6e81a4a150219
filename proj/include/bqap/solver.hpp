#ifndef BQAP_SOLVER_HPP
#define BQAP_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bqap/encoding.hpp"
#include "bqap/instance.hpp"

namespace bqap {

/// How a solve call is budgeted: by elapsed wall time (the experiment
/// protocol) or by a fixed number of proposed moves (bit-reproducible,
/// used by tests).
enum class BudgetMode { wall_clock, iteration_count };

struct SolverRequest {
  const BiQapInstance& instance;
  WeightVector weight;
  double time_limit = 5.0; // seconds, wall_clock mode
  std::int64_t seed = 0;
  BudgetMode budget = BudgetMode::wall_clock;
  std::int64_t iteration_budget = 50000; // proposed moves, iteration_count mode
};

/// A feasible assignment with its objectives and the weight that produced it.
struct EvaluatedSolution {
  Assignment assignment;
  ObjectivePair objectives;
  WeightVector generating_weight;
};

struct SolverResult {
  // Sorted by (scalarised value, f1, f2); one entry per distinct objective
  // pair, at most solution_cap entries beyond the exhaustive backend's
  // non-dominated extras. Never empty.
  std::vector<EvaluatedSolution> solutions;
  double best_scalarised = 0;
  double wall_time = 0; // seconds

  /// Distinct-solution cap shared by all backends.
  static constexpr std::size_t solution_cap = 20;
};

/// Simulated annealing over permutations with a pairwise-swap
/// neighbourhood.
///
/// Schedule: the initial temperature is the standard deviation of the
/// scalarised value over 100 random assignments (floor 1.0); the
/// temperature decays geometrically by 0.995 once per sweep of
/// n(n-1)/2 proposals; when it falls below 1e-3 of its initial value the
/// search restarts from a fresh random assignment. Runs until the time or
/// iteration budget is spent and returns the best solutions seen
/// (deduplicated by objective pair), which include each restart's best.
/// Deterministic for a fixed seed in iteration_count mode.
SolverResult solve_sa(const SolverRequest& req);

/// Enumerates all n! assignments (n <= 10, else CapacityError). Returns
/// every minimiser of the scalarised value plus the full non-dominated set
/// of the instance as auxiliary solutions, one representative per distinct
/// objective pair.
SolverResult solve_exhaustive(const SolverRequest& req);

using Backend = std::function<SolverResult(const SolverRequest&)>;

/// Looks up a backend by name ("sa" or "exhaustive").
/// Throws ValidationError for unknown names.
Backend make_backend(const std::string& name);

} // namespace bqap

#endif // BQAP_SOLVER_HPP
