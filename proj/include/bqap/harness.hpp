#ifndef BQAP_HARNESS_HPP
#define BQAP_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bqap/archive.hpp"
#include "bqap/instance.hpp"
#include "bqap/metrics.hpp"
#include "bqap/scalarisation.hpp"
#include "bqap/solver.hpp"

namespace bqap {

struct ExperimentConfig {
  std::string instance_path;
  MatrixOrder matrix_order = default_matrix_order();
  std::vector<MethodKind> methods;
  int num_weights = 10;
  double time_limit = 5.0; // seconds per scalarisation
  int runs = 20;
  std::int64_t base_seed = 0;
  std::string backend = "sa";
  std::optional<std::string> reference_front_path;
  std::string output_dir;
  BudgetMode budget = BudgetMode::wall_clock;
  std::int64_t iteration_budget = 50000;
  int workers = 1; // concurrent (method, run) cells; capped at core count in wall-clock mode
};

struct MethodReport {
  MethodKind method = MethodKind::uniform;
  std::vector<Archive> run_archives; // one per run, in run order
  HvSample hypervolumes;             // one per run
  double mean_hv = 0;
  double std_hv = 0;
  bool best = false; // best mean, or not significantly different from it
};

struct RunReport {
  std::string instance_name;
  int instance_size = 0;
  ReferencePoint reference;
  std::vector<ReferenceFront::Point> reference_front; // empty when none given
  std::vector<MethodReport> methods;
  // significance[i][j] = t_test(methods[i].hypervolumes, methods[j].hypervolumes)
  // at alpha = 0.05; empty when runs < 2.
  std::vector<std::vector<TTestResult>> significance;
};

/// Executes every (method, run) cell: run r of any method uses seed
/// base_seed + r * 65537, so run seeds cannot collide with the runners'
/// internal per-scalarisation seed + i spacing. Hypervolumes are measured
/// against reference_point(front) when a reference front is given, else
/// against the component-wise maximum over all archives of all methods,
/// computed once so every method shares one reference. Cells run
/// concurrently up to cfg.workers; the report is assembled in
/// (method, run) order regardless of completion order.
RunReport run_experiment(const BiQapInstance& instance,
                         const std::optional<ReferenceFront>& front,
                         const ExperimentConfig& cfg);

/// Loads the instance (and reference front, if configured) from
/// cfg.instance_path and runs the experiment. Throws IoError on a missing
/// file.
RunReport run_experiment(const ExperimentConfig& cfg);

/// Writes <dir>/summary.csv with one "instance,method,mean_hv,std_hv,best"
/// row per method, and <dir>/report.json with the full report.
void emit_summary(const RunReport& report, const std::string& dir);

/// Writes one <dir>/front_<method>_run<R>.csv per (method, run) with
/// "f1,f2,lambda1,lambda2" rows, plus <dir>/reference_front.csv ("f1,f2"
/// rows) when a reference front was given.
void emit_front_csv(const RunReport& report, const std::string& dir);

} // namespace bqap

#endif // BQAP_HARNESS_HPP
