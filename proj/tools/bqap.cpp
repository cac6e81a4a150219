// bqap: bi-objective QAP scalarisation experiments.
//
//   bqap run    run the full experiment protocol on one instance
//   bqap synth  generate a synthetic instance with correlated objectives
//   bqap hv     hypervolume of a front file against a reference front
//
// Exit codes: 0 success, 1 validation/usage errors, 2 IO errors.

#include <charconv>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bqap/errors.hpp"
#include "bqap/harness.hpp"
#include "bqap/instance.hpp"
#include "bqap/metrics.hpp"
#include "bqap/scalarisation.hpp"

namespace {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, static_cast<std::size_t>(ptr - buf));
}

struct RunOptions {
  std::string instance_path;
  std::string matrix_order = "distance,flow1,flow2";
  std::vector<std::string> methods;
  int num_weights = 10;
  double time_limit = 5.0;
  int runs = 20;
  std::int64_t seed = 1;
  std::string backend = "sa";
  std::string budget_mode = "wallclock";
  std::int64_t iterations = 50000;
  std::string reference_front;
  std::string out_dir;
  int workers = 1;
};

int command_run(const RunOptions& opt) {
  bqap::ExperimentConfig cfg;
  cfg.instance_path = opt.instance_path;
  cfg.matrix_order = bqap::parse_matrix_order(opt.matrix_order);
  for (const std::string& name : opt.methods)
    cfg.methods.push_back(bqap::parse_method(name));
  cfg.num_weights = opt.num_weights;
  cfg.time_limit = opt.time_limit;
  cfg.runs = opt.runs;
  cfg.base_seed = opt.seed;
  cfg.backend = opt.backend;
  if (!opt.reference_front.empty()) cfg.reference_front_path = opt.reference_front;
  cfg.output_dir = opt.out_dir;
  cfg.budget = opt.budget_mode == "iterations" ? bqap::BudgetMode::iteration_count
                                               : bqap::BudgetMode::wall_clock;
  cfg.iteration_budget = opt.iterations;
  cfg.workers = opt.workers;

  const bqap::RunReport report = bqap::run_experiment(cfg);
  bqap::emit_summary(report, cfg.output_dir);
  bqap::emit_front_csv(report, cfg.output_dir);

  std::cout << "instance " << report.instance_name << " (n=" << report.instance_size
            << "), reference point (" << format_double(report.reference.r1) << ", "
            << format_double(report.reference.r2) << ")\n";
  for (const bqap::MethodReport& m : report.methods)
    std::cout << bqap::method_name(m.method) << ": mean_hv=" << format_double(m.mean_hv)
              << " std_hv=" << format_double(m.std_hv) << (m.best ? " [best]" : "") << "\n";
  std::cout << "outputs written to " << cfg.output_dir << "\n";
  return 0;
}

int command_synth(int n, double correlation, std::int64_t seed, const std::string& out) {
  const bqap::BiQapInstance instance = bqap::synth_instance(n, correlation, seed);
  bqap::save_instance(instance, out);
  std::cout << "wrote " << instance.name << " to " << out << "\n";
  return 0;
}

int command_hv(const std::string& front_path, const std::string& reference_path) {
  const bqap::ReferenceFront front = bqap::load_front(front_path);
  const bqap::ReferenceFront reference = bqap::load_front(reference_path);
  const bqap::ReferencePoint ref = bqap::reference_point(reference);
  std::vector<bqap::ObjectivePair> points;
  for (const auto& p : front.points)
    points.push_back({static_cast<double>(p.f1), static_cast<double>(p.f2)});
  std::cout << format_double(bqap::hypervolume_2d(points, ref)) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-objective QAP scalarisation experiments"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run the experiment protocol on an instance");
  run->add_option("--instance", run_opt.instance_path, "instance file")->required();
  run->add_option("--matrix-order", run_opt.matrix_order,
                  "block order in the instance file (default distance,flow1,flow2)");
  run->add_option("--method", run_opt.methods,
                  "uniform, adaptive-averages, adaptive-dichotomic (comma separated)")
      ->required()
      ->delimiter(',');
  run->add_option("--num-weights", run_opt.num_weights, "scalarisations per run (default 10)");
  run->add_option("--time-limit", run_opt.time_limit,
                  "seconds per scalarisation in wallclock mode (default 5)");
  run->add_option("--runs", run_opt.runs, "independent runs per method (default 20)");
  run->add_option("--seed", run_opt.seed, "base seed (default 1)");
  run->add_option("--backend", run_opt.backend, "sa or exhaustive (default sa)")
      ->check(CLI::IsMember({"sa", "exhaustive"}));
  run->add_option("--budget-mode", run_opt.budget_mode,
                  "wallclock or iterations (default wallclock)")
      ->check(CLI::IsMember({"wallclock", "iterations"}));
  run->add_option("--iterations", run_opt.iterations,
                  "proposed moves per scalarisation in iterations mode (default 50000)");
  run->add_option("--reference-front", run_opt.reference_front,
                  "known Pareto front file for the hypervolume reference point");
  run->add_option("--out", run_opt.out_dir, "output directory")->required();
  run->add_option("--workers", run_opt.workers, "concurrent (method, run) cells (default 1)");

  int synth_n = 0;
  double synth_correlation = 0.0;
  std::int64_t synth_seed = 1;
  std::string synth_out;
  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic instance");
  synth->add_option("--n", synth_n, "problem size")->required();
  synth->add_option("--correlation", synth_correlation,
                    "target flow correlation in [-1, 1]")->required();
  synth->add_option("--seed", synth_seed, "generator seed (default 1)");
  synth->add_option("--out", synth_out, "output file")->required();

  std::string hv_front, hv_reference;
  CLI::App* hv = app.add_subcommand("hv", "hypervolume of a front file");
  hv->add_option("--front", hv_front, "front file, one 'f1 f2' pair per line")->required();
  hv->add_option("--reference-front", hv_reference,
                 "front whose maxima give the reference point")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return command_run(run_opt);
    if (synth->parsed()) return command_synth(synth_n, synth_correlation, synth_seed, synth_out);
    if (hv->parsed()) return command_hv(hv_front, hv_reference);
  } catch (const bqap::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bqap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
