#include "bqap/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "bqap/errors.hpp"

namespace bqap {

namespace {

constexpr double significance_alpha = 0.05;

// Shortest round-trip decimal form; keeps emitted files byte-stable.
std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, static_cast<std::size_t>(ptr - buf));
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.runs < 1) throw ValidationError("runs must be at least 1");
  if (cfg.num_weights < 1) throw ValidationError("num_weights must be at least 1");
  if (cfg.methods.empty()) throw ValidationError("at least one method is required");
  if (cfg.workers < 1) throw ValidationError("workers must be at least 1");
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  return file;
}

} // namespace

RunReport run_experiment(const BiQapInstance& instance,
                         const std::optional<ReferenceFront>& front,
                         const ExperimentConfig& cfg) {
  validate_config(cfg);
  instance.validate();
  const Backend backend = make_backend(cfg.backend);

  struct Cell {
    std::size_t method_index;
    int run; // 1-based
  };
  std::vector<Cell> cells;
  for (std::size_t m = 0; m < cfg.methods.size(); ++m)
    for (int r = 1; r <= cfg.runs; ++r) cells.push_back({m, r});

  std::vector<Archive> archives(cells.size());

  int workers = std::min<int>(cfg.workers, static_cast<int>(cells.size()));
  if (cfg.budget == BudgetMode::wall_clock) {
    // More concurrent solves than cores would starve each call of CPU and
    // void the per-scalarisation time limit.
    const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<int>(workers, static_cast<int>(cores));
  }

  const auto run_cell = [&](std::size_t index) {
    const Cell& cell = cells[index];
    ScalarisationPlan plan;
    plan.method = cfg.methods[cell.method_index];
    plan.num_weights = cfg.num_weights;
    plan.time_limit = cfg.time_limit;
    plan.seed = cfg.base_seed + static_cast<std::int64_t>(cell.run) * 65537;
    plan.budget = cfg.budget;
    plan.iteration_budget = cfg.iteration_budget;
    archives[index] = run_method(instance, backend, plan);
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          try {
            run_cell(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  RunReport report;
  report.instance_name = instance.name;
  report.instance_size = instance.n;
  if (front) report.reference_front = front->points;

  if (front) {
    report.reference = reference_point(*front);
  } else {
    // No known Pareto optimal set: share one empirical reference across
    // methods, the component-wise maximum over every archive of the
    // experiment.
    double r1 = 0, r2 = 0;
    bool first = true;
    for (const Archive& archive : archives)
      for (const EvaluatedSolution& sol : archive.front_sorted()) {
        if (first) {
          r1 = sol.objectives.f1;
          r2 = sol.objectives.f2;
          first = false;
        } else {
          r1 = std::max(r1, sol.objectives.f1);
          r2 = std::max(r2, sol.objectives.f2);
        }
      }
    report.reference = {r1, r2};
  }

  for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
    MethodReport method_report;
    method_report.method = cfg.methods[m];
    for (int r = 1; r <= cfg.runs; ++r) {
      Archive& archive = archives[m * static_cast<std::size_t>(cfg.runs) + (r - 1)];
      method_report.hypervolumes.push_back(
          hypervolume_2d(archive.objective_front(), report.reference));
      method_report.run_archives.push_back(std::move(archive));
    }
    const SampleStats stats = summarize(method_report.hypervolumes);
    method_report.mean_hv = stats.mean;
    method_report.std_hv = stats.std_dev;
    report.methods.push_back(std::move(method_report));
  }

  if (cfg.runs >= 2) {
    report.significance.resize(report.methods.size());
    for (std::size_t i = 0; i < report.methods.size(); ++i) {
      report.significance[i].resize(report.methods.size());
      for (std::size_t j = 0; j < report.methods.size(); ++j)
        report.significance[i][j] =
            t_test(report.methods[i].hypervolumes, report.methods[j].hypervolumes,
                   significance_alpha);
    }
  }

  // Table-style marking: the best mean, and anything not significantly
  // different from it, counts as best.
  std::size_t best_index = 0;
  for (std::size_t m = 1; m < report.methods.size(); ++m)
    if (report.methods[m].mean_hv > report.methods[best_index].mean_hv) best_index = m;
  for (std::size_t m = 0; m < report.methods.size(); ++m) {
    const bool ties_best = report.methods[m].mean_hv == report.methods[best_index].mean_hv;
    const bool not_distinguishable =
        cfg.runs >= 2 && !report.significance[m][best_index].significant;
    report.methods[m].best = ties_best || not_distinguishable;
  }
  return report;
}

RunReport run_experiment(const ExperimentConfig& cfg) {
  const BiQapInstance instance = load_instance(cfg.instance_path, cfg.matrix_order);
  std::optional<ReferenceFront> front;
  if (cfg.reference_front_path) front = load_front(*cfg.reference_front_path);
  return run_experiment(instance, front, cfg);
}

void emit_summary(const RunReport& report, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());

  {
    auto csv = open_output(std::filesystem::path(dir) / "summary.csv");
    csv << "instance,method,mean_hv,std_hv,best_flag\n";
    for (const MethodReport& m : report.methods)
      csv << report.instance_name << ',' << method_name(m.method) << ','
          << format_double(m.mean_hv) << ',' << format_double(m.std_hv) << ','
          << (m.best ? "true" : "false") << '\n';
    if (!csv) throw IoError("write failed for summary.csv");
  }

  nlohmann::json root;
  root["instance"] = report.instance_name;
  root["n"] = report.instance_size;
  root["reference_point"] = {{"f1", report.reference.r1}, {"f2", report.reference.r2}};
  nlohmann::json ref_front = nlohmann::json::array();
  for (const auto& p : report.reference_front)
    ref_front.push_back({p.f1, p.f2});
  root["reference_front"] = std::move(ref_front);

  nlohmann::json methods = nlohmann::json::array();
  for (const MethodReport& m : report.methods) {
    nlohmann::json entry;
    entry["method"] = method_name(m.method);
    entry["mean_hv"] = m.mean_hv;
    entry["std_hv"] = m.std_hv;
    entry["best"] = m.best;
    entry["hypervolumes"] = m.hypervolumes;
    nlohmann::json runs = nlohmann::json::array();
    for (std::size_t r = 0; r < m.run_archives.size(); ++r) {
      nlohmann::json run;
      run["run"] = r + 1;
      nlohmann::json front = nlohmann::json::array();
      for (const EvaluatedSolution& sol : m.run_archives[r].front_sorted())
        front.push_back({{"f1", sol.objectives.f1},
                         {"f2", sol.objectives.f2},
                         {"lambda1", sol.generating_weight.lambda1},
                         {"lambda2", sol.generating_weight.lambda2}});
      run["front"] = std::move(front);
      runs.push_back(std::move(run));
    }
    entry["runs"] = std::move(runs);
    methods.push_back(std::move(entry));
  }
  root["methods"] = std::move(methods);

  nlohmann::json significance = nlohmann::json::array();
  for (std::size_t i = 0; i < report.significance.size(); ++i)
    for (std::size_t j = 0; j < report.significance[i].size(); ++j) {
      if (i == j) continue;
      const TTestResult& cell = report.significance[i][j];
      nlohmann::json item;
      item["method_a"] = method_name(report.methods[i].method);
      item["method_b"] = method_name(report.methods[j].method);
      item["t"] = cell.t; // infinities serialize as null
      item["df"] = cell.df;
      item["significant"] = cell.significant;
      significance.push_back(std::move(item));
    }
  root["significance"] = std::move(significance);

  auto json_file = open_output(std::filesystem::path(dir) / "report.json");
  json_file << root.dump(2) << '\n';
  if (!json_file) throw IoError("write failed for report.json");
}

void emit_front_csv(const RunReport& report, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());

  for (const MethodReport& m : report.methods) {
    for (std::size_t r = 0; r < m.run_archives.size(); ++r) {
      const auto path = std::filesystem::path(dir) /
                        ("front_" + method_name(m.method) + "_run" + std::to_string(r + 1) + ".csv");
      auto csv = open_output(path);
      csv << "f1,f2,lambda1,lambda2\n";
      for (const EvaluatedSolution& sol : m.run_archives[r].front_sorted())
        csv << format_double(sol.objectives.f1) << ',' << format_double(sol.objectives.f2)
            << ',' << format_double(sol.generating_weight.lambda1) << ','
            << format_double(sol.generating_weight.lambda2) << '\n';
      if (!csv) throw IoError("write failed for '" + path.string() + "'");
    }
  }

  if (!report.reference_front.empty()) {
    auto csv = open_output(std::filesystem::path(dir) / "reference_front.csv");
    csv << "f1,f2\n";
    for (const auto& p : report.reference_front) csv << p.f1 << ',' << p.f2 << '\n';
    if (!csv) throw IoError("write failed for reference_front.csv");
  }
}

} // namespace bqap
