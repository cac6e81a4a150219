#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bqap/errors.hpp"
#include "bqap/harness.hpp"
#include "bqap/rng.hpp"
#include "oracles.hpp"

using namespace bqap;
namespace fs = std::filesystem;

namespace {

BiQapInstance zero_flow_instance(int n) {
  BiQapInstance instance;
  instance.name = "zeroflow";
  instance.n = n;
  instance.distance = IntMatrix(n);
  instance.flow[0] = IntMatrix(n);
  instance.flow[1] = IntMatrix(n);
  return instance;
}

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.methods = {MethodKind::uniform, MethodKind::adaptive_dichotomic};
  cfg.num_weights = 4;
  cfg.runs = 3;
  cfg.base_seed = 11;
  cfg.backend = "exhaustive";
  cfg.budget = BudgetMode::iteration_count;
  cfg.iteration_budget = 2000;
  return cfg;
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file);
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path("harness_test_out") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("zero-flow experiment: all archives at the origin, zero spread") {
  const ExperimentConfig cfg = base_config();
  const RunReport report = run_experiment(zero_flow_instance(3), std::nullopt, cfg);
  REQUIRE(report.methods.size() == 2);
  for (const MethodReport& m : report.methods) {
    CHECK(m.hypervolumes.size() == 3);
    CHECK(m.mean_hv == 0.0);
    CHECK(m.std_hv == 0.0);
    CHECK(m.best); // identical samples: every method ties for best
    for (const Archive& archive : m.run_archives) {
      REQUIRE(archive.size() == 1);
      CHECK(archive.front_sorted()[0].objectives == ObjectivePair{0, 0});
    }
  }
}

TEST_CASE("single method is flagged best") {
  ExperimentConfig cfg = base_config();
  cfg.methods = {MethodKind::uniform};
  const RunReport report = run_experiment(zero_flow_instance(2), std::nullopt, cfg);
  REQUIRE(report.methods.size() == 1);
  CHECK(report.methods[0].best);
}

TEST_CASE("hypervolumes never exceed the true front's value") {
  Rng rng(6060);
  BiQapInstance instance;
  instance.name = "rand6";
  instance.n = 6;
  instance.distance = IntMatrix(6);
  instance.flow[0] = IntMatrix(6);
  instance.flow[1] = IntMatrix(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      instance.distance(i, j) = rng.uniform_int(0, 99);
      instance.flow[0](i, j) = rng.uniform_int(0, 99);
      instance.flow[1](i, j) = rng.uniform_int(0, 99);
    }

  ExperimentConfig cfg = base_config();
  cfg.runs = 5;
  cfg.num_weights = 6;
  const RunReport report = run_experiment(instance, std::nullopt, cfg);

  std::vector<ObjectivePair> true_front;
  for (const auto& [f1, f2] : oracles::pareto_front(instance))
    true_front.push_back({static_cast<double>(f1), static_cast<double>(f2)});
  const double best_possible = hypervolume_2d(true_front, report.reference);

  for (const MethodReport& m : report.methods)
    for (const double hv : m.hypervolumes) CHECK(hv <= best_possible + 1e-9);
}

TEST_CASE("reference front file drives the reference point") {
  ReferenceFront front;
  front.points = {{10, 40}, {20, 30}, {40, 10}};
  ExperimentConfig cfg = base_config();
  cfg.methods = {MethodKind::uniform};
  const RunReport report = run_experiment(zero_flow_instance(2), front, cfg);
  CHECK(report.reference.r1 == 40.0);
  CHECK(report.reference.r2 == 40.0);
  CHECK(report.reference_front.size() == 3);
  // Archive {(0,0)} dominates the whole reference box.
  CHECK(report.methods[0].hypervolumes[0] == doctest::Approx(1600.0));
}

TEST_CASE("significance matrix has one row per method and run-length samples") {
  const RunReport report = run_experiment(zero_flow_instance(2), std::nullopt, base_config());
  REQUIRE(report.significance.size() == 2);
  for (const auto& row : report.significance) {
    REQUIRE(row.size() == 2);
    for (const TTestResult& cell : row) {
      CHECK(cell.df == 4); // 3 + 3 - 2
      CHECK_FALSE(cell.significant);
    }
  }
}

TEST_CASE("emitted files: summary, report, fronts, reference overlay") {
  ReferenceFront front;
  front.points = {{1, 2}, {2, 1}};
  ExperimentConfig cfg = base_config();
  const fs::path dir = fresh_dir("emit");
  const RunReport report = run_experiment(zero_flow_instance(2), front, cfg);
  emit_summary(report, dir.string());
  emit_front_csv(report, dir.string());

  const std::string summary = slurp(dir / "summary.csv");
  CHECK(summary.find("instance,method,mean_hv,std_hv,best_flag\n") == 0);
  CHECK(summary.find("zeroflow,uniform,") != std::string::npos);
  CHECK(summary.find("zeroflow,adaptive-dichotomic,") != std::string::npos);

  const std::string reference = slurp(dir / "reference_front.csv");
  CHECK(reference == "f1,f2\n1,2\n2,1\n");

  for (const char* name : {"front_uniform_run1.csv", "front_uniform_run2.csv",
                           "front_uniform_run3.csv", "front_adaptive-dichotomic_run1.csv"}) {
    const std::string front_csv = slurp(dir / name);
    CHECK(front_csv.find("f1,f2,lambda1,lambda2\n") == 0);
    CHECK(front_csv.find("\n0,0,") != std::string::npos); // the origin solution
  }

  const std::string json_text = slurp(dir / "report.json");
  CHECK(json_text.find("\"instance\": \"zeroflow\"") != std::string::npos);
  CHECK(json_text.find("\"hypervolumes\"") != std::string::npos);
}

TEST_CASE("front CSV rows carry the generating weight") {
  // Hand-assembled report with a single archive entry from weight (1, 0).
  RunReport report;
  report.instance_name = "tiny";
  report.instance_size = 2;
  report.reference = {5, 5};
  MethodReport method;
  method.method = MethodKind::uniform;
  Archive archive;
  EvaluatedSolution sol;
  sol.assignment.loc = {0, 1};
  sol.objectives = {1, 2};
  sol.generating_weight = {1, 0};
  archive.insert(sol);
  method.run_archives.push_back(archive);
  method.hypervolumes.push_back(12.0);
  method.mean_hv = 12.0;
  method.best = true;
  report.methods.push_back(method);

  const fs::path dir = fresh_dir("weight_rows");
  emit_front_csv(report, dir.string());
  CHECK(slurp(dir / "front_uniform_run1.csv") == "f1,f2,lambda1,lambda2\n1,2,1,0\n");
}

TEST_CASE("iteration-budget experiments emit byte-identical outputs") {
  const BiQapInstance instance = synth_instance(7, 0.5, 21);
  ExperimentConfig cfg = base_config();
  cfg.backend = "sa";
  cfg.methods = {MethodKind::uniform, MethodKind::adaptive_averages,
                 MethodKind::adaptive_dichotomic};
  cfg.runs = 2;
  cfg.iteration_budget = 3000;
  cfg.workers = 2;

  const fs::path dir_a = fresh_dir("rerun_a");
  const fs::path dir_b = fresh_dir("rerun_b");
  const RunReport first = run_experiment(instance, std::nullopt, cfg);
  emit_summary(first, dir_a.string());
  emit_front_csv(first, dir_a.string());
  const RunReport second = run_experiment(instance, std::nullopt, cfg);
  emit_summary(second, dir_b.string());
  emit_front_csv(second, dir_b.string());

  for (const auto& entry : fs::directory_iterator(dir_a)) {
    const fs::path twin = dir_b / entry.path().filename();
    REQUIRE(fs::exists(twin));
    CHECK(slurp(entry.path()) == slurp(twin));
  }
  CHECK(std::distance(fs::directory_iterator(dir_a), fs::directory_iterator{}) ==
        std::distance(fs::directory_iterator(dir_b), fs::directory_iterator{}));
}

TEST_CASE("missing files surface as IoError") {
  ExperimentConfig cfg = base_config();
  cfg.instance_path = "/nonexistent/instance.dat";
  CHECK_THROWS_AS(run_experiment(cfg), IoError);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = base_config();
  cfg.runs = 0;
  CHECK_THROWS_AS(run_experiment(zero_flow_instance(2), std::nullopt, cfg), ValidationError);
  cfg = base_config();
  cfg.methods.clear();
  CHECK_THROWS_AS(run_experiment(zero_flow_instance(2), std::nullopt, cfg), ValidationError);
  cfg = base_config();
  cfg.backend = "quantum";
  CHECK_THROWS_AS(run_experiment(zero_flow_instance(2), std::nullopt, cfg), ValidationError);
}
