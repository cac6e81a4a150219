#include "doctest.h"

#include <set>

#include "bqap/archive.hpp"
#include "bqap/rng.hpp"
#include "oracles.hpp"

using namespace bqap;

namespace {

EvaluatedSolution solution_at(double f1, double f2) {
  EvaluatedSolution sol;
  sol.assignment.loc = {0, 1};
  sol.objectives = {f1, f2};
  sol.generating_weight = {0.5, 0.5};
  return sol;
}

} // namespace

TEST_CASE("dominance is component-wise with one strict inequality") {
  CHECK(dominates({1, 1}, {2, 2}));
  CHECK(dominates({1, 2}, {1, 3}));
  CHECK_FALSE(dominates({1, 2}, {2, 1}));
  CHECK_FALSE(dominates({2, 1}, {1, 2}));
  CHECK_FALSE(dominates({1, 1}, {1, 1}));
}

TEST_CASE("insert outcomes: rejected, accepted with eviction, duplicate") {
  Archive archive;
  CHECK(archive.insert(solution_at(1, 1)).accepted());

  const InsertOutcome rejected = archive.insert(solution_at(2, 2));
  CHECK(rejected.kind == InsertOutcome::Kind::rejected);
  CHECK(archive.size() == 1);

  Archive two;
  two.insert(solution_at(1, 2));
  two.insert(solution_at(2, 1));
  const InsertOutcome swept = two.insert(solution_at(0, 0));
  CHECK(swept.kind == InsertOutcome::Kind::accepted);
  CHECK(swept.removed == 2);
  CHECK(two.size() == 1);

  Archive dup;
  dup.insert(solution_at(1, 2));
  const InsertOutcome kept = dup.insert(solution_at(1, 2));
  CHECK(kept.kind == InsertOutcome::Kind::duplicate_kept);
  CHECK(dup.size() == 1);
}

TEST_CASE("duplicate objectives keep the first-seen assignment") {
  Archive archive;
  EvaluatedSolution first = solution_at(3, 3);
  first.assignment.loc = {0, 1, 2};
  EvaluatedSolution second = solution_at(3, 3);
  second.assignment.loc = {2, 1, 0};
  archive.insert(first);
  archive.insert(second);
  REQUIRE(archive.size() == 1);
  CHECK(archive.front_sorted()[0].assignment.loc == std::vector<int>{0, 1, 2});
}

TEST_CASE("front_sorted orders by f1") {
  Archive archive;
  archive.insert(solution_at(2, 1));
  archive.insert(solution_at(1, 2));
  const auto& front = archive.front_sorted();
  REQUIRE(front.size() == 2);
  CHECK(front[0].objectives == ObjectivePair{1, 2});
  CHECK(front[1].objectives == ObjectivePair{2, 1});

  Archive empty;
  CHECK(empty.front_sorted().empty());

  Archive single;
  single.insert(solution_at(5, 5));
  CHECK(single.front_sorted().size() == 1);
}

TEST_CASE("archive equals the brute-force non-dominated filter") {
  Rng rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    Archive archive;
    std::vector<oracles::IntPoint> inserted;
    for (int i = 0; i < 300; ++i) {
      const std::int64_t f1 = rng.uniform_int(0, 60);
      const std::int64_t f2 = rng.uniform_int(0, 60);
      inserted.emplace_back(f1, f2);
      archive.insert(solution_at(static_cast<double>(f1), static_cast<double>(f2)));
    }
    const auto expected = oracles::pareto_filter(inserted);
    REQUIRE(archive.size() == expected.size());
    const auto front = archive.front_sorted();
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(front[i].objectives.f1 == static_cast<double>(expected[i].first));
      CHECK(front[i].objectives.f2 == static_cast<double>(expected[i].second));
    }
  }
}

TEST_CASE("front has strictly increasing f1 and strictly decreasing f2") {
  Rng rng(7);
  Archive archive;
  for (int i = 0; i < 500; ++i)
    archive.insert(solution_at(static_cast<double>(rng.uniform_int(0, 100)),
                               static_cast<double>(rng.uniform_int(0, 100))));
  const auto& front = archive.front_sorted();
  for (std::size_t i = 0; i + 1 < front.size(); ++i) {
    CHECK(front[i].objectives.f1 < front[i + 1].objectives.f1);
    CHECK(front[i].objectives.f2 > front[i + 1].objectives.f2);
  }
}

TEST_CASE("insert is idempotent") {
  Archive archive;
  const EvaluatedSolution sol = solution_at(4, 7);
  archive.insert(sol);
  const std::size_t size_after_first = archive.size();
  archive.insert(sol);
  CHECK(archive.size() == size_after_first);
}
