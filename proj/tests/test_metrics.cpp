#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bqap/errors.hpp"
#include "bqap/metrics.hpp"
#include "bqap/rng.hpp"
#include "oracles.hpp"

using namespace bqap;

TEST_CASE("reference point takes component-wise maxima") {
  ReferenceFront front;
  front.points = {{1, 2}, {2, 1}};
  const ReferencePoint ref = reference_point(front);
  CHECK(ref.r1 == 2);
  CHECK(ref.r2 == 2);

  ReferenceFront single;
  single.points = {{5, 7}};
  CHECK(reference_point(single).r1 == 5);
  CHECK(reference_point(single).r2 == 7);

  CHECK_THROWS_AS(reference_point(ReferenceFront{}), ValidationError);
}

TEST_CASE("hypervolume rectangle decomposition") {
  CHECK(hypervolume_2d({{1, 2}, {2, 1}}, {3, 3}) == doctest::Approx(3.0));
  CHECK(hypervolume_2d({}, {10, 10}) == 0.0);
  CHECK(hypervolume_2d({{4, 4}}, {3, 3}) == 0.0);
  CHECK(hypervolume_2d({{3, 3}}, {3, 3}) == 0.0); // boundary point contributes nothing
  CHECK(hypervolume_2d({{0, 0}}, {4, 5}) == doctest::Approx(20.0));
}

TEST_CASE("hypervolume matches the grid oracle on random fronts") {
  Rng rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const int count = static_cast<int>(rng.uniform_int(1, 20));
    std::vector<ObjectivePair> points;
    std::vector<std::pair<double, double>> raw;
    for (int i = 0; i < count; ++i) {
      const double f1 = static_cast<double>(rng.uniform_int(0, 100));
      const double f2 = static_cast<double>(rng.uniform_int(0, 100));
      points.push_back({f1, f2});
      raw.emplace_back(f1, f2);
    }
    const ReferencePoint ref{static_cast<double>(rng.uniform_int(50, 120)),
                             static_cast<double>(rng.uniform_int(50, 120))};
    const double fast = hypervolume_2d(points, ref);
    const double slow = oracles::grid_hypervolume(raw, ref.r1, ref.r2);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-9));
  }
}

TEST_CASE("hypervolume is monotone and insensitive to order and dominated points") {
  Rng rng(99);
  const ReferencePoint ref{120, 120};
  std::vector<ObjectivePair> points;
  double previous = 0;
  for (int i = 0; i < 40; ++i) {
    points.push_back({static_cast<double>(rng.uniform_int(0, 100)),
                      static_cast<double>(rng.uniform_int(0, 100))});
    const double hv = hypervolume_2d(points, ref);
    CHECK(hv >= previous - 1e-12);
    previous = hv;
  }

  std::vector<ObjectivePair> shuffled = points;
  rng.shuffle(shuffled);
  CHECK(hypervolume_2d(shuffled, ref) == doctest::Approx(previous).epsilon(1e-12));

  std::vector<ObjectivePair> with_dominated = points;
  with_dominated.push_back({110, 110}); // dominated by everything inside the box
  CHECK(hypervolume_2d(with_dominated, ref) == doctest::Approx(previous).epsilon(1e-12));
}

TEST_CASE("t-test on identical samples is null") {
  const HvSample sample{1.5, 2.5, 3.5};
  const TTestResult r = t_test(sample, sample, 0.05);
  CHECK(r.t == 0.0);
  CHECK_FALSE(r.significant);
}

TEST_CASE("t-test fixture {1,2,3} vs {2,3,4}") {
  const TTestResult r = t_test({1, 2, 3}, {2, 3, 4}, 0.05);
  CHECK(r.t == doctest::Approx(-1.2247).epsilon(1e-4));
  CHECK(r.df == 4);
  CHECK_FALSE(r.significant);
}

TEST_CASE("degenerate zero-variance separation is significant") {
  const TTestResult r = t_test({0, 0, 0}, {5, 5, 5}, 0.05);
  CHECK(r.significant);
  CHECK(std::isinf(r.t));
  CHECK(r.t < 0);

  const TTestResult equal = t_test({5, 5}, {5, 5}, 0.05);
  CHECK(equal.t == 0.0);
  CHECK_FALSE(equal.significant);
}

TEST_CASE("t-test is antisymmetric") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    HvSample a, b;
    for (int i = 0; i < 6; ++i) {
      a.push_back(static_cast<double>(rng.uniform_int(0, 50)));
      b.push_back(static_cast<double>(rng.uniform_int(0, 50)));
    }
    const TTestResult ab = t_test(a, b, 0.05);
    const TTestResult ba = t_test(b, a, 0.05);
    CHECK(ab.t == doctest::Approx(-ba.t).epsilon(1e-12));
    CHECK(ab.significant == ba.significant);
    CHECK(ab.df == ba.df);
  }
}

TEST_CASE("t-test p-value agrees with direct integration of the density") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    HvSample a, b;
    for (int i = 0; i < 5; ++i) {
      a.push_back(static_cast<double>(rng.uniform_int(0, 30)));
      b.push_back(static_cast<double>(rng.uniform_int(0, 30)) + 0.5 * trial);
    }
    const TTestResult r = t_test(a, b, 0.05);
    if (!std::isfinite(r.t) || r.t == 0.0) continue;
    const double p_oracle = 2.0 * oracles::t_upper_tail(std::abs(r.t), r.df);
    CHECK(r.significant == (p_oracle < 0.05));
  }
}

TEST_CASE("t-test validates inputs") {
  CHECK_THROWS_AS(t_test({1}, {1, 2}, 0.05), ValidationError);
  CHECK_THROWS_AS(t_test({1, 2}, {1, 2}, 0.0), ValidationError);
  CHECK_THROWS_AS(t_test({1, 2}, {1, 2}, 1.0), ValidationError);
}

TEST_CASE("summarize mean and sample standard deviation") {
  const SampleStats constant = summarize({2, 2, 2});
  CHECK(constant.mean == 2.0);
  CHECK(constant.std_dev == 0.0);

  const SampleStats pair = summarize({1, 3});
  CHECK(pair.mean == 2.0);
  CHECK(pair.std_dev == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  const SampleStats single = summarize({7});
  CHECK(single.mean == 7.0);
  CHECK(single.std_dev == 0.0);

  CHECK_THROWS_AS(summarize({}), ValidationError);
}

TEST_CASE("incomplete beta sanity") {
  CHECK(detail::incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(detail::incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(detail::incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  // Reflection identity.
  for (const double x : {0.1, 0.4, 0.77}) {
    const double direct = detail::incomplete_beta(2.5, 1.5, x);
    const double reflected = 1.0 - detail::incomplete_beta(1.5, 2.5, 1.0 - x);
    CHECK(direct == doctest::Approx(reflected).epsilon(1e-10));
  }
}
