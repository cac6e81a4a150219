#ifndef BQAP_METRICS_HPP
#define BQAP_METRICS_HPP

#include <vector>

#include "bqap/encoding.hpp"
#include "bqap/instance.hpp"

namespace bqap {

/// Upper corner bounding the hypervolume region; must be dominated by the
/// points under comparison for the area to be meaningful.
struct ReferencePoint {
  double r1 = 0;
  double r2 = 0;
};

/// Hypervolume values across runs.
using HvSample = std::vector<double>;

/// Component-wise maxima of the front. Throws ValidationError when empty.
ReferencePoint reference_point(const ReferenceFront& front);

/// Area dominated by at least one point and bounded by `ref`, by rectangle
/// decomposition of the f1-sorted non-dominated subset. Only points with
/// f1 < r1 and f2 < r2 contribute; order of the input and dominated points
/// in it do not matter.
double hypervolume_2d(const std::vector<ObjectivePair>& points, const ReferencePoint& ref);

struct TTestResult {
  double t = 0;
  int df = 0;
  bool significant = false;
};

/// Two-sample Student t-test with pooled variance, two-sided p-value from
/// the regularized incomplete beta function. Zero pooled variance yields
/// t = 0 / not significant for equal means, and a significant result with
/// t = +-infinity for unequal means. Throws ValidationError when a sample
/// has fewer than 2 values or alpha is outside (0, 1).
TTestResult t_test(const HvSample& a, const HvSample& b, double alpha);

struct SampleStats {
  double mean = 0;
  double std_dev = 0; // sample standard deviation, divisor size-1; 0 for a singleton
};

/// Throws ValidationError when the sample is empty.
SampleStats summarize(const HvSample& a);

namespace detail {
/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// expansion (relative tolerance 1e-10, at most 300 iterations).
double incomplete_beta(double a, double b, double x);
} // namespace detail

} // namespace bqap

#endif // BQAP_METRICS_HPP
