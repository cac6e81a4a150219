#include "bqap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bqap/archive.hpp"
#include "bqap/errors.hpp"

namespace bqap {

ReferencePoint reference_point(const ReferenceFront& front) {
  if (front.points.empty())
    throw ValidationError("reference point needs a non-empty front");
  std::int64_t r1 = front.points[0].f1, r2 = front.points[0].f2;
  for (const auto& p : front.points) {
    r1 = std::max(r1, p.f1);
    r2 = std::max(r2, p.f2);
  }
  return {static_cast<double>(r1), static_cast<double>(r2)};
}

double hypervolume_2d(const std::vector<ObjectivePair>& points, const ReferencePoint& ref) {
  // Clip to the reference box, then reduce to the non-dominated subset so
  // rectangle widths never double-count.
  std::vector<ObjectivePair> inside;
  for (const ObjectivePair& p : points)
    if (p.f1 < ref.r1 && p.f2 < ref.r2) inside.push_back(p);

  std::vector<ObjectivePair> front;
  for (const ObjectivePair& p : inside) {
    bool dominated_or_dup = false;
    for (const ObjectivePair& q : front) {
      if (q == p || dominates(q, p)) {
        dominated_or_dup = true;
        break;
      }
    }
    if (dominated_or_dup) continue;
    std::erase_if(front, [&p](const ObjectivePair& q) { return dominates(p, q); });
    front.push_back(p);
  }
  std::sort(front.begin(), front.end(),
            [](const ObjectivePair& a, const ObjectivePair& b) { return a.f1 < b.f1; });

  double area = 0;
  for (std::size_t i = 0; i < front.size(); ++i) {
    const double next_f1 = i + 1 < front.size() ? front[i + 1].f1 : ref.r1;
    area += (next_f1 - front[i].f1) * (ref.r2 - front[i].f2);
  }
  return area;
}

namespace detail {

// Continued fraction for the incomplete beta function (modified Lentz).
static double beta_cf(double a, double b, double x) {
  constexpr double rel_tol = 1e-10;
  constexpr int max_iter = 300;
  constexpr double tiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < rel_tol) return h;
  }
  return h; // converged to tolerance in practice long before the cap
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log(1.0 - x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

} // namespace detail

TTestResult t_test(const HvSample& a, const HvSample& b, double alpha) {
  if (a.size() < 2 || b.size() < 2)
    throw ValidationError("t-test needs at least 2 values per sample");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");

  const SampleStats sa = summarize(a);
  const SampleStats sb = summarize(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const int df = static_cast<int>(a.size() + b.size()) - 2;

  const double pooled_var =
      ((na - 1.0) * sa.std_dev * sa.std_dev + (nb - 1.0) * sb.std_dev * sb.std_dev) /
      static_cast<double>(df);
  const double diff = sa.mean - sb.mean;

  if (pooled_var == 0.0) {
    if (diff == 0.0) return {0.0, df, false};
    const double inf = std::numeric_limits<double>::infinity();
    return {diff > 0 ? inf : -inf, df, true};
  }

  const double t = diff / std::sqrt(pooled_var * (1.0 / na + 1.0 / nb));
  // Two-sided p-value: P(|T| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2).
  const double p = detail::incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
  return {t, df, p < alpha};
}

SampleStats summarize(const HvSample& a) {
  if (a.empty()) throw ValidationError("summarize needs a non-empty sample");
  double mean = 0;
  for (const double v : a) mean += v;
  mean /= static_cast<double>(a.size());
  if (a.size() == 1) return {mean, 0.0};
  double ss = 0;
  for (const double v : a) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(a.size() - 1))};
}

} // namespace bqap
