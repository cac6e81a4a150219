#include "bqap/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "bqap/errors.hpp"

namespace bqap {

WeightVector WeightVector::of(double lambda1, double lambda2) {
  if (!(lambda1 >= 0.0 && lambda1 <= 1.0) || !(lambda2 >= 0.0 && lambda2 <= 1.0))
    throw ValidationError("weights must lie in [0, 1]");
  if (std::abs(lambda1 + lambda2 - 1.0) > 1e-12)
    throw ValidationError("weights must sum to 1");
  return {lambda1, lambda2};
}

WeightVector WeightVector::from_lambda1(double lambda1) {
  return of(lambda1, 1.0 - lambda1);
}

bool Assignment::is_permutation() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (const int location : loc) {
    if (location < 0 || location >= n || seen[location]) return false;
    seen[location] = true;
  }
  return n > 0;
}

Assignment Assignment::identity(int n) {
  Assignment a;
  a.loc.resize(n);
  std::iota(a.loc.begin(), a.loc.end(), 0);
  return a;
}

bool BinaryAssignment::is_feasible() const {
  for (int i = 0; i < n; ++i) {
    int row_sum = 0;
    for (int j = 0; j < n; ++j) row_sum += (*this)(i, j);
    if (row_sum != 1) return false;
  }
  for (int j = 0; j < n; ++j) {
    int col_sum = 0;
    for (int i = 0; i < n; ++i) col_sum += (*this)(i, j);
    if (col_sum != 1) return false;
  }
  return true;
}

ObjectivePair evaluate_objectives(const BiQapInstance& instance, const Assignment& a) {
  const int n = instance.n;
  std::int64_t f1 = 0, f2 = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const std::int64_t d = instance.distance(a.loc[u], a.loc[v]);
      f1 += instance.flow[0](u, v) * d;
      f2 += instance.flow[1](u, v) * d;
    }
  return {static_cast<double>(f1), static_cast<double>(f2)};
}

double scalarised_value(const ObjectivePair& objs, const WeightVector& w) {
  return w.lambda1 * objs.f1 + w.lambda2 * objs.f2;
}

CqmModel build_cqm(const BiQapInstance& instance, const WeightVector& w) {
  const int n = instance.n;
  CqmModel model;
  model.n = n;

  // Weighted flow between facility pair (j, v), applied to every ordered
  // location pair; products of a variable with itself reduce to the
  // variable and land in the linear part.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int var_a = model.var_index(i, j);
      for (int l = 0; l < n; ++l)
        for (int v = 0; v < n; ++v) {
          const int var_b = model.var_index(l, v);
          const double coeff = (w.lambda1 * static_cast<double>(instance.flow[0](j, v)) +
                                w.lambda2 * static_cast<double>(instance.flow[1](j, v))) *
                               static_cast<double>(instance.distance(i, l));
          if (coeff == 0.0) continue;
          if (var_a == var_b)
            model.linear[var_a] += coeff;
          else
            model.quadratic[{std::min(var_a, var_b), std::max(var_a, var_b)}] += coeff;
        }
    }

  for (int i = 0; i < n; ++i) {
    CqmModel::DiscreteGroup group{CqmModel::DiscreteGroup::Kind::row, i, {}};
    for (int j = 0; j < n; ++j) group.members.push_back(model.var_index(i, j));
    model.groups.push_back(std::move(group));
  }
  for (int j = 0; j < n; ++j) {
    CqmModel::DiscreteGroup group{CqmModel::DiscreteGroup::Kind::col, j, {}};
    for (int i = 0; i < n; ++i) group.members.push_back(model.var_index(i, j));
    model.groups.push_back(std::move(group));
  }
  return model;
}

BinaryAssignment encode(const Assignment& a) {
  const int n = a.size();
  BinaryAssignment x(n);
  for (int j = 0; j < n; ++j) x.set(a.loc[j], j, true);
  return x;
}

Assignment decode(const BinaryAssignment& x) {
  const int n = x.n;
  for (int i = 0; i < n; ++i) {
    int row_sum = 0;
    for (int j = 0; j < n; ++j) row_sum += x(i, j);
    if (row_sum != 1) throw InfeasibleError(InfeasibleError::Constraint::g1, i);
  }
  Assignment a;
  a.loc.resize(n);
  for (int j = 0; j < n; ++j) {
    int col_sum = 0;
    int row = -1;
    for (int i = 0; i < n; ++i)
      if (x(i, j)) {
        col_sum += 1;
        row = i;
      }
    if (col_sum != 1) throw InfeasibleError(InfeasibleError::Constraint::g2, j);
    a.loc[j] = row;
  }
  return a;
}

double cqm_energy(const CqmModel& model, const BinaryAssignment& x) {
  const int n = model.n;
  if (x.n != n) throw ValidationError("assignment size does not match model");
  const Assignment a_checked = decode(x); // throws InfeasibleError when x is infeasible

  // Only terms whose variables are all set survive, and a feasible x has
  // exactly n set variables.
  std::vector<int> set_vars(n);
  for (int j = 0; j < n; ++j) set_vars[j] = model.var_index(a_checked.loc[j], j);

  double energy = 0;
  for (const int var : set_vars) {
    if (const auto it = model.linear.find(var); it != model.linear.end())
      energy += it->second;
  }
  for (std::size_t a = 0; a < set_vars.size(); ++a)
    for (std::size_t b = a + 1; b < set_vars.size(); ++b) {
      const auto key = std::minmax(set_vars[a], set_vars[b]);
      if (const auto it = model.quadratic.find({key.first, key.second});
          it != model.quadratic.end())
        energy += it->second;
    }
  return energy;
}

void dump_model(const CqmModel& model, std::ostream& out) {
  const int n = model.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out << "var " << i << ' ' << j << '\n';
  for (const auto& [var, coeff] : model.linear)
    out << "lin " << var / n << ' ' << var % n << ' ' << coeff << '\n';
  for (const auto& [pair, coeff] : model.quadratic)
    out << "quad (" << pair.first / n << ',' << pair.first % n << ") ("
        << pair.second / n << ',' << pair.second % n << ") " << coeff << '\n';
  for (const auto& group : model.groups) {
    out << "group " << (group.kind == CqmModel::DiscreteGroup::Kind::row ? "row" : "col")
        << ' ' << group.index << ':';
    for (const int member : group.members) out << ' ' << member;
    out << '\n';
  }
}

} // namespace bqap
