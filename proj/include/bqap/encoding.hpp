#ifndef BQAP_ENCODING_HPP
#define BQAP_ENCODING_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "bqap/instance.hpp"

namespace bqap {

/// Scalarisation weights (lambda1, lambda2), lambda1 + lambda2 = 1.
struct WeightVector {
  double lambda1 = 0.5;
  double lambda2 = 0.5;

  /// Validating factory. Throws ValidationError unless both components are
  /// in [0, 1] and sum to 1 within 1e-12.
  static WeightVector of(double lambda1, double lambda2);

  /// Shorthand for of(lambda1, 1 - lambda1).
  static WeightVector from_lambda1(double lambda1);

  bool operator==(const WeightVector&) const = default;
};

/// Permutation in facility-major form: loc[j] is the location of facility j.
struct Assignment {
  std::vector<int> loc;

  int size() const { return static_cast<int>(loc.size()); }
  bool is_permutation() const;

  static Assignment identity(int n);

  bool operator==(const Assignment&) const = default;
};

/// Two-way one-hot matrix: x(i, j) = 1 iff facility j sits in location i.
/// Feasible iff every row and every column sums to exactly 1.
struct BinaryAssignment {
  explicit BinaryAssignment(int n)
      : n(n), bits(static_cast<std::size_t>(n) * n, 0) {}

  int n = 0;
  std::vector<std::uint8_t> bits; // row-major

  std::uint8_t operator()(int i, int j) const {
    return bits[static_cast<std::size_t>(i) * n + j];
  }
  void set(int i, int j, bool value) {
    bits[static_cast<std::size_t>(i) * n + j] = value ? 1 : 0;
  }

  bool is_feasible() const;
};

/// Both objective values of one solution.
struct ObjectivePair {
  double f1 = 0;
  double f2 = 0;
  bool operator==(const ObjectivePair&) const = default;
};

/// Scalarised constrained quadratic model over n^2 binary variables.
///
/// Variable (i, j) has index i*n + j, i indexing locations and j
/// facilities. The row and column exactly-one constraints are kept as hard
/// discrete groups; they are never folded into the objective as penalties,
/// so the objective of a zero-flow instance is identically zero whatever
/// the variable values.
struct CqmModel {
  struct DiscreteGroup {
    enum class Kind { row, col }; // row = g1 (per location), col = g2 (per facility)
    Kind kind;
    int index;
    std::vector<int> members;
  };

  int n = 0;
  // Quadratic coefficients on unordered variable pairs, key.first < key.second.
  // std::map keeps iteration lexicographic, so construction is reproducible.
  std::map<std::pair<int, int>, double> quadratic;
  std::map<int, double> linear;
  std::vector<DiscreteGroup> groups; // n row groups then n col groups

  int num_vars() const { return n * n; }
  int var_index(int location, int facility) const { return location * n + facility; }
};

/// f_k = sum over facility pairs (u, v) of flow[k](u, v) * distance(loc[u], loc[v]).
ObjectivePair evaluate_objectives(const BiQapInstance& instance, const Assignment& a);

/// lambda1 * f1 + lambda2 * f2.
double scalarised_value(const ObjectivePair& objs, const WeightVector& w);

/// Builds the weighted quadratic objective plus the 2n discrete groups.
/// Products of distinct variables accumulate into `quadratic`, squares
/// (which equal the variable itself) into `linear`.
CqmModel build_cqm(const BiQapInstance& instance, const WeightVector& w);

BinaryAssignment encode(const Assignment& a);

/// Inverse of encode. Throws InfeasibleError naming the first violated
/// row (g1) or column (g2) constraint when x is not a permutation matrix.
Assignment decode(const BinaryAssignment& x);

/// Objective value of the model under x. Throws InfeasibleError when x is
/// infeasible.
double cqm_energy(const CqmModel& model, const BinaryAssignment& x);

/// Debug listing of a model. Format, one record per line:
///   var <i> <j>
///   lin <i> <j> <coeff>
///   quad (<i>,<j>) (<l>,<v>) <coeff>
///   group <row|col> <index>: <member> <member> ...
/// Variables are listed in index order, coefficients in lexicographic
/// variable order, groups row-first.
void dump_model(const CqmModel& model, std::ostream& out);

} // namespace bqap

#endif // BQAP_ENCODING_HPP
