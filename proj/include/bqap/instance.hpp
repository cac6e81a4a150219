#ifndef BQAP_INSTANCE_HPP
#define BQAP_INSTANCE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bqap {

/// Square matrix of non-negative integers, stored row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }

  std::int64_t operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * n_ + col];
  }
  std::int64_t& operator()(int row, int col) {
    return data_[static_cast<std::size_t>(row) * n_ + col];
  }

  bool operator==(const IntMatrix&) const = default;

private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

/// A bi-objective QAP instance: two flow matrices over facility pairs and
/// one distance matrix over location pairs.
struct BiQapInstance {
  std::string name;
  int n = 0;
  std::array<IntMatrix, 2> flow; // flow[k](u, v): flow between facilities u,v under objective k
  IntMatrix distance;            // distance(i, l): distance between locations i,l

  bool operator==(const BiQapInstance&) const = default;

  /// Throws ValidationError unless n >= 2, all matrices are n x n and all
  /// entries are non-negative.
  void validate() const;
};

/// Mutually non-dominated reference front, sorted ascending by f1.
struct ReferenceFront {
  struct Point {
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;
    bool operator==(const Point&) const = default;
  };
  std::vector<Point> points;
};

/// Which matrix each of the three n x n blocks in an instance file holds.
enum class MatrixKind { distance, flow1, flow2 };
using MatrixOrder = std::array<MatrixKind, 3>;

/// Default file layout: distance block first, then the two flow blocks.
constexpr MatrixOrder default_matrix_order() {
  return {MatrixKind::distance, MatrixKind::flow1, MatrixKind::flow2};
}

/// Parses "distance,flow1,flow2"-style order specs; must name each matrix
/// exactly once. Throws ValidationError otherwise.
MatrixOrder parse_matrix_order(const std::string& spec);

/// Reads an instance from whitespace-separated integers: n followed by
/// three n x n matrices in the given block order. Arbitrary whitespace and
/// newlines are tolerated between tokens.
///
/// Throws ParseError on token count mismatch or a non-integer token,
/// ValidationError when n < 2 or an entry is negative.
BiQapInstance parse_instance(std::istream& text,
                             const MatrixOrder& order = default_matrix_order(),
                             const std::string& name = "");

/// Writes the instance in the format parse_instance reads, default block
/// order, one matrix row per line.
void render_instance(const BiQapInstance& instance, std::ostream& out);

/// Reads one "f1 f2" pair per non-empty line, drops dominated and
/// duplicate points, sorts ascending by f1.
/// Throws ParseError (with line number) on a malformed line.
ReferenceFront parse_front(std::istream& text);

void render_front(const ReferenceFront& front, std::ostream& out);

/// File-based wrappers; throw IoError when the path cannot be opened.
BiQapInstance load_instance(const std::string& path,
                            const MatrixOrder& order = default_matrix_order());
ReferenceFront load_front(const std::string& path);
void save_instance(const BiQapInstance& instance, const std::string& path);

/// Deterministically generates an instance whose two flow matrices have
/// (approximately) the requested off-diagonal sample correlation.
///
/// H1 and D entries are uniform in [0, 99]; H2 couples to H1 through the
/// target correlation plus uniform noise. Diagonals are zero and D is
/// symmetric. Throws ValidationError when n < 2 or |correlation| > 1,
/// GenerationError when the sample correlation misses the target by more
/// than 0.15 after a bounded number of retries.
BiQapInstance synth_instance(int n, double correlation, std::int64_t seed);

} // namespace bqap

#endif // BQAP_INSTANCE_HPP
