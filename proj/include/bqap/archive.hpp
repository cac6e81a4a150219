#ifndef BQAP_ARCHIVE_HPP
#define BQAP_ARCHIVE_HPP

#include <cstddef>
#include <vector>

#include "bqap/solver.hpp"

namespace bqap {

/// Minimisation dominance: a is at least as good in both objectives and
/// strictly better in one.
bool dominates(const ObjectivePair& a, const ObjectivePair& b);

struct InsertOutcome {
  enum class Kind {
    accepted,       // entered the archive, possibly evicting entries
    rejected,       // dominated by an existing entry
    duplicate_kept, // equal objectives already present; existing retained
  };
  Kind kind;
  std::size_t removed = 0; // entries evicted on accept

  bool accepted() const { return kind == Kind::accepted; }
};

/// Mutually non-dominated set of evaluated solutions, at most one entry
/// per distinct objective pair. Kept sorted ascending by f1 (hence
/// strictly descending by f2). Single writer; reads are safe between
/// mutations.
class Archive {
public:
  InsertOutcome insert(EvaluatedSolution sol);

  /// Entries ascending by f1.
  const std::vector<EvaluatedSolution>& front_sorted() const { return entries_; }

  std::vector<ObjectivePair> objective_front() const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

private:
  std::vector<EvaluatedSolution> entries_;
};

} // namespace bqap

#endif // BQAP_ARCHIVE_HPP
