#include "bqap/archive.hpp"

#include <algorithm>

namespace bqap {

bool dominates(const ObjectivePair& a, const ObjectivePair& b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

InsertOutcome Archive::insert(EvaluatedSolution sol) {
  for (const EvaluatedSolution& entry : entries_) {
    if (entry.objectives == sol.objectives)
      return {InsertOutcome::Kind::duplicate_kept, 0};
    if (dominates(entry.objectives, sol.objectives))
      return {InsertOutcome::Kind::rejected, 0};
  }

  const std::size_t before = entries_.size();
  std::erase_if(entries_, [&sol](const EvaluatedSolution& entry) {
    return dominates(sol.objectives, entry.objectives);
  });
  const std::size_t removed = before - entries_.size();

  const auto pos = std::lower_bound(
      entries_.begin(), entries_.end(), sol,
      [](const EvaluatedSolution& a, const EvaluatedSolution& b) {
        return a.objectives.f1 < b.objectives.f1;
      });
  entries_.insert(pos, std::move(sol));
  return {InsertOutcome::Kind::accepted, removed};
}

std::vector<ObjectivePair> Archive::objective_front() const {
  std::vector<ObjectivePair> points;
  points.reserve(entries_.size());
  for (const EvaluatedSolution& entry : entries_) points.push_back(entry.objectives);
  return points;
}

} // namespace bqap
