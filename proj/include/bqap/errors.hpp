#ifndef BQAP_ERRORS_HPP
#define BQAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bqap {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (token count, non-numeric token, bad line).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
  ParseError(long long expected, long long found)
      : Error("token count mismatch: expected " + std::to_string(expected) +
              ", found " + std::to_string(found)),
        expected_tokens(expected), found_tokens(found) {}

  long long expected_tokens = -1;
  long long found_tokens = -1;
};

/// Violated precondition or domain invariant.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Synthetic instance generation could not reach the requested target.
class GenerationError : public Error {
public:
  explicit GenerationError(const std::string& what) : Error(what) {}
};

/// A binary assignment violates an exactly-one constraint.
/// `g1` is a row (location) constraint, `g2` a column (facility) constraint.
class InfeasibleError : public Error {
public:
  enum class Constraint { g1, g2 };

  InfeasibleError(Constraint c, int index)
      : Error(std::string("infeasible assignment: constraint ") +
              (c == Constraint::g1 ? "g1" : "g2") + "[" +
              std::to_string(index) + "] violated"),
        constraint(c), constraint_index(index) {}

  Constraint constraint;
  int constraint_index;
};

/// Request exceeds a backend's hard size limit.
class CapacityError : public Error {
public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/// Front has too few points for a gap to exist.
class DegenerateFrontError : public Error {
public:
  explicit DegenerateFrontError(const std::string& what) : Error(what) {}
};

/// Endpoint pair does not describe a strict trade-off.
class DegeneratePairError : public Error {
public:
  explicit DegeneratePairError(const std::string& what) : Error(what) {}
};

/// Filesystem failure (missing file, unwritable destination).
class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace bqap

#endif // BQAP_ERRORS_HPP
