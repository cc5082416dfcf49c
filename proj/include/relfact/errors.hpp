#pragma once

#include <stdexcept>
#include <string>

namespace relfact {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that cannot be read at all (bad JSON, wrong field types,
/// unparsable numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A graph that violates a structural invariant, or a reference to an
/// edge/node it does not contain.
class GraphError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  enum class Kind {
    SharedEdge,
    SharedInteriorNode,
    BoundaryNotInGraph,
    BoundaryNotTerminal,
    UnreachableTerminal,
  };

  DecompositionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class EnumerationBoundError : public Error {
 public:
  using Error::Error;
};

class LinearAlgebraError : public Error {
 public:
  using Error::Error;
};

/// Raised when a proven identity fails at runtime; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace relfact
