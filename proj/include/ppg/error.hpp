#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based, 0 when not attributable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class ValidationKind {
  UnknownEdge,
  UnknownVertex,
  DuplicateId,
  CycleDetected,
  BadBoundaryDegree,
  IsolatedVertex,
  ReservedName,
  NotSt,
  NotAPermutation,
  PlanarOrderViolation,
  NotConjugate,
  InvalidPolarization,
  InvalidAnchor,
  NoConsistentOrder,
  NoInternalVertex,
};

const char* to_string(ValidationKind kind);

/// A value violates one of the structural axioms. `witness` names the
/// offending ids (a cycle, a vertex, a violated triple, ...).
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, const std::string& message,
                  std::vector<std::string> witness = {})
      : Error(message), kind_(kind), witness_(std::move(witness)) {}

  ValidationKind kind() const { return kind_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  ValidationKind kind_;
  std::vector<std::string> witness_;
};

/// Output count of the lower graph differs from input count of the upper.
class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t lower_outputs, std::size_t upper_inputs)
      : Error("arity mismatch: " + std::to_string(lower_outputs) +
              " outputs vs " + std::to_string(upper_inputs) + " inputs"),
        lower_outputs_(lower_outputs),
        upper_inputs_(upper_inputs) {}

  std::size_t lower_outputs() const { return lower_outputs_; }
  std::size_t upper_inputs() const { return upper_inputs_; }

 private:
  std::size_t lower_outputs_;
  std::size_t upper_inputs_;
};

/// Brute-force enumeration refused because the graph has too many edges.
class TooLarge : public Error {
 public:
  TooLarge(std::size_t edges, std::size_t bound)
      : Error("graph has " + std::to_string(edges) +
              " edges, enumeration bound is " + std::to_string(bound)),
        edges_(edges),
        bound_(bound) {}

  std::size_t edges() const { return edges_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t edges_;
  std::size_t bound_;
};

}  // namespace ppg
