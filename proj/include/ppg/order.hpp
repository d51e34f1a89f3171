#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ppg/bit_matrix.hpp"
#include "ppg/error.hpp"
#include "ppg/progressive.hpp"

namespace ppg {

/// One violated planar-order axiom.
///   P1 {e1, e2}:     e1 -> e2 strictly, yet e2 precedes e1.
///   P2 {e1, e2, e3}: e1 < e2 < e3 and e1 -> e3, but neither e1 -> e2 nor
///                    e2 -> e3.
struct OrderViolation {
  enum class Axiom { P1, P2 };
  Axiom axiom;
  std::vector<EdgeId> edges;

  std::string describe() const;
  friend bool operator==(const OrderViolation&, const OrderViolation&) =
      default;
};

class PlanarOrderError : public ValidationError {
 public:
  explicit PlanarOrderError(std::vector<OrderViolation> violations);
  const std::vector<OrderViolation>& violations() const { return violations_; }

 private:
  std::vector<OrderViolation> violations_;
};

/// Progressive graph with a validated planar order.
class POPGraph {
 public:
  const ProgressiveGraph& graph() const { return graph_; }
  /// Edge indices listed in planar order.
  std::span<const std::size_t> sequence() const { return seq_; }
  /// 1-based position of edge `e` in the planar order.
  std::size_t rank(std::size_t e) const { return rank_[e]; }
  bool precedes(std::size_t a, std::size_t b) const {
    return rank_[a] < rank_[b];
  }
  std::size_t edge_count() const { return seq_.size(); }
  std::vector<EdgeId> ids() const;

  /// Inputs (resp. outputs) listed in planar order.
  std::vector<std::size_t> ordered_inputs() const;
  std::vector<std::size_t> ordered_outputs() const;

 private:
  friend POPGraph validate_planar_order(ProgressiveGraph,
                                        std::vector<std::size_t>);
  POPGraph(ProgressiveGraph g, std::vector<std::size_t> seq);

  ProgressiveGraph graph_;
  std::vector<std::size_t> seq_;
  std::vector<std::size_t> rank_;
};

/// Maps an id sequence to edge indices. Throws ValidationError
/// (NotAPermutation) unless it lists every edge exactly once.
std::vector<std::size_t> edge_sequence(const ProgressiveGraph& g,
                                       std::span<const EdgeId> seq);

/// Every P1 and P2 violation of `seq` (a permutation of edge indices), P1
/// pairs first, each group in positional order.
std::vector<OrderViolation> planar_order_violations(
    const ProgressiveGraph& g, std::span<const std::size_t> seq);

/// Word-parallel P2 check: for every pair a < c with a -> c, every edge
/// strictly between them must be reachable from a or reach c. Agrees with
/// the triple enumeration in planar_order_violations.
bool satisfies_p2_bitwise(const ProgressiveGraph& g,
                          std::span<const std::size_t> seq);

/// Throws PlanarOrderError listing every violation.
POPGraph validate_planar_order(ProgressiveGraph g, std::vector<std::size_t> seq);
POPGraph validate_planar_order(ProgressiveGraph g, std::span<const EdgeId> seq);

/// Strict relation over edge indices, stored as an adjacency bit matrix.
class ConjugateOrder {
 public:
  ConjugateOrder() = default;
  explicit ConjugateOrder(std::size_t edge_count) : rel_(edge_count) {}

  std::size_t size() const { return rel_.size(); }
  bool contains(std::size_t a, std::size_t b) const { return rel_.test(a, b); }
  void insert(std::size_t a, std::size_t b) { rel_.set(a, b); }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const ConjugateOrder&, const ConjugateOrder&) =
      default;

 private:
  BitMatrix rel_;
};

/// {(a, b) : a precedes b and not a -> b}.
ConjugateOrder conjugate_order(const POPGraph& pop);

struct ConjugacyReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

/// Checks that `rel` is irreflexive and transitive and that every pair of
/// distinct edges is comparable by exactly one of -> and `rel`.
ConjugacyReport check_conjugacy(const ProgressiveGraph& g,
                                const ConjugateOrder& rel);

/// The total order a < b iff a -> b or (a, b) in `conj`.
/// Throws ValidationError(NotConjugate).
POPGraph order_from_conjugate(ProgressiveGraph g, const ConjugateOrder& conj);

/// (lowest, highest) boundary edge of a window, as edge indices.
struct Window {
  std::size_t low;
  std::size_t high;
  friend bool operator==(const Window&, const Window&) = default;
};

/// Input window of `e` with respect to `ordered_inputs`: the first and last
/// input i with i -> e. An input edge is its own window.
Window input_window_in(const ProgressiveGraph& g,
                       std::span<const std::size_t> ordered_inputs,
                       std::size_t e);
/// Output window of `e`: first and last output o with e -> o.
Window output_window_in(const ProgressiveGraph& g,
                        std::span<const std::size_t> ordered_outputs,
                        std::size_t e);

Window input_window(const POPGraph& pop, std::size_t e);
Window output_window(const POPGraph& pop, std::size_t e);
std::pair<EdgeId, EdgeId> input_window(const POPGraph& pop, const EdgeId& e);
std::pair<EdgeId, EdgeId> output_window(const POPGraph& pop, const EdgeId& e);

/// Edges between consecutive inputs and consecutive outputs.
///   p[k]: edges strictly between inputs[k] and inputs[k+1] (the last one
///         runs to the end of the order).
///   q[k]: edges strictly between outputs[k-1] and outputs[k]; q[0] is
///         everything before outputs[0].
struct IntervalPartition {
  std::vector<std::size_t> inputs;
  std::vector<std::size_t> outputs;
  std::vector<std::vector<std::size_t>> p;
  std::vector<std::vector<std::size_t>> q;
};

/// Throws std::logic_error if membership disagrees with the windows, which
/// cannot happen for a valid planar order.
IntervalPartition interval_partition(const POPGraph& pop);

}  // namespace ppg
