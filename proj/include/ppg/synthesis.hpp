#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "ppg/order.hpp"
#include "ppg/st_graph.hpp"

namespace ppg {

/// Per internal vertex: the left-to-right order of its incoming and
/// outgoing edges.
using Polarization = std::map<VertexId, Rotation>;

/// Left-to-right order of the global inputs and outputs.
struct Anchor {
  std::vector<EdgeId> inputs;
  std::vector<EdgeId> outputs;
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// Progressive graph with polarization and anchor: the combinatorial data
/// an upward drawing fixes, from which the planar order is recovered.
class PAGraph {
 public:
  /// Throws ValidationError (InvalidPolarization, InvalidAnchor) unless
  /// every internal vertex is polarized by exact permutations of its
  /// incident edges and the anchors permute I(G) and O(G).
  static PAGraph make(ProgressiveGraph g, Polarization polarization,
                      Anchor anchor);

  const ProgressiveGraph& graph() const { return graph_; }
  const Polarization& polarization() const { return polarization_; }
  const Anchor& anchor() const { return anchor_; }

  /// Inputs / outputs as edge indices, in anchor order.
  std::span<const std::size_t> anchored_inputs() const { return inputs_; }
  std::span<const std::size_t> anchored_outputs() const { return outputs_; }
  /// Position of a boundary edge within its anchor sequence.
  std::size_t input_position(std::size_t e) const { return in_pos_[e]; }
  std::size_t output_position(std::size_t e) const { return out_pos_[e]; }
  /// Outgoing edges of internal vertex `v` in polarization order.
  std::span<const std::size_t> polarized_out(std::size_t v) const {
    return out_order_[v];
  }
  /// Position of `e` among the outgoing edges of its source.
  std::size_t out_position(std::size_t e) const { return out_rank_[e]; }

  friend bool operator==(const PAGraph& a, const PAGraph& b) {
    return a.polarization_ == b.polarization_ && a.anchor_ == b.anchor_ &&
           isomorphic_by_edge_ids(a.graph_.digraph(), b.graph_.digraph());
  }

 private:
  PAGraph(ProgressiveGraph g) : graph_(std::move(g)) {}

  ProgressiveGraph graph_;
  Polarization polarization_;
  Anchor anchor_;
  std::vector<std::size_t> inputs_;
  std::vector<std::size_t> outputs_;
  std::vector<std::size_t> in_pos_;
  std::vector<std::size_t> out_pos_;
  std::vector<std::vector<std::size_t>> out_order_;
  std::vector<std::size_t> out_rank_;
};

enum class Comparison { Less, Greater, Inconsistent };

/// Which datum decides the relative position of two distinct edges:
/// a directed path between them, the anchor (no vertex reaches both), or
/// the polarization of a vertex reaching both.
enum class ComparisonCase { Oriented, Anchored, Polarized };

ComparisonCase comparison_case(const ProgressiveGraph& g, std::size_t e1,
                               std::size_t e2);

/// Position of e1 relative to e2 in the planar order determined by the
/// polarization and anchor, or Inconsistent when the data contradicts
/// itself for this pair. Requires e1 != e2.
Comparison compare_edges(const PAGraph& pa, std::size_t e1, std::size_t e2);
Comparison compare_edges(const PAGraph& pa, const EdgeId& e1,
                         const EdgeId& e2);

/// The unique planar order compatible with the polarization and anchor.
/// Throws ValidationError(NoConsistentOrder) with witnesses when none is.
POPGraph synthesize_order(const PAGraph& pa);

/// Polarization and anchor read off a planar order by restriction.
PAGraph extract_pa(const POPGraph& pop);

struct EnumerationBound {
  std::size_t max_edges = 10;
  bool force = false;
};

struct Enumeration {
  /// Orders as edge-index sequences, lexicographic by edge index.
  std::vector<std::vector<std::size_t>> orders;
  bool truncated = false;
};

/// All planar orders of `g`, at most `limit` of them. Throws TooLarge above
/// the edge bound unless forced.
Enumeration enumerate_planar_orders(
    const ProgressiveGraph& g,
    std::size_t limit = std::numeric_limits<std::size_t>::max(),
    EnumerationBound bound = {});

std::uint64_t count_planar_orders(const ProgressiveGraph& g,
                                  EnumerationBound bound = {});

/// st completion carrying the rotation: s lists the input anchor, t the
/// output anchor, internal vertices their polarization.
StGraph hat(const PAGraph& pa);

/// Inverse of hat(const PAGraph&). Throws ValidationError
/// (InvalidPolarization) unless every vertex carries full rotation data.
PAGraph circ_pa(const StGraph& st);

}  // namespace ppg
