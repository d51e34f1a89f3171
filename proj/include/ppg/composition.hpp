#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ppg/order.hpp"

namespace ppg {

/// True iff no connected component has two internal vertices, i.e. the graph
/// is a side-by-side row of spiders and bare wires.
bool is_elementary(const ProgressiveGraph& g);

/// Provenance of one glued edge: the k-th output of the lower graph joined
/// to the k-th input of the upper graph.
struct GluedEdge {
  EdgeId lower;
  EdgeId upper;
  EdgeId glued;
};

struct Composite {
  POPGraph pop;
  std::vector<GluedEdge> glued;
};

/// Stacks `upper` on top of `lower` (lower's outputs feed upper's inputs) and
/// orders the result by the shuffle of the two planar orders.
///
/// Ids: lower-graph vertices and edges keep their names; upper-graph names
/// that collide are primed; a glued edge is named "<lower>~<upper>". The
/// edges of the result are declared in shuffle order.
///
/// Throws ArityMismatch. A result failing planar-order validation is a
/// defect and surfaces as std::logic_error.
Composite compose_traced(const POPGraph& lower, const POPGraph& upper);
POPGraph compose(const POPGraph& lower, const POPGraph& upper);

/// True iff the rank-preserving edge bijection is induced by a vertex
/// bijection, i.e. the two POP-graphs agree up to renaming.
bool pop_isomorphic(const POPGraph& a, const POPGraph& b);

/// Internal vertices whose outgoing edges are all outputs, in declaration
/// order.
std::vector<std::size_t> maximal_internal_vertices(const ProgressiveGraph& g);

struct DecompositionStep {
  POPGraph remainder;  ///< lower part, E(G) minus O(v)
  POPGraph factor;     ///< elementary upper part with the single vertex v
  VertexId vertex;
};

/// Splits off maximal internal vertex `v` so that compose(remainder, factor)
/// reproduces `pop`. Fresh boundary vertices are named "t@<edge>" (below the
/// cut) and "s@<edge>" (above it). Both parts list their edges in planar
/// order. Throws std::invalid_argument if `v` is not maximal.
DecompositionStep decompose_at(const POPGraph& pop, std::size_t v);

/// decompose_at on the maximal vertex whose earliest outgoing edge comes
/// first in the planar order. Throws ValidationError(NoInternalVertex).
DecompositionStep decompose_step(const POPGraph& pop);

struct ElementaryDecomposition {
  /// Bottom-to-top: factors[0] is applied first.
  std::vector<POPGraph> factors;
  /// interfaces[k] pairs the outputs of factors[k] with the inputs of
  /// factors[k + 1], in order.
  std::vector<std::vector<std::pair<EdgeId, EdgeId>>> interfaces;
};

/// One single-vertex factor per internal vertex, or the graph itself when it
/// has none.
ElementaryDecomposition elementary_decomposition(const POPGraph& pop);

/// Left fold of compose. Throws ArityMismatch, std::invalid_argument on an
/// empty factor list.
POPGraph recompose(std::span<const POPGraph> factors);
POPGraph recompose(const ElementaryDecomposition& d);

}  // namespace ppg
