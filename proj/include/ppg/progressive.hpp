#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ppg/bit_matrix.hpp"
#include "ppg/digraph.hpp"

namespace ppg {

/// Acyclic multigraph whose sources and sinks all have degree one. Edge and
/// vertex reachability are closed once at construction; the value is
/// immutable afterwards.
///
/// Edges and vertices are addressed either by id or by their index in the
/// underlying Digraph. Index-based accessors are the fast path used by the
/// algorithms; the id overloads are for callers.
class ProgressiveGraph {
 public:
  /// Throws ValidationError with kind CycleDetected (witness: the cycle's
  /// vertices in order), BadBoundaryDegree or IsolatedVertex.
  static ProgressiveGraph validate(Digraph g);

  const Digraph& digraph() const { return g_; }
  std::size_t edge_count() const { return g_.edge_count(); }
  std::size_t vertex_count() const { return g_.vertex_count(); }

  const EdgeId& edge_id(std::size_t e) const { return g_.edges()[e].id; }
  const VertexId& vertex_id(std::size_t v) const { return g_.vertices()[v]; }
  std::size_t edge_index(const EdgeId& id) const { return g_.edge_index(id); }
  std::size_t vertex_index(const VertexId& id) const {
    return g_.vertex_index(id);
  }

  std::size_t src(std::size_t e) const { return g_.src(e); }
  std::size_t dst(std::size_t e) const { return g_.dst(e); }
  std::span<const std::size_t> in_edges(std::size_t v) const { return in_[v]; }
  std::span<const std::size_t> out_edges(std::size_t v) const {
    return out_[v];
  }

  bool is_input(std::size_t e) const { return is_input_[e]; }
  bool is_output(std::size_t e) const { return is_output_[e]; }
  bool is_internal(std::size_t v) const { return is_internal_[v]; }

  /// I(G), O(G) and V_int in declaration order.
  std::span<const std::size_t> inputs() const { return inputs_; }
  std::span<const std::size_t> outputs() const { return outputs_; }
  std::span<const std::size_t> internal_vertices() const { return internal_; }
  std::span<const std::size_t> topological_order() const { return topo_; }

  /// Strict edge order: e1 != e2 and a directed path leads from e1 to e2.
  bool reaches_strict(std::size_t e1, std::size_t e2) const {
    return edge_reach_.test(e1, e2);
  }
  bool reaches(std::size_t e1, std::size_t e2) const {
    return e1 == e2 || edge_reach_.test(e1, e2);
  }
  /// Reflexive vertex reachability.
  bool vertex_reaches(std::size_t v1, std::size_t v2) const {
    return vertex_reach_.test(v1, v2);
  }

  const BitMatrix& edge_closure() const { return edge_reach_; }

 private:
  ProgressiveGraph() = default;

  Digraph g_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<bool> is_input_;
  std::vector<bool> is_output_;
  std::vector<bool> is_internal_;
  std::vector<std::size_t> inputs_;
  std::vector<std::size_t> outputs_;
  std::vector<std::size_t> internal_;
  std::vector<std::size_t> topo_;
  BitMatrix vertex_reach_;
  BitMatrix edge_reach_;
};

inline ProgressiveGraph validate_progressive(Digraph g) {
  return ProgressiveGraph::validate(std::move(g));
}

/// Reflexive edge reachability by id. Throws ValidationError(UnknownEdge).
bool reaches(const ProgressiveGraph& g, const EdgeId& e1, const EdgeId& e2);
/// Reflexive vertex reachability by id. Throws ValidationError(UnknownVertex).
bool vertex_reaches(const ProgressiveGraph& g, const VertexId& v1,
                    const VertexId& v2);

/// Topological order of `g` (Kahn, ties broken by vertex index), or the
/// vertices of one directed cycle when `g` is cyclic.
struct TopoResult {
  std::vector<std::size_t> order;
  std::vector<std::size_t> cycle;
};
TopoResult topological_sort(const Digraph& g);

}  // namespace ppg
