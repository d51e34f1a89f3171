#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ppg/ids.hpp"

namespace ppg {

struct EdgeRecord {
  EdgeId id;
  VertexId src;
  VertexId dst;
};

/// Directed multigraph with textual ids. Vertices are kept in order of first
/// appearance, edges in insertion order; both orders are part of the value
/// and drive every deterministic tie-break downstream.
class Digraph {
 public:
  /// Declares a vertex; no-op when it already exists.
  std::size_t add_vertex(const VertexId& v);
  /// Throws ValidationError(DuplicateId) on a repeated edge id.
  std::size_t add_edge(const EdgeId& id, const VertexId& src,
                       const VertexId& dst);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  std::size_t src(std::size_t e) const { return src_[e]; }
  std::size_t dst(std::size_t e) const { return dst_[e]; }

  std::optional<std::size_t> find_edge(const EdgeId& id) const;
  std::optional<std::size_t> find_vertex(const VertexId& id) const;
  /// Throws ValidationError(UnknownEdge).
  std::size_t edge_index(const EdgeId& id) const;
  /// Throws ValidationError(UnknownVertex).
  std::size_t vertex_index(const VertexId& id) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> dst_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
};

/// True iff the edge bijection `edge_map` (edge i of `a` goes to edge
/// edge_map[i] of `b`) is induced by a vertex bijection preserving src/dst.
/// Vertices without incident edges are matched by count only.
bool edge_map_is_isomorphism(const Digraph& a, const Digraph& b,
                             std::span<const std::size_t> edge_map);

/// Isomorphism test with edges matched by id.
bool isomorphic_by_edge_ids(const Digraph& a, const Digraph& b);

}  // namespace ppg
