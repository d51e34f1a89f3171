#include "ppg/digraph.hpp"

#include "ppg/error.hpp"

namespace ppg {

const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::UnknownEdge: return "UnknownEdge";
    case ValidationKind::UnknownVertex: return "UnknownVertex";
    case ValidationKind::DuplicateId: return "DuplicateId";
    case ValidationKind::CycleDetected: return "CycleDetected";
    case ValidationKind::BadBoundaryDegree: return "BadBoundaryDegree";
    case ValidationKind::IsolatedVertex: return "IsolatedVertex";
    case ValidationKind::ReservedName: return "ReservedName";
    case ValidationKind::NotSt: return "NotSt";
    case ValidationKind::NotAPermutation: return "NotAPermutation";
    case ValidationKind::PlanarOrderViolation: return "PlanarOrderViolation";
    case ValidationKind::NotConjugate: return "NotConjugate";
    case ValidationKind::InvalidPolarization: return "InvalidPolarization";
    case ValidationKind::InvalidAnchor: return "InvalidAnchor";
    case ValidationKind::NoConsistentOrder: return "NoConsistentOrder";
    case ValidationKind::NoInternalVertex: return "NoInternalVertex";
  }
  return "?";
}

std::size_t Digraph::add_vertex(const VertexId& v) {
  if (v.empty())
    throw ValidationError(ValidationKind::UnknownVertex, "empty vertex id");
  auto [it, inserted] = vertex_index_.try_emplace(v, vertices_.size());
  if (inserted) vertices_.push_back(v);
  return it->second;
}

std::size_t Digraph::add_edge(const EdgeId& id, const VertexId& src,
                              const VertexId& dst) {
  if (id.empty())
    throw ValidationError(ValidationKind::UnknownEdge, "empty edge id");
  if (edge_index_.contains(id))
    throw ValidationError(ValidationKind::DuplicateId,
                          "duplicate edge id '" + id.str() + "'", {id.str()});
  const std::size_t s = add_vertex(src);
  const std::size_t d = add_vertex(dst);
  const std::size_t e = edges_.size();
  edge_index_.emplace(id, e);
  edges_.push_back({id, src, dst});
  src_.push_back(s);
  dst_.push_back(d);
  return e;
}

std::optional<std::size_t> Digraph::find_edge(const EdgeId& id) const {
  if (auto it = edge_index_.find(id); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Digraph::find_vertex(const VertexId& id) const {
  if (auto it = vertex_index_.find(id); it != vertex_index_.end())
    return it->second;
  return std::nullopt;
}

std::size_t Digraph::edge_index(const EdgeId& id) const {
  if (auto e = find_edge(id)) return *e;
  throw ValidationError(ValidationKind::UnknownEdge,
                        "unknown edge '" + id.str() + "'", {id.str()});
}

std::size_t Digraph::vertex_index(const VertexId& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw ValidationError(ValidationKind::UnknownVertex,
                        "unknown vertex '" + id.str() + "'", {id.str()});
}

bool edge_map_is_isomorphism(const Digraph& a, const Digraph& b,
                             std::span<const std::size_t> edge_map) {
  if (a.edge_count() != b.edge_count() || a.vertex_count() != b.vertex_count())
    return false;
  if (edge_map.size() != a.edge_count()) return false;

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> fwd(a.vertex_count(), unset);
  std::vector<std::size_t> bwd(b.vertex_count(), unset);
  std::vector<bool> edge_hit(b.edge_count(), false);

  auto bind = [&](std::size_t u, std::size_t w) {
    if (fwd[u] == unset && bwd[w] == unset) {
      fwd[u] = w;
      bwd[w] = u;
      return true;
    }
    return fwd[u] == w && bwd[w] == u;
  };

  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    const std::size_t f = edge_map[e];
    if (f >= b.edge_count() || edge_hit[f]) return false;
    edge_hit[f] = true;
    if (!bind(a.src(e), b.src(f)) || !bind(a.dst(e), b.dst(f))) return false;
  }
  return true;
}

bool isomorphic_by_edge_ids(const Digraph& a, const Digraph& b) {
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> map(a.edge_count());
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    auto f = b.find_edge(a.edges()[e].id);
    if (!f) return false;
    map[e] = *f;
  }
  return edge_map_is_isomorphism(a, b, map);
}

}  // namespace ppg
