#include "ppg/progressive.hpp"

#include <algorithm>
#include <queue>

#include "ppg/error.hpp"

namespace ppg {

TopoResult topological_sort(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ++indeg[g.dst(e)];
    out[g.src(e)].push_back(e);
  }

  TopoResult result;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>
      ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    result.order.push_back(v);
    for (std::size_t e : out[v])
      if (--indeg[g.dst(e)] == 0) ready.push(g.dst(e));
  }
  if (result.order.size() == n) return result;

  // Every leftover vertex keeps an in-edge from another leftover vertex, so
  // walking those in-edges backwards must revisit a vertex.
  std::vector<std::size_t> pred(n, n);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (indeg[g.dst(e)] > 0 && indeg[g.src(e)] > 0 && pred[g.dst(e)] == n)
      pred[g.dst(e)] = g.src(e);
  std::size_t v = 0;
  while (indeg[v] == 0) ++v;
  std::vector<std::size_t> seen(n, n);
  std::vector<std::size_t> walk;
  while (seen[v] == n) {
    seen[v] = walk.size();
    walk.push_back(v);
    v = pred[v];
  }
  result.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(seen[v]),
                      walk.end());
  std::reverse(result.cycle.begin(), result.cycle.end());
  result.order.clear();
  return result;
}

ProgressiveGraph ProgressiveGraph::validate(Digraph g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  ProgressiveGraph pg;
  pg.in_.resize(n);
  pg.out_.resize(n);
  for (std::size_t e = 0; e < m; ++e) {
    pg.out_[g.src(e)].push_back(e);
    pg.in_[g.dst(e)].push_back(e);
  }

  TopoResult topo = topological_sort(g);
  if (!topo.cycle.empty()) {
    std::vector<std::string> witness;
    std::string text;
    for (std::size_t v : topo.cycle) {
      witness.push_back(g.vertices()[v].str());
      text += g.vertices()[v].str() + " -> ";
    }
    text += g.vertices()[topo.cycle.front()].str();
    throw ValidationError(ValidationKind::CycleDetected,
                          "cycle detected: " + text, witness);
  }

  pg.is_internal_.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t indeg = pg.in_[v].size();
    const std::size_t outdeg = pg.out_[v].size();
    const std::string& id = g.vertices()[v].str();
    if (indeg + outdeg == 0)
      throw ValidationError(ValidationKind::IsolatedVertex,
                            "isolated vertex '" + id + "'", {id});
    if ((indeg == 0 || outdeg == 0) && indeg + outdeg != 1)
      throw ValidationError(
          ValidationKind::BadBoundaryDegree,
          "vertex '" + id + "' is a " + (indeg == 0 ? "source" : "sink") +
              " of degree " + std::to_string(indeg + outdeg),
          {id});
    pg.is_internal_[v] = indeg + outdeg > 1;
    if (pg.is_internal_[v]) pg.internal_.push_back(v);
  }

  pg.is_input_.assign(m, false);
  pg.is_output_.assign(m, false);
  for (std::size_t e = 0; e < m; ++e) {
    pg.is_input_[e] = !pg.is_internal_[g.src(e)];
    pg.is_output_[e] = !pg.is_internal_[g.dst(e)];
    if (pg.is_input_[e]) pg.inputs_.push_back(e);
    if (pg.is_output_[e]) pg.outputs_.push_back(e);
  }

  pg.vertex_reach_ = BitMatrix(n);
  for (auto it = topo.order.rbegin(); it != topo.order.rend(); ++it) {
    const std::size_t v = *it;
    pg.vertex_reach_.set(v, v);
    for (std::size_t e : pg.out_[v]) pg.vertex_reach_.or_row(v, g.dst(e));
  }
  pg.edge_reach_ = BitMatrix(m);
  for (std::size_t e1 = 0; e1 < m; ++e1)
    for (std::size_t e2 = 0; e2 < m; ++e2)
      if (e1 != e2 && pg.vertex_reach_.test(g.dst(e1), g.src(e2)))
        pg.edge_reach_.set(e1, e2);

  pg.topo_ = std::move(topo.order);
  pg.g_ = std::move(g);
  return pg;
}

bool reaches(const ProgressiveGraph& g, const EdgeId& e1, const EdgeId& e2) {
  return g.reaches(g.edge_index(e1), g.edge_index(e2));
}

bool vertex_reaches(const ProgressiveGraph& g, const VertexId& v1,
                    const VertexId& v2) {
  return g.vertex_reaches(g.vertex_index(v1), g.vertex_index(v2));
}

}  // namespace ppg
