#include "ppg/composition.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "ppg/st_graph.hpp"

namespace ppg {

namespace {

// Issues names that are unique within one graph under construction.
class NamePool {
 public:
  std::string claim(const std::string& wanted) {
    std::string name =
        fresh_name(wanted, [&](const std::string& s) { return used_.contains(s); });
    used_.insert(name);
    return name;
  }
  void reserve(const std::string& name) { used_.insert(name); }
  bool contains(const std::string& name) const { return used_.contains(name); }

 private:
  std::unordered_set<std::string> used_;
};

// Builds a POP-graph from edges given directly in planar order.
POPGraph ordered_pop(Digraph d) {
  const std::size_t m = d.edge_count();
  std::vector<std::size_t> seq(m);
  for (std::size_t e = 0; e < m; ++e) seq[e] = e;
  return validate_planar_order(ProgressiveGraph::validate(std::move(d)),
                               std::move(seq));
}

}  // namespace

bool is_elementary(const ProgressiveGraph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.is_internal(g.src(e)) && g.is_internal(g.dst(e))) return false;
  return true;
}

Composite compose_traced(const POPGraph& lower, const POPGraph& upper) {
  const ProgressiveGraph& g1 = lower.graph();
  const ProgressiveGraph& g2 = upper.graph();
  const std::vector<std::size_t> outs = lower.ordered_outputs();
  const std::vector<std::size_t> ins = upper.ordered_inputs();
  if (outs.size() != ins.size()) throw ArityMismatch(outs.size(), ins.size());
  const std::size_t n = outs.size();

  // Vertex names: surviving lower vertices first, surviving upper vertices
  // primed on collision. Sinks of lower outputs and sources of upper inputs
  // disappear in the gluing.
  NamePool vertex_names;
  for (std::size_t e = 0; e < g1.edge_count(); ++e) {
    vertex_names.reserve(g1.vertex_id(g1.src(e)).str());
    if (!g1.is_output(e)) vertex_names.reserve(g1.vertex_id(g1.dst(e)).str());
  }
  std::vector<std::string> upper_vertex(g2.vertex_count());
  for (std::size_t v = 0; v < g2.vertex_count(); ++v)
    if (!g2.in_edges(v).empty())
      upper_vertex[v] = vertex_names.claim(g2.vertex_id(v).str());

  // Edge names: kept lower edges, then glued edges, then kept upper edges.
  NamePool edge_names;
  for (std::size_t e = 0; e < g1.edge_count(); ++e)
    if (!g1.is_output(e)) edge_names.reserve(g1.edge_id(e).str());
  std::vector<std::string> glued_name(n);
  for (std::size_t k = 0; k < n; ++k)
    glued_name[k] = edge_names.claim(g1.edge_id(outs[k]).str() + "~" +
                                     g2.edge_id(ins[k]).str());
  std::vector<std::string> upper_edge(g2.edge_count());
  for (std::size_t e = 0; e < g2.edge_count(); ++e)
    if (!g2.is_input(e)) upper_edge[e] = edge_names.claim(g2.edge_id(e).str());

  // P-intervals of the upper order: non-inputs grouped by preceding input.
  std::vector<std::vector<std::size_t>> p(n);
  std::size_t inputs_seen = 0;
  for (std::size_t e : upper.sequence()) {
    if (g2.is_input(e)) {
      ++inputs_seen;
    } else {
      if (inputs_seen == 0)
        throw std::logic_error("planar order starts with a non-input edge");
      p[inputs_seen - 1].push_back(e);
    }
  }

  Digraph d;
  std::vector<GluedEdge> glued;
  auto add_upper = [&](std::size_t e) {
    d.add_edge(EdgeId{upper_edge[e]}, VertexId{upper_vertex[g2.src(e)]},
               VertexId{upper_vertex[g2.dst(e)]});
  };

  // Q1 <| {e1} <| P1 <| ... <| Qn <| {en} <| Pn
  std::size_t outputs_seen = 0;
  for (std::size_t e : lower.sequence()) {
    if (!g1.is_output(e)) {
      if (outputs_seen == n)
        throw std::logic_error("planar order ends with a non-output edge");
      d.add_edge(g1.edge_id(e), g1.vertex_id(g1.src(e)),
                 g1.vertex_id(g1.dst(e)));
      continue;
    }
    const std::size_t k = outputs_seen++;
    d.add_edge(EdgeId{glued_name[k]}, g1.vertex_id(g1.src(outs[k])),
               VertexId{upper_vertex[g2.dst(ins[k])]});
    glued.push_back({g1.edge_id(outs[k]), g2.edge_id(ins[k]),
                     EdgeId{glued_name[k]}});
    for (std::size_t e2 : p[k]) add_upper(e2);
  }

  try {
    return {ordered_pop(std::move(d)), std::move(glued)};
  } catch (const ValidationError& err) {
    throw std::logic_error(std::string("composition produced an invalid ") +
                           "POP-graph: " + err.what());
  }
}

POPGraph compose(const POPGraph& lower, const POPGraph& upper) {
  return compose_traced(lower, upper).pop;
}

bool pop_isomorphic(const POPGraph& a, const POPGraph& b) {
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> map(a.edge_count());
  for (std::size_t k = 0; k < a.edge_count(); ++k)
    map[a.sequence()[k]] = b.sequence()[k];
  return edge_map_is_isomorphism(a.graph().digraph(), b.graph().digraph(), map);
}

std::vector<std::size_t> maximal_internal_vertices(const ProgressiveGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v : g.internal_vertices()) {
    bool maximal = true;
    for (std::size_t e : g.out_edges(v)) maximal = maximal && g.is_output(e);
    if (maximal) out.push_back(v);
  }
  return out;
}

DecompositionStep decompose_at(const POPGraph& pop, std::size_t v) {
  const ProgressiveGraph& g = pop.graph();
  if (v >= g.vertex_count() || !g.is_internal(v))
    throw std::invalid_argument("decompose_at: not an internal vertex");
  std::vector<bool> out_of_v(g.edge_count(), false);
  std::vector<bool> into_v(g.edge_count(), false);
  for (std::size_t e : g.out_edges(v)) {
    if (!g.is_output(e))
      throw std::invalid_argument("decompose_at: vertex '" +
                                  g.vertex_id(v).str() + "' is not maximal");
    out_of_v[e] = true;
  }
  for (std::size_t e : g.in_edges(v)) into_v[e] = true;

  NamePool names;
  for (const VertexId& u : g.digraph().vertices()) names.reserve(u.str());

  Digraph lower;
  Digraph upper;
  for (std::size_t e : pop.sequence()) {
    const EdgeId& id = g.edge_id(e);
    const VertexId& src = g.vertex_id(g.src(e));
    const VertexId& dst = g.vertex_id(g.dst(e));
    if (!out_of_v[e]) {
      if (into_v[e])
        lower.add_edge(id, src, VertexId{names.claim("t@" + id.str())});
      else
        lower.add_edge(id, src, dst);
    }
    if (into_v[e] || (g.is_output(e) && !out_of_v[e]))
      upper.add_edge(id, VertexId{names.claim("s@" + id.str())}, dst);
    else if (out_of_v[e])
      upper.add_edge(id, src, dst);
  }

  return {ordered_pop(std::move(lower)), ordered_pop(std::move(upper)),
          g.vertex_id(v)};
}

DecompositionStep decompose_step(const POPGraph& pop) {
  const ProgressiveGraph& g = pop.graph();
  if (g.internal_vertices().empty())
    throw ValidationError(ValidationKind::NoInternalVertex,
                          "graph has no internal vertex to split off");
  std::size_t best = 0;
  std::size_t best_rank = std::numeric_limits<std::size_t>::max();
  for (std::size_t v : maximal_internal_vertices(g))
    for (std::size_t e : g.out_edges(v))
      if (pop.rank(e) < best_rank) {
        best_rank = pop.rank(e);
        best = v;
      }
  return decompose_at(pop, best);
}

ElementaryDecomposition elementary_decomposition(const POPGraph& pop) {
  ElementaryDecomposition d;
  if (pop.graph().internal_vertices().empty()) {
    d.factors.push_back(pop);
    return d;
  }
  std::vector<POPGraph> top_down;
  POPGraph rest = pop;
  while (!rest.graph().internal_vertices().empty()) {
    DecompositionStep step = decompose_step(rest);
    top_down.push_back(std::move(step.factor));
    rest = std::move(step.remainder);
  }
  d.factors.assign(std::make_move_iterator(top_down.rbegin()),
                   std::make_move_iterator(top_down.rend()));
  for (std::size_t k = 0; k + 1 < d.factors.size(); ++k) {
    const POPGraph& lo = d.factors[k];
    const POPGraph& up = d.factors[k + 1];
    const auto outs = lo.ordered_outputs();
    const auto ins = up.ordered_inputs();
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (std::size_t i = 0; i < outs.size() && i < ins.size(); ++i)
      pairs.emplace_back(lo.graph().edge_id(outs[i]),
                         up.graph().edge_id(ins[i]));
    d.interfaces.push_back(std::move(pairs));
  }
  return d;
}

POPGraph recompose(std::span<const POPGraph> factors) {
  if (factors.empty())
    throw std::invalid_argument("recompose: no factors");
  POPGraph acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k)
    acc = compose(acc, factors[k]);
  return acc;
}

POPGraph recompose(const ElementaryDecomposition& d) {
  return recompose(std::span<const POPGraph>(d.factors));
}

}  // namespace ppg
