#include "ppg/st_graph.hpp"

#include <set>

#include "ppg/error.hpp"

namespace ppg {

StGraph StGraph::validate(Digraph g, const VertexId& source,
                          const VertexId& sink,
                          std::map<VertexId, Rotation> rotation) {
  const std::size_t s = g.vertex_index(source);
  const std::size_t t = g.vertex_index(sink);
  if (s == t)
    throw ValidationError(ValidationKind::NotSt,
                          "source and sink coincide", {source.str()});

  TopoResult topo = topological_sort(g);
  if (!topo.cycle.empty()) {
    std::vector<std::string> witness;
    for (std::size_t v : topo.cycle) witness.push_back(g.vertices()[v].str());
    throw ValidationError(ValidationKind::CycleDetected, "cycle detected",
                          witness);
  }

  std::vector<std::size_t> indeg(g.vertex_count(), 0);
  std::vector<std::size_t> outdeg(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ++outdeg[g.src(e)];
    ++indeg[g.dst(e)];
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::string& id = g.vertices()[v].str();
    if (indeg[v] == 0 && v != s)
      throw ValidationError(ValidationKind::NotSt,
                            "vertex '" + id + "' is a second source", {id});
    if (outdeg[v] == 0 && v != t)
      throw ValidationError(ValidationKind::NotSt,
                            "vertex '" + id + "' is a second sink", {id});
  }
  if (indeg[s] != 0)
    throw ValidationError(ValidationKind::NotSt, "source has incoming edges",
                          {source.str()});
  if (outdeg[t] != 0)
    throw ValidationError(ValidationKind::NotSt, "sink has outgoing edges",
                          {sink.str()});

  for (const auto& [v, rot] : rotation) {
    const std::size_t vi = g.vertex_index(v);
    std::multiset<std::size_t> want_in;
    std::multiset<std::size_t> want_out;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.dst(e) == vi) want_in.insert(e);
      if (g.src(e) == vi) want_out.insert(e);
    }
    std::multiset<std::size_t> got_in;
    std::multiset<std::size_t> got_out;
    for (const auto& e : rot.incoming) got_in.insert(g.edge_index(e));
    for (const auto& e : rot.outgoing) got_out.insert(g.edge_index(e));
    if ((!rot.incoming.empty() && got_in != want_in) ||
        (!rot.outgoing.empty() && got_out != want_out))
      throw ValidationError(ValidationKind::InvalidPolarization,
                            "rotation at '" + v.str() +
                                "' does not list exactly its incident edges",
                            {v.str()});
  }

  StGraph st;
  st.g_ = std::move(g);
  st.source_ = source;
  st.sink_ = sink;
  st.rotation_ = std::move(rotation);
  return st;
}

StGraph hat(const ProgressiveGraph& g) {
  const Digraph& d = g.digraph();
  for (const VertexId& reserved : {kHatSource, kHatSink})
    if (d.find_vertex(reserved))
      throw ValidationError(ValidationKind::ReservedName,
                            "vertex id '" + reserved.str() +
                                "' is reserved for the st completion",
                            {reserved.str()});

  Digraph out;
  out.add_vertex(kHatSource);
  for (std::size_t v : g.internal_vertices()) out.add_vertex(g.vertex_id(v));
  out.add_vertex(kHatSink);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const VertexId& src =
        g.is_input(e) ? kHatSource : g.vertex_id(g.src(e));
    const VertexId& dst = g.is_output(e) ? kHatSink : g.vertex_id(g.dst(e));
    out.add_edge(g.edge_id(e), src, dst);
  }
  return StGraph::validate(std::move(out), kHatSource, kHatSink);
}

ProgressiveGraph circ(const StGraph& st) {
  const Digraph& d = st.digraph();
  auto taken = [&](const std::string& name) {
    return d.find_vertex(VertexId{name}).has_value();
  };
  Digraph out;
  for (const auto& edge : d.edges()) {
    VertexId src = edge.src;
    VertexId dst = edge.dst;
    if (src == st.source())
      src = VertexId{fresh_name("s@" + edge.id.str(), taken)};
    if (dst == st.sink())
      dst = VertexId{fresh_name("t@" + edge.id.str(), taken)};
    out.add_edge(edge.id, src, dst);
  }
  return ProgressiveGraph::validate(std::move(out));
}

bool st_isomorphic_by_edge_ids(const StGraph& a, const StGraph& b) {
  const Digraph& ga = a.digraph();
  const Digraph& gb = b.digraph();
  if (!isomorphic_by_edge_ids(ga, gb)) return false;
  // With a vertex bijection fixed by the edges, s and t must correspond.
  for (std::size_t e = 0; e < ga.edge_count(); ++e) {
    const std::size_t f = *gb.find_edge(ga.edges()[e].id);
    const bool sa = ga.edges()[e].src == a.source();
    const bool sb = gb.edges()[f].src == b.source();
    const bool ta = ga.edges()[e].dst == a.sink();
    const bool tb = gb.edges()[f].dst == b.sink();
    if (sa != sb || ta != tb) return false;
  }
  return true;
}

}  // namespace ppg
