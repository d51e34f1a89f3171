#pragma once

#include <map>
#include <vector>

#include "ppg/digraph.hpp"
#include "ppg/progressive.hpp"

namespace ppg {

/// Left-to-right order of the incoming and outgoing edges at one vertex.
struct Rotation {
  std::vector<EdgeId> incoming;
  std::vector<EdgeId> outgoing;

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// Acyclic graph with exactly one source and one sink.
class StGraph {
 public:
  /// Throws ValidationError (CycleDetected, NotSt, UnknownVertex).
  static StGraph validate(Digraph g, const VertexId& source,
                          const VertexId& sink,
                          std::map<VertexId, Rotation> rotation = {});

  const Digraph& digraph() const { return g_; }
  const VertexId& source() const { return source_; }
  const VertexId& sink() const { return sink_; }
  /// Optional per-vertex rotation data; may be empty or partial.
  const std::map<VertexId, Rotation>& rotation() const { return rotation_; }

 private:
  StGraph() = default;

  Digraph g_;
  VertexId source_;
  VertexId sink_;
  std::map<VertexId, Rotation> rotation_;
};

inline const VertexId kHatSource{"s"};
inline const VertexId kHatSink{"t"};

/// Merges the boundary sources into a fresh vertex "s" and the boundary sinks
/// into a fresh vertex "t". Edge ids and declaration order are preserved.
/// Throws ValidationError(ReservedName) when "s" or "t" is already a vertex.
StGraph hat(const ProgressiveGraph& g);

/// Removes s and t, giving each former s-edge a fresh start vertex "s@<edge>"
/// and each former t-edge a fresh end vertex "t@<edge>" (primed until unique).
ProgressiveGraph circ(const StGraph& st);

/// Isomorphism with edges matched by id, also mapping source to source and
/// sink to sink.
bool st_isomorphic_by_edge_ids(const StGraph& a, const StGraph& b);

/// Returns `base` primed ("'" appended) until `taken` rejects it no more.
template <class Taken>
std::string fresh_name(std::string base, Taken&& taken) {
  while (taken(base)) base += '\'';
  return base;
}

}  // namespace ppg
