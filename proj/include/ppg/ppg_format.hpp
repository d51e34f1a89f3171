#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppg/digraph.hpp"
#include "ppg/order.hpp"
#include "ppg/st_graph.hpp"
#include "ppg/synthesis.hpp"

namespace ppg {

// Text formats.
//
//   ppg 1
//   edge <id> <src> <dst>
//   inputs <edge>...        anchor on I(G), left to right
//   outputs <edge>...       anchor on O(G)
//   in <vertex> <edge>...   polarization of internal vertex, incoming
//   out <vertex> <edge>...  outgoing
//   order <edge>...         planar order
//
// `.stg` files start with `stg 1`, name `source` and `sink`, and carry
// no inputs/outputs lines; in/out lines give the rotation at any vertex.
// `#` starts a comment. Tokens are separated by blanks.

/// A parsed `.ppg` file. Every edge reference has been resolved against
/// the edge declarations; graph-level axioms are not yet checked.
struct PpgDocument {
  Digraph graph;
  std::optional<std::vector<EdgeId>> inputs;
  std::optional<std::vector<EdgeId>> outputs;
  Polarization polarization;
  std::optional<std::vector<EdgeId>> order;

  bool has_pa() const;
};

/// Throws ParseError for malformed lines, unknown keywords, references to
/// undeclared edges or vertices, repeated lines, and in/out lines on a
/// boundary vertex.
PpgDocument parse_ppg(std::string_view text);

/// PAGraph from the anchor and polarization lines. Throws ValidationError
/// when the graph is not progressive or the data is missing or incomplete.
PAGraph to_pa(const PpgDocument& doc);

/// The planar order from the `order` line, or synthesized from the anchor
/// and polarization when there is none. When both are present they must
/// agree (ValidationError NoConsistentOrder otherwise).
POPGraph to_pop(const PpgDocument& doc);

PpgDocument document_of(const PAGraph& pa);
PpgDocument document_of(const POPGraph& pop);

/// Canonical text: header, edges in declaration order, anchor, then in/out
/// per internal vertex in vertex order, then the order line.
std::string emit_ppg(const PpgDocument& doc);
std::string emit_ppg(const PAGraph& pa);
std::string emit_ppg(const POPGraph& pop);

struct StgDocument {
  Digraph graph;
  VertexId source;
  VertexId sink;
  std::map<VertexId, Rotation> rotation;
};

StgDocument parse_stg(std::string_view text);
StGraph to_st(const StgDocument& doc);
std::string emit_stg(const StGraph& st);

enum class FileKind { Ppg, Stg };

/// Reads the header line. Throws ParseError when it is neither format.
FileKind sniff(std::string_view text);

}  // namespace ppg
