#include "ppg/ppg_format.hpp"

#include <sstream>

#include "ppg/error.hpp"

namespace ppg {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream is{std::string(raw)};
    for (std::string tok; is >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

void expect_header(const std::vector<Line>& lines, const char* magic) {
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != magic)
    throw ParseError(h.number, std::string("expected header '") + magic +
                                   " 1'");
  if (h.tokens[1] != "1")
    throw ParseError(h.number, "unsupported format version " + h.tokens[1]);
}

// Edge declarations are collected in a first pass so that references may
// appear anywhere in the file.
Digraph read_edges(const std::vector<Line>& lines) {
  Digraph g;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != "edge") continue;
    if (l.tokens.size() != 4)
      throw ParseError(l.number, "edge needs an id, a source and a target");
    const EdgeId id{l.tokens[1]};
    if (g.find_edge(id))
      throw ParseError(l.number, "edge '" + l.tokens[1] + "' declared twice");
    g.add_edge(id, VertexId{l.tokens[2]}, VertexId{l.tokens[3]});
  }
  return g;
}

std::vector<EdgeId> edge_refs(const Digraph& g, const Line& l,
                              std::size_t first) {
  std::vector<EdgeId> out;
  for (std::size_t k = first; k < l.tokens.size(); ++k) {
    EdgeId e{l.tokens[k]};
    if (!g.find_edge(e))
      throw ParseError(l.number, "undeclared edge '" + l.tokens[k] + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::size_t> degrees(const Digraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ++deg[g.src(e)];
    ++deg[g.dst(e)];
  }
  return deg;
}

VertexId vertex_ref(const Digraph& g, const Line& l) {
  if (l.tokens.size() < 2)
    throw ParseError(l.number, "'" + l.tokens[0] + "' needs a vertex");
  VertexId v{l.tokens[1]};
  if (!g.find_vertex(v))
    throw ParseError(l.number, "unknown vertex '" + l.tokens[1] + "'");
  return v;
}

// Shared by both formats: fills rotation lists, rejecting repeats.
void read_rotation(const Digraph& g, const Line& l,
                   std::map<VertexId, Rotation>& rot,
                   std::map<std::pair<VertexId, bool>, bool>& seen) {
  const VertexId v = vertex_ref(g, l);
  const bool incoming = l.tokens[0] == "in";
  if (seen[{v, incoming}])
    throw ParseError(l.number, "repeated '" + l.tokens[0] + " " + v.str() +
                                   "' line");
  seen[{v, incoming}] = true;
  auto edges = edge_refs(g, l, 2);
  if (incoming)
    rot[v].incoming = std::move(edges);
  else
    rot[v].outgoing = std::move(edges);
}

void put_list(std::ostringstream& os, const std::string& key,
              const std::vector<EdgeId>& ids) {
  os << key;
  for (const EdgeId& e : ids) os << ' ' << e;
  os << '\n';
}

void put_edges(std::ostringstream& os, const Digraph& g) {
  for (const EdgeRecord& r : g.edges())
    os << "edge " << r.id << ' ' << r.src << ' ' << r.dst << '\n';
}

void put_rotation(std::ostringstream& os, const Digraph& g,
                  const std::map<VertexId, Rotation>& rot, const VertexId* last = nullptr) {
  std::vector<VertexId> vs = g.vertices();
  if (last) {
    // Keep the sink at the end so that emission survives a re-parse.
    std::erase(vs, *last);
    vs.push_back(*last);
  }
  for (const VertexId& v : vs) {
    auto it = rot.find(v);
    if (it == rot.end()) continue;
    if (!it->second.incoming.empty())
      put_list(os, "in " + v.str(), it->second.incoming);
    if (!it->second.outgoing.empty())
      put_list(os, "out " + v.str(), it->second.outgoing);
  }
}

}  // namespace

bool PpgDocument::has_pa() const {
  return inputs.has_value() && outputs.has_value();
}

FileKind sniff(std::string_view text) {
  const auto lines = tokenize(text);
  if (!lines.empty() && !lines.front().tokens.empty()) {
    if (lines.front().tokens[0] == "ppg") return FileKind::Ppg;
    if (lines.front().tokens[0] == "stg") return FileKind::Stg;
  }
  throw ParseError(lines.empty() ? 0 : lines.front().number,
                   "expected header 'ppg 1' or 'stg 1'");
}

PpgDocument parse_ppg(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "ppg");
  PpgDocument doc;
  doc.graph = read_edges(lines);
  const auto deg = degrees(doc.graph);
  std::map<std::pair<VertexId, bool>, bool> seen;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& key = l.tokens[0];
    if (key == "edge") continue;
    if (key == "inputs" || key == "outputs" || key == "order") {
      auto& slot = key == "inputs"    ? doc.inputs
                   : key == "outputs" ? doc.outputs
                                      : doc.order;
      if (slot) throw ParseError(l.number, "repeated '" + key + "' line");
      slot = edge_refs(doc.graph, l, 1);
    } else if (key == "in" || key == "out") {
      const VertexId v = vertex_ref(doc.graph, l);
      if (deg[doc.graph.vertex_index(v)] == 1)
        throw ParseError(l.number, "boundary vertex '" + v.str() +
                                       "' takes no polarization");
      read_rotation(doc.graph, l, doc.polarization, seen);
    } else if (key == "ppg" || key == "stg") {
      throw ParseError(l.number, "header only allowed on the first line");
    } else {
      throw ParseError(l.number, "unknown keyword '" + key + "'");
    }
  }
  return doc;
}

PAGraph to_pa(const PpgDocument& doc) {
  ProgressiveGraph g = ProgressiveGraph::validate(doc.graph);
  if (!doc.inputs || !doc.outputs)
    throw ValidationError(ValidationKind::InvalidAnchor,
                          "missing 'inputs' or 'outputs' line");
  return PAGraph::make(std::move(g), doc.polarization,
                       Anchor{*doc.inputs, *doc.outputs});
}

POPGraph to_pop(const PpgDocument& doc) {
  if (!doc.order) {
    if (!doc.has_pa())
      throw ValidationError(
          ValidationKind::InvalidAnchor,
          "neither an 'order' line nor anchor and polarization given");
    return synthesize_order(to_pa(doc));
  }
  ProgressiveGraph g = ProgressiveGraph::validate(doc.graph);
  POPGraph pop = validate_planar_order(std::move(g), std::span(*doc.order));
  if (doc.has_pa()) {
    const PAGraph given = to_pa(doc);
    const PAGraph implied = extract_pa(pop);
    if (!(given.polarization() == implied.polarization() &&
          given.anchor() == implied.anchor()))
      throw ValidationError(
          ValidationKind::NoConsistentOrder,
          "the 'order' line disagrees with the anchor or polarization");
  }
  return pop;
}

PpgDocument document_of(const PAGraph& pa) {
  PpgDocument doc;
  doc.graph = pa.graph().digraph();
  doc.inputs = pa.anchor().inputs;
  doc.outputs = pa.anchor().outputs;
  doc.polarization = pa.polarization();
  return doc;
}

PpgDocument document_of(const POPGraph& pop) {
  PpgDocument doc = document_of(extract_pa(pop));
  doc.order = pop.ids();
  return doc;
}

std::string emit_ppg(const PpgDocument& doc) {
  std::ostringstream os;
  os << "ppg 1\n";
  put_edges(os, doc.graph);
  if (doc.inputs) put_list(os, "inputs", *doc.inputs);
  if (doc.outputs) put_list(os, "outputs", *doc.outputs);
  put_rotation(os, doc.graph, doc.polarization);
  if (doc.order) put_list(os, "order", *doc.order);
  return os.str();
}

std::string emit_ppg(const PAGraph& pa) { return emit_ppg(document_of(pa)); }
std::string emit_ppg(const POPGraph& pop) { return emit_ppg(document_of(pop)); }

StgDocument parse_stg(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "stg");
  StgDocument doc;
  doc.graph = read_edges(lines);
  std::map<std::pair<VertexId, bool>, bool> seen;
  bool have_source = false, have_sink = false;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& key = l.tokens[0];
    if (key == "edge") continue;
    if (key == "source" || key == "sink") {
      bool& have = key == "source" ? have_source : have_sink;
      if (have) throw ParseError(l.number, "repeated '" + key + "' line");
      if (l.tokens.size() != 2)
        throw ParseError(l.number, "'" + key + "' takes one vertex");
      (key == "source" ? doc.source : doc.sink) = vertex_ref(doc.graph, l);
      have = true;
    } else if (key == "in" || key == "out") {
      read_rotation(doc.graph, l, doc.rotation, seen);
    } else if (key == "inputs" || key == "outputs") {
      throw ParseError(l.number, "'" + key + "' is not allowed in stg files");
    } else if (key == "ppg" || key == "stg") {
      throw ParseError(l.number, "header only allowed on the first line");
    } else {
      throw ParseError(l.number, "unknown keyword '" + key + "'");
    }
  }
  if (!have_source) throw ParseError(0, "missing 'source' line");
  if (!have_sink) throw ParseError(0, "missing 'sink' line");
  return doc;
}

StGraph to_st(const StgDocument& doc) {
  return StGraph::validate(doc.graph, doc.source, doc.sink, doc.rotation);
}

std::string emit_stg(const StGraph& st) {
  std::ostringstream os;
  os << "stg 1\n";
  put_edges(os, st.digraph());
  os << "source " << st.source() << '\n' << "sink " << st.sink() << '\n';
  put_rotation(os, st.digraph(), st.rotation(), &st.sink());
  return os.str();
}

}  // namespace ppg
