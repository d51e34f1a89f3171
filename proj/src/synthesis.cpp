#include "ppg/synthesis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ppg {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Maps `ids` to edge indices and checks they permute `expected`.
bool permutes(const ProgressiveGraph& g, const std::vector<EdgeId>& ids,
              std::span<const std::size_t> expected,
              std::vector<std::size_t>& out) {
  out.clear();
  std::vector<bool> want(g.edge_count(), false);
  for (std::size_t e : expected) want[e] = true;
  for (const EdgeId& id : ids) {
    auto e = g.digraph().find_edge(id);
    if (!e || !want[*e]) return false;
    want[*e] = false;
    out.push_back(*e);
  }
  return out.size() == expected.size();
}

std::vector<std::string> ids_of(const ProgressiveGraph& g,
                                std::initializer_list<std::size_t> edges) {
  std::vector<std::string> out;
  for (std::size_t e : edges) out.push_back(g.edge_id(e).str());
  return out;
}

}  // namespace

PAGraph PAGraph::make(ProgressiveGraph g, Polarization polarization,
                      Anchor anchor) {
  PAGraph pa(std::move(g));
  const ProgressiveGraph& pg = pa.graph_;
  const std::size_t m = pg.edge_count();

  for (const auto& [v, rot] : polarization) {
    auto vi = pg.digraph().find_vertex(v);
    if (!vi)
      throw ValidationError(ValidationKind::InvalidPolarization,
                            "polarization names unknown vertex '" + v.str() +
                                "'",
                            {v.str()});
    if (!pg.is_internal(*vi))
      throw ValidationError(ValidationKind::InvalidPolarization,
                            "boundary vertex '" + v.str() +
                                "' cannot be polarized",
                            {v.str()});
  }

  pa.out_order_.resize(pg.vertex_count());
  pa.out_rank_.assign(m, kNone);
  std::vector<std::size_t> scratch;
  for (std::size_t v : pg.internal_vertices()) {
    const VertexId& id = pg.vertex_id(v);
    auto it = polarization.find(id);
    if (it == polarization.end())
      throw ValidationError(ValidationKind::InvalidPolarization,
                            "internal vertex '" + id.str() +
                                "' has no polarization",
                            {id.str()});
    if (!permutes(pg, it->second.incoming, pg.in_edges(v), scratch))
      throw ValidationError(ValidationKind::InvalidPolarization,
                            "incoming order at '" + id.str() +
                                "' does not list exactly its incoming edges",
                            {id.str()});
    if (!permutes(pg, it->second.outgoing, pg.out_edges(v), scratch))
      throw ValidationError(ValidationKind::InvalidPolarization,
                            "outgoing order at '" + id.str() +
                                "' does not list exactly its outgoing edges",
                            {id.str()});
    pa.out_order_[v] = scratch;
    for (std::size_t k = 0; k < scratch.size(); ++k)
      pa.out_rank_[scratch[k]] = k;
  }

  if (!permutes(pg, anchor.inputs, pg.inputs(), pa.inputs_))
    throw ValidationError(ValidationKind::InvalidAnchor,
                          "input anchor does not list exactly the inputs");
  if (!permutes(pg, anchor.outputs, pg.outputs(), pa.outputs_))
    throw ValidationError(ValidationKind::InvalidAnchor,
                          "output anchor does not list exactly the outputs");
  pa.in_pos_.assign(m, kNone);
  pa.out_pos_.assign(m, kNone);
  for (std::size_t k = 0; k < pa.inputs_.size(); ++k)
    pa.in_pos_[pa.inputs_[k]] = k;
  for (std::size_t k = 0; k < pa.outputs_.size(); ++k)
    pa.out_pos_[pa.outputs_[k]] = k;

  pa.polarization_ = std::move(polarization);
  pa.anchor_ = std::move(anchor);
  return pa;
}

ComparisonCase comparison_case(const ProgressiveGraph& g, std::size_t e1,
                               std::size_t e2) {
  if (g.reaches_strict(e1, e2) || g.reaches_strict(e2, e1))
    return ComparisonCase::Oriented;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.vertex_reaches(v, g.src(e1)) && g.vertex_reaches(v, g.src(e2)))
      return ComparisonCase::Polarized;
  return ComparisonCase::Anchored;
}

Comparison compare_edges(const PAGraph& pa, std::size_t e1, std::size_t e2) {
  const ProgressiveGraph& g = pa.graph();
  if (e1 == e2) throw std::invalid_argument("compare_edges: equal edges");

  if (g.reaches_strict(e1, e2)) return Comparison::Less;
  if (g.reaches_strict(e2, e1)) return Comparison::Greater;

  // Common ancestors of both edges.
  std::vector<std::size_t> common;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.vertex_reaches(v, g.src(e1)) && g.vertex_reaches(v, g.src(e2)))
      common.push_back(v);

  if (common.empty()) {
    const Window a = input_window_in(g, pa.anchored_inputs(), e1);
    const Window b = input_window_in(g, pa.anchored_inputs(), e2);
    Comparison by_inputs = Comparison::Inconsistent;
    if (pa.input_position(a.high) < pa.input_position(b.low))
      by_inputs = Comparison::Less;
    else if (pa.input_position(b.high) < pa.input_position(a.low))
      by_inputs = Comparison::Greater;

    // Disjoint output windows order the pair too; they must agree.
    const Window c = output_window_in(g, pa.anchored_outputs(), e1);
    const Window d = output_window_in(g, pa.anchored_outputs(), e2);
    if (pa.output_position(c.high) < pa.output_position(d.low) &&
        by_inputs != Comparison::Less)
      return Comparison::Inconsistent;
    if (pa.output_position(d.high) < pa.output_position(c.low) &&
        by_inputs != Comparison::Greater)
      return Comparison::Inconsistent;
    return by_inputs;
  }

  // Maximal common ancestor, least id first.
  std::size_t top = kNone;
  for (std::size_t v : common) {
    bool maximal = true;
    for (std::size_t w : common)
      if (w != v && g.vertex_reaches(v, w)) {
        maximal = false;
        break;
      }
    if (maximal && (top == kNone || g.vertex_id(v) < g.vertex_id(top)))
      top = v;
  }

  std::size_t h1 = kNone;
  std::size_t h2 = kNone;
  for (std::size_t h : pa.polarized_out(top)) {
    if (h1 == kNone && g.reaches(h, e1)) h1 = h;
    if (h2 == kNone && g.reaches(h, e2)) h2 = h;
  }
  if (h1 == kNone || h2 == kNone || h1 == h2) return Comparison::Inconsistent;
  return pa.out_position(h1) < pa.out_position(h2) ? Comparison::Less
                                                   : Comparison::Greater;
}

Comparison compare_edges(const PAGraph& pa, const EdgeId& e1,
                         const EdgeId& e2) {
  const ProgressiveGraph& g = pa.graph();
  return compare_edges(pa, g.edge_index(e1), g.edge_index(e2));
}

PAGraph extract_pa(const POPGraph& pop) {
  const ProgressiveGraph& g = pop.graph();
  Polarization pol;
  for (std::size_t v : g.internal_vertices()) pol[g.vertex_id(v)];
  Anchor anchor;
  for (std::size_t e : pop.sequence()) {
    const EdgeId& id = g.edge_id(e);
    if (g.is_input(e))
      anchor.inputs.push_back(id);
    else
      pol[g.vertex_id(g.src(e))].outgoing.push_back(id);
    if (g.is_output(e))
      anchor.outputs.push_back(id);
    else
      pol[g.vertex_id(g.dst(e))].incoming.push_back(id);
  }
  return PAGraph::make(g, std::move(pol), std::move(anchor));
}

POPGraph synthesize_order(const PAGraph& pa) {
  const ProgressiveGraph& g = pa.graph();
  const std::size_t m = g.edge_count();
  auto fail = [](std::string message, std::vector<std::string> witness) {
    throw ValidationError(ValidationKind::NoConsistentOrder,
                          "no consistent planar order: " + message,
                          std::move(witness));
  };

  BitMatrix less(m);
  std::vector<std::string> witnesses;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      switch (compare_edges(pa, a, b)) {
        case Comparison::Less: less.set(a, b); break;
        case Comparison::Greater: less.set(b, a); break;
        case Comparison::Inconsistent:
          witnesses.push_back("Inconsistent(" + g.edge_id(a).str() + " " +
                              g.edge_id(b).str() + ")");
          break;
      }
    }
  if (!witnesses.empty())
    fail(witnesses.size() == 1 ? witnesses.front()
                               : std::to_string(witnesses.size()) +
                                     " inconsistent pairs, first " +
                                     witnesses.front(),
         witnesses);

  // A tournament is transitive iff its predecessor counts are 0..m-1.
  std::vector<std::size_t> seq(m, kNone);
  bool transitive = true;
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t before = 0;
    for (std::size_t f = 0; f < m; ++f) before += less.test(f, e);
    if (seq[before] != kNone) transitive = false;
    seq[before] = e;
  }
  if (!transitive) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (less.test(a, b) && less.test(b, c) && less.test(c, a))
            fail("comparison cycle", ids_of(g, {a, b, c}));
  }

  POPGraph pop = [&] {
    try {
      return validate_planar_order(g, seq);
    } catch (const PlanarOrderError& err) {
      fail(err.what(), err.witness());
    }
    throw std::logic_error("unreachable");
  }();

  const PAGraph back = extract_pa(pop);
  if (back.anchor() != pa.anchor())
    fail("order disagrees with the anchor", {});
  for (const auto& [v, rot] : pa.polarization())
    if (back.polarization().at(v) != rot)
      fail("order disagrees with the polarization at '" + v.str() + "'",
           {v.str()});
  return pop;
}

namespace {

// Depth-first generation of linear extensions of the strict edge order,
// pruned by P2 each time an edge is appended. Candidates are tried in
// increasing edge index, so leaves arrive in lexicographic order. The
// visitor returns false to stop the search.
class ExtensionSearch {
 public:
  explicit ExtensionSearch(const ProgressiveGraph& g)
      : g_(g), m_(g.edge_count()), missing_(m_, 0), placed_(m_, false) {
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b)
        if (g_.reaches_strict(a, b)) ++missing_[b];
    prefix_.reserve(m_);
  }

  void run(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    visit_ = &visit;
    descend();
  }

 private:
  // Appending c keeps P2 iff every earlier a with a -> c sees each edge
  // placed after it reachable from a or reaching c.
  bool appendable(std::size_t c) const {
    const std::size_t k = prefix_.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t a = prefix_[i];
      if (!g_.reaches_strict(a, c)) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::size_t b = prefix_[j];
        if (!g_.reaches_strict(a, b) && !g_.reaches_strict(b, c)) return false;
      }
    }
    return true;
  }

  bool descend() {
    if (prefix_.size() == m_) return (*visit_)(prefix_);
    for (std::size_t c = 0; c < m_; ++c) {
      if (placed_[c] || missing_[c] != 0 || !appendable(c)) continue;
      place(c);
      const bool go_on = descend();
      unplace(c);
      if (!go_on) return false;
    }
    return true;
  }

  void place(std::size_t c) {
    placed_[c] = true;
    prefix_.push_back(c);
    for (std::size_t b = 0; b < m_; ++b)
      if (g_.reaches_strict(c, b)) --missing_[b];
  }
  void unplace(std::size_t c) {
    placed_[c] = false;
    prefix_.pop_back();
    for (std::size_t b = 0; b < m_; ++b)
      if (g_.reaches_strict(c, b)) ++missing_[b];
  }

  const ProgressiveGraph& g_;
  std::size_t m_;
  std::vector<std::size_t> missing_;
  std::vector<bool> placed_;
  std::vector<std::size_t> prefix_;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
};

void check_bound(const ProgressiveGraph& g, EnumerationBound bound) {
  if (!bound.force && g.edge_count() > bound.max_edges)
    throw TooLarge(g.edge_count(), bound.max_edges);
}

}  // namespace

Enumeration enumerate_planar_orders(const ProgressiveGraph& g,
                                    std::size_t limit,
                                    EnumerationBound bound) {
  check_bound(g, bound);
  Enumeration result;
  ExtensionSearch(g).run([&](const std::vector<std::size_t>& order) {
    if (result.orders.size() == limit) {
      result.truncated = true;
      return false;
    }
    result.orders.push_back(order);
    return true;
  });
  return result;
}

std::uint64_t count_planar_orders(const ProgressiveGraph& g,
                                  EnumerationBound bound) {
  check_bound(g, bound);
  std::uint64_t count = 0;
  ExtensionSearch(g).run([&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

StGraph hat(const PAGraph& pa) {
  StGraph bare = hat(pa.graph());
  std::map<VertexId, Rotation> rotation = pa.polarization();
  rotation[kHatSource].outgoing = pa.anchor().inputs;
  rotation[kHatSink].incoming = pa.anchor().outputs;
  return StGraph::validate(bare.digraph(), bare.source(), bare.sink(),
                           std::move(rotation));
}

PAGraph circ_pa(const StGraph& st) {
  auto missing = [](const VertexId& v) {
    return ValidationError(ValidationKind::InvalidPolarization,
                           "vertex '" + v.str() + "' has no rotation data",
                           {v.str()});
  };
  const auto& rot = st.rotation();
  auto s_it = rot.find(st.source());
  auto t_it = rot.find(st.sink());
  if (s_it == rot.end()) throw missing(st.source());
  if (t_it == rot.end()) throw missing(st.sink());

  Polarization pol;
  for (const VertexId& v : st.digraph().vertices()) {
    if (v == st.source() || v == st.sink()) continue;
    auto it = rot.find(v);
    if (it == rot.end()) throw missing(v);
    pol.emplace(v, it->second);
  }
  Anchor anchor{s_it->second.outgoing, t_it->second.incoming};
  return PAGraph::make(circ(st), std::move(pol), std::move(anchor));
}

}  // namespace ppg
