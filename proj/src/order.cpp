#include "ppg/order.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ppg {

namespace {

std::string join_ids(const std::vector<EdgeId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ' ';
    out += id.str();
  }
  return out;
}

std::string summarize(const std::vector<OrderViolation>& violations) {
  std::ostringstream os;
  os << "not a planar order: " << violations.size() << " violation"
     << (violations.size() == 1 ? "" : "s");
  if (!violations.empty()) os << ", first " << violations.front().describe();
  return os.str();
}

std::vector<std::string> witness_of(const std::vector<OrderViolation>& v) {
  std::vector<std::string> w;
  for (const auto& x : v) w.push_back(x.describe());
  return w;
}

// Bit mask of word `w` covering positions in the open interval (lo, hi).
std::uint64_t open_interval_word(std::size_t w, std::size_t lo,
                                 std::size_t hi) {
  const std::size_t first = lo + 1;
  const std::size_t base = w * 64;
  if (hi <= first || base + 64 <= first || base >= hi) return 0;
  const std::size_t from = std::max(first, base) - base;
  const std::size_t to = std::min(hi, base + 64) - base;
  const std::uint64_t upper =
      to == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << to) - 1);
  const std::uint64_t lower = (std::uint64_t{1} << from) - 1;
  return upper & ~lower;
}

}  // namespace

std::string OrderViolation::describe() const {
  return std::string(axiom == Axiom::P1 ? "P1Violation(" : "P2Violation(") +
         join_ids(edges) + ")";
}

PlanarOrderError::PlanarOrderError(std::vector<OrderViolation> violations)
    : ValidationError(ValidationKind::PlanarOrderViolation,
                      summarize(violations), witness_of(violations)),
      violations_(std::move(violations)) {}

POPGraph::POPGraph(ProgressiveGraph g, std::vector<std::size_t> seq)
    : graph_(std::move(g)), seq_(std::move(seq)), rank_(seq_.size()) {
  for (std::size_t pos = 0; pos < seq_.size(); ++pos) rank_[seq_[pos]] = pos + 1;
}

std::vector<EdgeId> POPGraph::ids() const {
  std::vector<EdgeId> out;
  out.reserve(seq_.size());
  for (std::size_t e : seq_) out.push_back(graph_.edge_id(e));
  return out;
}

std::vector<std::size_t> POPGraph::ordered_inputs() const {
  std::vector<std::size_t> out;
  for (std::size_t e : seq_)
    if (graph_.is_input(e)) out.push_back(e);
  return out;
}

std::vector<std::size_t> POPGraph::ordered_outputs() const {
  std::vector<std::size_t> out;
  for (std::size_t e : seq_)
    if (graph_.is_output(e)) out.push_back(e);
  return out;
}

std::vector<std::size_t> edge_sequence(const ProgressiveGraph& g,
                                       std::span<const EdgeId> seq) {
  std::vector<std::size_t> out;
  std::vector<bool> seen(g.edge_count(), false);
  for (const EdgeId& id : seq) {
    auto e = g.digraph().find_edge(id);
    if (!e)
      throw ValidationError(ValidationKind::NotAPermutation,
                            "order names unknown edge '" + id.str() + "'",
                            {id.str()});
    if (seen[*e])
      throw ValidationError(ValidationKind::NotAPermutation,
                            "order repeats edge '" + id.str() + "'",
                            {id.str()});
    seen[*e] = true;
    out.push_back(*e);
  }
  if (out.size() != g.edge_count()) {
    std::vector<std::string> missing;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (!seen[e]) missing.push_back(g.edge_id(e).str());
    throw ValidationError(ValidationKind::NotAPermutation,
                          "order omits " + std::to_string(missing.size()) +
                              " edge(s)",
                          missing);
  }
  return out;
}

std::vector<OrderViolation> planar_order_violations(
    const ProgressiveGraph& g, std::span<const std::size_t> seq) {
  std::vector<OrderViolation> out;
  const std::size_t m = seq.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (g.reaches_strict(seq[b], seq[a]))
        out.push_back({OrderViolation::Axiom::P1,
                       {g.edge_id(seq[b]), g.edge_id(seq[a])}});

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 2; c < m; ++c) {
      if (!g.reaches_strict(seq[a], seq[c])) continue;
      for (std::size_t b = a + 1; b < c; ++b)
        if (!g.reaches_strict(seq[a], seq[b]) &&
            !g.reaches_strict(seq[b], seq[c]))
          out.push_back({OrderViolation::Axiom::P2,
                         {g.edge_id(seq[a]), g.edge_id(seq[b]),
                          g.edge_id(seq[c])}});
    }
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return x.axiom < y.axiom;
  });
  return out;
}

bool satisfies_p2_bitwise(const ProgressiveGraph& g,
                          std::span<const std::size_t> seq) {
  const std::size_t m = seq.size();
  BitMatrix succ(m);  // succ(a, p): seq[a] -> seq[p]
  BitMatrix pred(m);  // pred(c, p): seq[p] -> seq[c]
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t p = 0; p < m; ++p)
      if (g.reaches_strict(seq[a], seq[p])) {
        succ.set(a, p);
        pred.set(p, a);
      }
  const std::size_t words = succ.words_per_row();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 2; c < m; ++c) {
      if (!succ.test(a, c)) continue;
      const std::uint64_t* sa = succ.row(a);
      const std::uint64_t* pc = pred.row(c);
      for (std::size_t w = a / 64; w <= c / 64 && w < words; ++w) {
        const std::uint64_t between = open_interval_word(w, a, c);
        if (between & ~(sa[w] | pc[w])) return false;
      }
    }
  return true;
}

POPGraph validate_planar_order(ProgressiveGraph g,
                               std::vector<std::size_t> seq) {
  std::vector<bool> seen(g.edge_count(), false);
  for (std::size_t e : seq) {
    if (e >= g.edge_count() || seen[e])
      throw ValidationError(ValidationKind::NotAPermutation,
                            "order is not a permutation of the edges");
    seen[e] = true;
  }
  if (seq.size() != g.edge_count())
    throw ValidationError(ValidationKind::NotAPermutation,
                          "order is not a permutation of the edges");
  auto violations = planar_order_violations(g, seq);
  if (!violations.empty()) throw PlanarOrderError(std::move(violations));
  return POPGraph(std::move(g), std::move(seq));
}

POPGraph validate_planar_order(ProgressiveGraph g,
                               std::span<const EdgeId> seq) {
  auto indices = edge_sequence(g, seq);
  return validate_planar_order(std::move(g), std::move(indices));
}

std::vector<std::pair<std::size_t, std::size_t>> ConjugateOrder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rel_.size(); ++a)
    for (std::size_t b = 0; b < rel_.size(); ++b)
      if (rel_.test(a, b)) out.emplace_back(a, b);
  return out;
}

ConjugateOrder conjugate_order(const POPGraph& pop) {
  const ProgressiveGraph& g = pop.graph();
  ConjugateOrder conj(g.edge_count());
  for (std::size_t a = 0; a < g.edge_count(); ++a)
    for (std::size_t b = 0; b < g.edge_count(); ++b)
      if (pop.precedes(a, b) && !g.reaches_strict(a, b)) conj.insert(a, b);
  return conj;
}

ConjugacyReport check_conjugacy(const ProgressiveGraph& g,
                                const ConjugateOrder& rel) {
  ConjugacyReport report;
  const std::size_t m = g.edge_count();
  auto fail = [&](std::string w) {
    report.ok = false;
    report.witnesses.push_back(std::move(w));
  };
  auto id = [&](std::size_t e) { return g.edge_id(e).str(); };

  if (rel.size() != m) {
    fail("relation is sized for " + std::to_string(rel.size()) +
         " edges, graph has " + std::to_string(m));
    return report;
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (rel.contains(a, a)) fail("reflexive: " + id(a));
    for (std::size_t b = a + 1; b < m; ++b) {
      const int by_path = g.reaches_strict(a, b) + g.reaches_strict(b, a);
      const int by_rel = rel.contains(a, b) + rel.contains(b, a);
      if (by_path + by_rel == 0)
        fail("incomparable: " + id(a) + " " + id(b));
      else if (by_path + by_rel > 1)
        fail("comparable twice: " + id(a) + " " + id(b));
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!rel.contains(a, b)) continue;
      for (std::size_t c = 0; c < m; ++c)
        if (rel.contains(b, c) && !rel.contains(a, c))
          fail("not transitive: " + id(a) + " " + id(b) + " " + id(c));
    }
  return report;
}

POPGraph order_from_conjugate(ProgressiveGraph g, const ConjugateOrder& conj) {
  ConjugacyReport report = check_conjugacy(g, conj);
  if (!report.ok)
    throw ValidationError(ValidationKind::NotConjugate,
                          "relation is not a conjugate order: " +
                              report.witnesses.front(),
                          report.witnesses);
  // In a strict total order, an element's position is its predecessor count.
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> seq(m, m);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t before = 0;
    for (std::size_t f = 0; f < m; ++f)
      if (g.reaches_strict(f, e) || conj.contains(f, e)) ++before;
    if (seq[before] != m)
      throw ValidationError(ValidationKind::NotConjugate,
                            "union with the edge order is not total");
    seq[before] = e;
  }
  return validate_planar_order(std::move(g), std::move(seq));
}

Window input_window_in(const ProgressiveGraph& g,
                       std::span<const std::size_t> ordered_inputs,
                       std::size_t e) {
  if (g.is_input(e)) return {e, e};
  std::optional<std::size_t> low;
  std::size_t high = e;
  for (std::size_t i : ordered_inputs)
    if (g.reaches_strict(i, e)) {
      if (!low) low = i;
      high = i;
    }
  if (!low)
    throw std::logic_error("non-input edge reached by no input: " +
                           g.edge_id(e).str());
  return {*low, high};
}

Window output_window_in(const ProgressiveGraph& g,
                        std::span<const std::size_t> ordered_outputs,
                        std::size_t e) {
  if (g.is_output(e)) return {e, e};
  std::optional<std::size_t> low;
  std::size_t high = e;
  for (std::size_t o : ordered_outputs)
    if (g.reaches_strict(e, o)) {
      if (!low) low = o;
      high = o;
    }
  if (!low)
    throw std::logic_error("non-output edge reaching no output: " +
                           g.edge_id(e).str());
  return {*low, high};
}

Window input_window(const POPGraph& pop, std::size_t e) {
  return input_window_in(pop.graph(), pop.ordered_inputs(), e);
}

Window output_window(const POPGraph& pop, std::size_t e) {
  return output_window_in(pop.graph(), pop.ordered_outputs(), e);
}

std::pair<EdgeId, EdgeId> input_window(const POPGraph& pop, const EdgeId& e) {
  const ProgressiveGraph& g = pop.graph();
  Window w = input_window(pop, g.edge_index(e));
  return {g.edge_id(w.low), g.edge_id(w.high)};
}

std::pair<EdgeId, EdgeId> output_window(const POPGraph& pop, const EdgeId& e) {
  const ProgressiveGraph& g = pop.graph();
  Window w = output_window(pop, g.edge_index(e));
  return {g.edge_id(w.low), g.edge_id(w.high)};
}

IntervalPartition interval_partition(const POPGraph& pop) {
  const ProgressiveGraph& g = pop.graph();
  IntervalPartition part;
  part.inputs = pop.ordered_inputs();
  part.outputs = pop.ordered_outputs();
  part.p.resize(part.inputs.size());
  part.q.resize(part.outputs.size());

  // Walk the order once, tracking the last input seen and the next output.
  std::size_t inputs_seen = 0;
  std::size_t outputs_seen = 0;
  for (std::size_t e : pop.sequence()) {
    if (g.is_input(e))
      ++inputs_seen;
    else if (inputs_seen > 0)
      part.p[inputs_seen - 1].push_back(e);
    if (g.is_output(e))
      ++outputs_seen;
    else if (outputs_seen < part.outputs.size())
      part.q[outputs_seen].push_back(e);
  }

  for (std::size_t k = 0; k < part.p.size(); ++k)
    for (std::size_t e : part.p[k])
      if (input_window(pop, e).high != part.inputs[k])
        throw std::logic_error("interval membership disagrees with i+ at " +
                               g.edge_id(e).str());
  for (std::size_t k = 0; k < part.q.size(); ++k)
    for (std::size_t e : part.q[k])
      if (output_window(pop, e).low != part.outputs[k])
        throw std::logic_error("interval membership disagrees with o- at " +
                               g.edge_id(e).str());
  return part;
}

}  // namespace ppg
