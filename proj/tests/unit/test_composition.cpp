#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ppg/composition.hpp"
#include "ppg/error.hpp"

using namespace ppg;

namespace {

std::vector<std::size_t> seq_of(const POPGraph& pop) {
  return {pop.sequence().begin(), pop.sequence().end()};
}

bool same_shape(const POPGraph& a, const POPGraph& b) {
  return oracle::signature(a.graph().digraph(), seq_of(a)) ==
         oracle::signature(b.graph().digraph(), seq_of(b));
}

// Shuffle order written out from its definition: Q_k are the lower edges
// strictly between outputs k-1 and k, P_k the upper edges strictly between
// inputs k and k+1. Glued edges appear as "<lower>~<upper>".
std::vector<std::string> shuffle_oracle(const POPGraph& lower, const POPGraph& upper) {
  const auto& g1 = lower.graph();
  const auto& g2 = upper.graph();
  std::vector<std::size_t> out_pos, in_pos;
  const auto s1 = seq_of(lower), s2 = seq_of(upper);
  for (std::size_t k = 0; k < s1.size(); ++k)
    if (g1.is_output(s1[k])) out_pos.push_back(k);
  for (std::size_t k = 0; k < s2.size(); ++k)
    if (g2.is_input(s2[k])) in_pos.push_back(k);
  REQUIRE(out_pos.size() == in_pos.size());
  std::vector<std::string> out;
  for (std::size_t k = 0; k < out_pos.size(); ++k) {
    const std::size_t q_from = k == 0 ? 0 : out_pos[k - 1] + 1;
    for (std::size_t j = q_from; j < out_pos[k]; ++j) out.push_back(g1.edge_id(s1[j]).str());
    out.push_back(g1.edge_id(s1[out_pos[k]]).str() + "~" + g2.edge_id(s2[in_pos[k]]).str());
    const std::size_t p_to = k + 1 < in_pos.size() ? in_pos[k + 1] : s2.size();
    for (std::size_t j = in_pos[k] + 1; j < p_to; ++j) out.push_back(g2.edge_id(s2[j]).str());
  }
  return out;
}

// Random planar order of the same graph, found by adjacent swaps that keep
// the axioms; returns `pop` itself when no swap is admissible.
POPGraph nudge(gen::Rng& rng, const POPGraph& pop) {
  auto seq = seq_of(pop);
  const auto reach = oracle::edge_reach(pop.graph().digraph());
  std::vector<std::size_t> spots(seq.size() > 1 ? seq.size() - 1 : 0);
  for (std::size_t k = 0; k < spots.size(); ++k) spots[k] = k;
  std::shuffle(spots.begin(), spots.end(), rng);
  for (std::size_t k : spots) {
    std::swap(seq[k], seq[k + 1]);
    if (oracle::is_planar_order(reach, seq)) return gen::with_order(pop.graph().digraph(), seq);
    std::swap(seq[k], seq[k + 1]);
  }
  return pop;
}

}  // namespace

TEST_CASE("elementary graphs") {
  CHECK(is_elementary(fixture::to_pop_file("layer_top.ppg").graph()));
  CHECK(is_elementary(fixture::to_pop_file("layer_mid.ppg").graph()));
  CHECK_FALSE(is_elementary(fixture::gamma_graph()));
  CHECK(is_elementary(gen::bare(3).graph()));
}

TEST_CASE("composition checks arity") {
  try {
    compose(gen::spider(1, 2), gen::bare(3));
    FAIL("accepted mismatched arity");
  } catch (const ArityMismatch& e) {
    CHECK(e.lower_outputs() == 2);
    CHECK(e.upper_inputs() == 3);
  }
}

TEST_CASE("the three layers compose to gamma") {
  const POPGraph top = fixture::to_pop_file("layer_top.ppg");
  const POPGraph mid = fixture::to_pop_file("layer_mid.ppg");
  const POPGraph bottom = fixture::to_pop_file("layer_bottom.ppg");
  const POPGraph gamma = fixture::gamma_pop();
  const POPGraph stacked = compose(compose(top, mid), bottom);
  CHECK(pop_isomorphic(stacked, gamma));
  CHECK(same_shape(stacked, gamma));
  const std::vector<POPGraph> layers{top, mid, bottom};
  CHECK(pop_isomorphic(recompose(layers), gamma));
}

TEST_CASE("a spider under two bare edges") {
  const POPGraph lower = gen::spider(1, 2, "x.");
  const POPGraph upper = gen::bare(2, "y.");
  const Composite c = compose_traced(lower, upper);
  CHECK(fixture::strings(c.pop.ids()) ==
        std::vector<std::string>{"x.e1", "x.e2~y.e1", "x.e3~y.e2"});
  REQUIRE(c.glued.size() == 2);
  CHECK(c.glued[0].lower == EdgeId{"x.e2"});
  CHECK(c.glued[0].upper == EdgeId{"y.e1"});
  CHECK(pop_isomorphic(c.pop, gen::spider(1, 2)));
}

TEST_CASE("colliding names in the upper graph are primed") {
  const POPGraph lower = gen::spider(1, 1);
  const POPGraph upper = gen::spider(1, 1);
  const POPGraph both = compose(lower, upper);
  // Lower e2 became the glued edge, so upper e2 keeps its name; the
  // vertex v1 exists on both sides.
  CHECK(fixture::strings(both.ids()) == std::vector<std::string>{"e1", "e2~e1", "e2"});
  CHECK(both.graph().digraph().find_vertex(VertexId{"v1'"}));
  Digraph up;
  up.add_edge(EdgeId{"x"}, VertexId{"p"}, VertexId{"u"});
  up.add_edge(EdgeId{"e1"}, VertexId{"u"}, VertexId{"q"});
  const POPGraph clash = compose(lower, gen::in_declared_order(up));
  CHECK(fixture::strings(clash.ids()) == std::vector<std::string>{"e1", "e2~x", "e1'"});
}

TEST_CASE("composition follows the shuffle definition") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const POPGraph lower = gen::random_pop(rng, "a.");
    const POPGraph upper = gen::random_pop(rng, lower.graph().outputs().size(),
                                           gen::uniform(rng, 1, 3), "b.");
    const POPGraph c = compose(lower, upper);
    REQUIRE(fixture::strings(c.ids()) == shuffle_oracle(lower, upper));
    REQUIRE(oracle::is_planar_order(c.graph().digraph(), seq_of(c)));
    REQUIRE(c.graph().inputs().size() == lower.graph().inputs().size());
    REQUIRE(c.graph().outputs().size() == upper.graph().outputs().size());
  }
}

TEST_CASE("composition is associative") {
  gen::Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const POPGraph a = gen::random_pop(rng);
    const POPGraph b = gen::random_pop(rng, a.graph().outputs().size(), 2);
    const POPGraph c = gen::random_pop(rng, b.graph().outputs().size(), 2);
    const POPGraph left = compose(compose(a, b), c);
    const POPGraph right = compose(a, compose(b, c));
    REQUIRE(pop_isomorphic(left, right));
    REQUIRE(same_shape(left, right));
  }
}

TEST_CASE("cancellation against a single-vertex factor") {
  gen::Rng rng(6);
  int distinct = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const POPGraph x = gen::random_pop(rng);
    const std::size_t n = x.graph().outputs().size();
    const POPGraph h = gen::random_layer(rng, n, "h.", true);
    POPGraph y = nudge(rng, x);
    for (int tries = 0; trial % 2 == 0 && tries < 50; ++tries) {
      POPGraph other = gen::random_pop(rng, x.graph().inputs().size(), gen::uniform(rng, 1, 3));
      if (other.graph().outputs().size() != n) continue;
      y = std::move(other);
      break;
    }
    const bool xy = same_shape(x, y);
    distinct += !xy;
    REQUIRE(pop_isomorphic(compose(x, h), compose(y, h)) == xy);
    REQUIRE(pop_isomorphic(x, y) == xy);
  }
  CHECK(distinct > 50);
}

TEST_CASE("pop isomorphism") {
  const POPGraph gamma = fixture::gamma_pop();
  Digraph renamed;
  for (const auto& r : gamma.graph().digraph().edges())
    renamed.add_edge(EdgeId{"r" + r.id.str()}, VertexId{"w" + r.src.str()},
                     VertexId{"w" + r.dst.str()});
  std::vector<std::size_t> seq = seq_of(gamma);
  CHECK(pop_isomorphic(gamma, gen::with_order(renamed, seq)));
  std::swap(seq[4], seq[5]);  // 6 before 5: still planar, different order
  const POPGraph swapped = gen::with_order(gamma.graph().digraph(), seq);
  CHECK(pop_isomorphic(gamma, swapped));  // 5 and 6 are parallel
  std::swap(seq[4], seq[5]);
  std::swap(seq[9], seq[10]);  // 11 before 10
  CHECK(pop_isomorphic(gamma, gen::with_order(gamma.graph().digraph(), seq)));
  // Bare wires are identities on either side.
  CHECK(pop_isomorphic(gamma, compose(gen::bare(8, "w."), gamma)));
  CHECK(pop_isomorphic(gamma, compose(gamma, gen::bare(6, "w."))));
  CHECK_FALSE(pop_isomorphic(gen::spider(2, 1), gen::spider(1, 2)));
}

TEST_CASE("decomposition step on gamma peels C") {
  const POPGraph gamma = fixture::gamma_pop();
  const DecompositionStep step = decompose_step(gamma);
  CHECK(step.vertex == VertexId{"C"});
  CHECK(fixture::strings(step.factor.ids()) ==
        std::vector<std::string>{"7", "8", "9", "12", "13", "14", "16", "18", "19"});
  CHECK(is_elementary(step.factor.graph()));
  CHECK(step.factor.graph().internal_vertices().size() == 1);
  CHECK(step.remainder.edge_count() == 17);
  CHECK(step.remainder.graph().internal_vertices().size() == 5);
  CHECK(pop_isomorphic(compose(step.remainder, step.factor), gamma));
}

TEST_CASE("decomposition preconditions") {
  const POPGraph gamma = fixture::gamma_pop();
  CHECK_THROWS_AS(decompose_at(gamma, gamma.graph().vertex_index(VertexId{"A"})),
                  std::invalid_argument);
  try {
    decompose_step(gen::bare(3));
    FAIL("peeled a graph without internal vertices");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationKind::NoInternalVertex);
  }
  const ElementaryDecomposition d = elementary_decomposition(gen::bare(3));
  REQUIRE(d.factors.size() == 1);
  CHECK(pop_isomorphic(d.factors[0], gen::bare(3)));
  CHECK(d.interfaces.empty());
}

TEST_CASE("elementary decomposition of gamma") {
  const POPGraph gamma = fixture::gamma_pop();
  const ElementaryDecomposition d = elementary_decomposition(gamma);
  REQUIRE(d.factors.size() == 6);
  REQUIRE(d.interfaces.size() == 5);
  for (std::size_t k = 0; k < d.factors.size(); ++k) {
    CHECK(is_elementary(d.factors[k].graph()));
    CHECK(d.factors[k].graph().internal_vertices().size() == 1);
    if (k + 1 < d.factors.size())
      CHECK(d.interfaces[k].size() == d.factors[k].graph().outputs().size());
  }
  CHECK(pop_isomorphic(recompose(d), gamma));
}

TEST_CASE("decomposition round trip and peeling-order independence") {
  gen::Rng rng(9);
  for (int trial = 0; trial < 120; ++trial) {
    const POPGraph pop = gen::random_pop(rng);
    const ElementaryDecomposition d = elementary_decomposition(pop);
    const std::size_t internal = pop.graph().internal_vertices().size();
    REQUIRE(d.factors.size() == std::max<std::size_t>(internal, 1));
    REQUIRE(same_shape(recompose(d), pop));
    for (std::size_t v : maximal_internal_vertices(pop.graph())) {
      const DecompositionStep s = decompose_at(pop, v);
      REQUIRE(same_shape(compose(s.remainder, s.factor), pop));
      // The peeled vertex's outputs are contiguous in the order.
      std::vector<std::size_t> ranks;
      for (std::size_t e : pop.graph().out_edges(v)) ranks.push_back(pop.rank(e));
      std::sort(ranks.begin(), ranks.end());
      REQUIRE(ranks.back() - ranks.front() + 1 == ranks.size());
    }
  }
}
