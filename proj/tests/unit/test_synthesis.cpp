#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ppg/error.hpp"
#include "ppg/synthesis.hpp"

using namespace ppg;

namespace {

std::vector<std::size_t> seq_of(const POPGraph& pop) {
  return {pop.sequence().begin(), pop.sequence().end()};
}

std::vector<std::string> gamma_labels() {
  std::vector<std::string> out;
  for (int k = 1; k <= 19; ++k) out.push_back(std::to_string(k));
  return out;
}

ValidationKind failure_kind(const PAGraph& pa) {
  try {
    synthesize_order(pa);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected synthesis to fail");
  return ValidationKind::UnknownEdge;
}

// Γ restricted to the component of D and E; edge 12 ends at a fresh sink.
Digraph gamma_de() {
  Digraph g;
  g.add_edge(EdgeId{"10"}, VertexId{"p5"}, VertexId{"D"});
  g.add_edge(EdgeId{"11"}, VertexId{"p6"}, VertexId{"D"});
  g.add_edge(EdgeId{"12"}, VertexId{"D"}, VertexId{"c"});
  g.add_edge(EdgeId{"15"}, VertexId{"D"}, VertexId{"E"});
  g.add_edge(EdgeId{"16"}, VertexId{"E"}, VertexId{"q4"});
  return g;
}

// Polarization and anchor drawn uniformly at random (not necessarily
// realizable).
PAGraph random_pa(gen::Rng& rng, const ProgressiveGraph& g) {
  Polarization pol;
  for (std::size_t v : g.internal_vertices()) {
    Rotation r;
    for (std::size_t e : g.in_edges(v)) r.incoming.push_back(g.edge_id(e));
    for (std::size_t e : g.out_edges(v)) r.outgoing.push_back(g.edge_id(e));
    std::shuffle(r.incoming.begin(), r.incoming.end(), rng);
    std::shuffle(r.outgoing.begin(), r.outgoing.end(), rng);
    pol[g.vertex_id(v)] = r;
  }
  Anchor a;
  for (std::size_t e : g.inputs()) a.inputs.push_back(g.edge_id(e));
  for (std::size_t e : g.outputs()) a.outputs.push_back(g.edge_id(e));
  std::shuffle(a.inputs.begin(), a.inputs.end(), rng);
  std::shuffle(a.outputs.begin(), a.outputs.end(), rng);
  return PAGraph::make(g, pol, a);
}

}  // namespace

TEST_CASE("compare_edges on gamma covers all three cases") {
  const PAGraph pa = fixture::gamma_pa();
  const ProgressiveGraph& g = pa.graph();
  auto idx = [&](const char* e) { return g.edge_index(EdgeId{e}); };
  CHECK(compare_edges(pa, EdgeId{"8"}, EdgeId{"13"}) == Comparison::Less);
  CHECK(comparison_case(g, idx("8"), idx("13")) == ComparisonCase::Oriented);
  CHECK(compare_edges(pa, EdgeId{"8"}, EdgeId{"19"}) == Comparison::Less);
  CHECK(comparison_case(g, idx("8"), idx("19")) == ComparisonCase::Anchored);
  CHECK(compare_edges(pa, EdgeId{"5"}, EdgeId{"6"}) == Comparison::Less);
  CHECK(comparison_case(g, idx("5"), idx("6")) == ComparisonCase::Polarized);
  CHECK(compare_edges(pa, EdgeId{"6"}, EdgeId{"5"}) == Comparison::Greater);
  CHECK(compare_edges(pa, EdgeId{"19"}, EdgeId{"8"}) == Comparison::Greater);
}

TEST_CASE("synthesis recovers the planar order of gamma") {
  const POPGraph pop = synthesize_order(fixture::gamma_pa());
  CHECK(fixture::strings(pop.ids()) == gamma_labels());
}

TEST_CASE("extract_pa on gamma reads polarization and anchor back") {
  const PAGraph pa = extract_pa(fixture::gamma_pop());
  CHECK(pa.polarization().at(VertexId{"C"}).incoming == fixture::ids({"8", "9", "12"}));
  CHECK(pa.polarization().at(VertexId{"C"}).outgoing == fixture::ids({"13", "14"}));
  CHECK(pa.anchor().inputs == fixture::ids({"1", "2", "3", "4", "10", "11", "17", "19"}));
  CHECK(pa == fixture::gamma_pa());
}

TEST_CASE("spider(2,2) with matching data") {
  const POPGraph s = gen::spider(2, 2);
  const PAGraph pa = extract_pa(s);
  CHECK(fixture::strings(synthesize_order(pa).ids()) ==
        std::vector<std::string>{"e1", "e2", "e3", "e4"});
  // Four planar orders exist; only this one fits the data.
  std::size_t fitting = 0;
  for (const auto& seq : oracle::all_planar_orders(s.graph().digraph()))
    fitting += extract_pa(gen::with_order(s.graph().digraph(), seq)) == pa;
  CHECK(fitting == 1);
}

TEST_CASE("contradictory anchors have no planar order") {
  const ProgressiveGraph g = gen::bare(2).graph();
  const PAGraph pa = PAGraph::make(g, {}, Anchor{fixture::ids({"e1", "e2"}), fixture::ids({"e2", "e1"})});
  CHECK(compare_edges(pa, EdgeId{"e1"}, EdgeId{"e2"}) == Comparison::Inconsistent);
  CHECK(failure_kind(pa) == ValidationKind::NoConsistentOrder);
}

TEST_CASE("gamma with input 1 moved after 4 has no planar order") {
  PpgDocument doc = fixture::doc("gamma.ppg");
  doc.inputs = fixture::ids({"2", "3", "4", "1", "10", "11", "17", "19"});
  CHECK(failure_kind(to_pa(doc)) == ValidationKind::NoConsistentOrder);
}

TEST_CASE("incomplete data is rejected by PAGraph::make") {
  const ProgressiveGraph g = fixture::gamma_graph();
  const PAGraph pa = fixture::gamma_pa();
  SUBCASE("vertex missing") {
    Polarization pol = pa.polarization();
    pol.erase(VertexId{"E"});
    CHECK_THROWS_AS(PAGraph::make(g, pol, pa.anchor()), ValidationError);
  }
  SUBCASE("edge not incident") {
    Polarization pol = pa.polarization();
    pol[VertexId{"E"}].incoming = fixture::ids({"16"});
    CHECK_THROWS_AS(PAGraph::make(g, pol, pa.anchor()), ValidationError);
  }
  SUBCASE("anchor not a permutation") {
    Anchor a = pa.anchor();
    a.outputs.pop_back();
    try {
      PAGraph::make(g, pa.polarization(), a);
      FAIL("accepted a short anchor");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationKind::InvalidAnchor);
    }
  }
}

TEST_CASE("planar order counts") {
  CHECK(count_planar_orders(gen::bare(2).graph()) == 2);
  CHECK(count_planar_orders(gen::spider(2, 2).graph()) == 4);
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      CHECK(count_planar_orders(gen::spider(p, q).graph()) ==
            oracle::factorial(p) * oracle::factorial(q));
  for (unsigned k = 1; k <= 5; ++k)
    CHECK(count_planar_orders(gen::bare(k).graph()) == oracle::factorial(k));
}

TEST_CASE("the D-E component of gamma has four planar orders") {
  const Digraph g = gamma_de();
  const auto all = oracle::all_planar_orders(g);
  // 10 and 11 commute; 12 sits either before 15 16 or after them.
  CHECK(all.size() == 4);
  CHECK(count_planar_orders(ProgressiveGraph::validate(g)) == all.size());
}

TEST_CASE("enumeration agrees with permutation filtering on the small suite") {
  for (const auto& n : gen::suite(6)) {
    const ProgressiveGraph g = ProgressiveGraph::validate(n.graph);
    const Enumeration en = enumerate_planar_orders(g);
    CHECK_MESSAGE(en.orders == oracle::all_planar_orders(n.graph), n.name);
    CHECK_FALSE(en.truncated);
  }
}

TEST_CASE("enumeration limit and bound") {
  const ProgressiveGraph g = gen::bare(4).graph();
  const Enumeration some = enumerate_planar_orders(g, 5);
  CHECK(some.orders.size() == 5);
  CHECK(some.truncated);
  CHECK(enumerate_planar_orders(g, 24).orders.size() == 24);
  CHECK_FALSE(enumerate_planar_orders(g, 24).truncated);

  const ProgressiveGraph big = gen::bare(11).graph();
  CHECK_THROWS_AS(count_planar_orders(big), TooLarge);
  CHECK(enumerate_planar_orders(big, 3, {10, true}).orders.size() == 3);
  CHECK_THROWS_AS(enumerate_planar_orders(gen::bare(4).graph(), 1, {3, false}), TooLarge);
}

TEST_CASE("synthesis inverts extraction on random POP-graphs") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const POPGraph pop = gen::random_pop(rng);
    const POPGraph back = synthesize_order(extract_pa(pop));
    REQUIRE(seq_of(back) == seq_of(pop));
  }
}

TEST_CASE("synthesis succeeds exactly when some planar order fits the data") {
  gen::Rng rng(23);
  const auto suite = gen::suite(6);
  std::size_t realizable = 0, not_realizable = 0;
  for (const auto& n : suite) {
    const ProgressiveGraph g = ProgressiveGraph::validate(n.graph);
    const auto orders = oracle::all_planar_orders(n.graph);
    for (int draw = 0; draw < 4; ++draw) {
      const PAGraph pa = random_pa(rng, g);
      std::vector<std::vector<std::size_t>> fits;
      for (const auto& seq : orders)
        if (extract_pa(gen::with_order(n.graph, seq)) == pa) fits.push_back(seq);
      REQUIRE(fits.size() <= 1);
      if (fits.empty()) {
        ++not_realizable;
        REQUIRE_THROWS_AS(synthesize_order(pa), ValidationError);
      } else {
        ++realizable;
        REQUIRE(seq_of(synthesize_order(pa)) == fits.front());
      }
    }
  }
  CHECK(realizable > 0);
  CHECK(not_realizable > 0);
}

TEST_CASE("hat and circ carry polarization and anchor") {
  const PAGraph pa = fixture::gamma_pa();
  const StGraph st = hat(pa);
  CHECK(st.rotation().at(kHatSource).outgoing == pa.anchor().inputs);
  CHECK(st.rotation().at(kHatSink).incoming == pa.anchor().outputs);
  CHECK(st.rotation().at(VertexId{"B"}) == pa.polarization().at(VertexId{"B"}));
  const PAGraph back = circ_pa(st);
  CHECK(back.polarization() == pa.polarization());
  CHECK(back.anchor() == pa.anchor());
  CHECK(isomorphic_by_edge_ids(back.graph().digraph(), pa.graph().digraph()));
  CHECK_THROWS_AS(circ_pa(hat(pa.graph())), ValidationError);
}
