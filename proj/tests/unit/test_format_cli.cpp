#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ppg/cli.hpp"
#include "ppg/composition.hpp"
#include "ppg/error.hpp"
#include "ppg/ppg_format.hpp"

using namespace ppg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result ppg_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_ppg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a ParseError");
  return 0;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("ppg_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("parsing the gamma fixture") {
  const PpgDocument doc = fixture::doc("gamma.ppg");
  CHECK(doc.graph.edge_count() == 19);
  CHECK(doc.has_pa());
  CHECK_FALSE(doc.order);
  const PAGraph pa = to_pa(doc);
  CHECK(pa.graph().internal_vertices().size() == 6);
  const POPGraph pop = to_pop(fixture::doc("gamma_ordered.ppg"));
  CHECK(pop.edge_count() == 19);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line(fixture::text("undeclared_edge.ppg")) == 5);
  CHECK(parse_error_line("ppg 2\n") == 1);
  CHECK(parse_error_line("# header missing\nedge a p q\n") == 2);
  CHECK(parse_error_line("ppg 1\nedge a p q\nwire b\n") == 3);
  CHECK(parse_error_line("ppg 1\nedge a p q\nedge a r s\n") == 3);
  CHECK(parse_error_line("ppg 1\nedge a p\n") == 2);
  CHECK(parse_error_line("ppg 1\nedge a p q\ninputs a\ninputs a\n") == 4);
  CHECK(parse_error_line("ppg 1\nedge a p v\nedge b v q\nin p a\n") == 4);
  CHECK(parse_error_line("ppg 1\nedge a p v\nedge b v q\nin w a\n") == 4);
  CHECK(parse_error_line("ppg 1\nedge a p v\nedge b v q\nin v a\nin v a\n") == 5);
  CHECK_THROWS_AS(parse_ppg(""), ParseError);
}

TEST_CASE("validation errors are forwarded") {
  CHECK_THROWS_AS(to_pop(fixture::doc("cyclic.ppg")), ValidationError);
  PpgDocument doc = fixture::doc("gamma.ppg");
  doc.polarization.erase(VertexId{"A"});
  CHECK_THROWS_AS(to_pa(doc), ValidationError);
  PpgDocument no_data = fixture::doc("gamma.ppg");
  no_data.inputs.reset();
  CHECK_THROWS_AS(to_pop(no_data), ValidationError);
}

TEST_CASE("an order line must agree with the polarization") {
  PpgDocument doc = fixture::doc("gamma_ordered.ppg");
  std::swap((*doc.order)[4], (*doc.order)[5]);  // 6 before 5, still planar
  try {
    to_pop(doc);
    FAIL("accepted a contradicting order");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationKind::NoConsistentOrder);
  }
  doc.polarization[VertexId{"A"}].outgoing = fixture::ids({"6", "5", "9"});
  doc.polarization[VertexId{"B"}].incoming = fixture::ids({"1", "6", "5"});
  CHECK_NOTHROW(to_pop(doc));
}

TEST_CASE("emit and parse round-trip") {
  for (const char* name : {"gamma.ppg", "gamma_ordered.ppg", "spider22.ppg", "layer_top.ppg",
                           "layer_mid.ppg", "layer_bottom.ppg", "cyclic.ppg"}) {
    const std::string once = emit_ppg(fixture::doc(name));
    const PpgDocument again = parse_ppg(once);
    CHECK_MESSAGE(emit_ppg(again) == once, name);
    CHECK(isomorphic_by_edge_ids(again.graph, fixture::doc(name).graph));
  }
  const POPGraph pop = fixture::gamma_pop();
  const POPGraph back = to_pop(parse_ppg(emit_ppg(pop)));
  CHECK(fixture::strings(back.ids()) == fixture::strings(pop.ids()));
  CHECK(extract_pa(back) == extract_pa(pop));
  CHECK(emit_ppg(pop) == emit_ppg(back));
}

TEST_CASE("random POP-graphs round-trip through text") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const POPGraph pop = gen::random_pop(rng);
    const std::string text = emit_ppg(pop);
    const POPGraph back = to_pop(parse_ppg(text));
    REQUIRE(fixture::strings(back.ids()) == fixture::strings(pop.ids()));
    REQUIRE(emit_ppg(back) == text);
  }
}

TEST_CASE("stg format") {
  const StGraph st = hat(fixture::gamma_pa());
  const std::string text = emit_stg(st);
  CHECK(text.rfind("stg 1\n", 0) == 0);
  const StGraph back = to_st(parse_stg(text));
  CHECK(st_isomorphic_by_edge_ids(back, st));
  CHECK(back.rotation() == st.rotation());
  CHECK(emit_stg(back) == text);
  CHECK(sniff(text) == FileKind::Stg);
  CHECK(sniff(fixture::text("gamma.ppg")) == FileKind::Ppg);
  CHECK_THROWS_AS(parse_stg("stg 1\nedge a s t\nsource s\n"), ParseError);
  CHECK_THROWS_AS(parse_stg("stg 1\nedge a s t\nsource s\nsink t\ninputs a\n"), ParseError);
}

TEST_CASE("cli: order and enumerate") {
  const Result r = ppg_run({"order", fixture::path("gamma.ppg")});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19\n");
  CHECK(r.err.empty());
  const Result c = ppg_run({"enumerate", fixture::path("spider22.ppg"), "--count"});
  CHECK(c.code == 0);
  CHECK(c.out == "4\n");
  const Result all = ppg_run({"enumerate", fixture::path("spider22.ppg")});
  CHECK(all.out == "a b c d\na b d c\nb a c d\nb a d c\n");
  const Result some = ppg_run({"enumerate", fixture::path("spider22.ppg"), "--limit", "1"});
  CHECK(some.out == "a b c d\n");
  CHECK_FALSE(some.err.empty());
  CHECK(ppg_run({"enumerate", fixture::path("gamma.ppg"), "--count"}).code == 3);
}

TEST_CASE("cli: exit codes") {
  CHECK(ppg_run({"compose", fixture::path("layer_mid.ppg"), fixture::path("layer_mid.ppg")}).code == 3);
  CHECK(ppg_run({"validate", fixture::path("undeclared_edge.ppg")}).code == 2);
  const Result cyc = ppg_run({"validate", fixture::path("cyclic.ppg")});
  CHECK(cyc.code == 1);
  CHECK(cyc.out.empty());
  CHECK(cyc.err.find("CycleDetected") != std::string::npos);
  CHECK(ppg_run({"validate", fixture::path("no_such_file.ppg")}).code == 3);
  CHECK(ppg_run({"frobnicate"}).code == 3);
  CHECK(ppg_run({}).code == 3);
  CHECK(ppg_run({"order"}).code == 3);
  const Result help = ppg_run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("cli: check-order reports every violation") {
  TempDir dir;
  std::string text = fixture::text("gamma.ppg");
  text += "order 1 2 3 4 5 6 7 9 8 10 11 12 13 14 15 16 17 18 19\n";
  const std::string bad = dir.file("bad.ppg", text);
  const Result r = ppg_run({"check-order", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("P2Violation(5 9 8)") != std::string::npos);
  CHECK(r.err.find("3 violation(s)") != std::string::npos);
  const Result ok = ppg_run({"check-order", fixture::path("gamma_ordered.ppg")});
  CHECK(ok.code == 0);
  CHECK(ppg_run({"check-order", fixture::path("gamma.ppg")}).code == 3);
}

TEST_CASE("cli: compose writes a file that validates") {
  TempDir dir;
  const std::string out = (dir.path() / "tm.ppg").string();
  CHECK(ppg_run({"compose", fixture::path("layer_top.ppg"), fixture::path("layer_mid.ppg"),
                 "-o", out}).code == 0);
  const Result full = ppg_run({"compose", out, fixture::path("layer_bottom.ppg")});
  REQUIRE(full.code == 0);
  const POPGraph gamma = to_pop(parse_ppg(full.out));
  CHECK(pop_isomorphic(gamma, fixture::gamma_pop()));
}

TEST_CASE("cli: decompose writes factors and a manifest") {
  TempDir dir;
  const fs::path outdir = dir.path() / "factors";
  const Result r = ppg_run({"decompose", fixture::path("gamma.ppg"), "-o", outdir.string()});
  REQUIRE(r.code == 0);
  std::ifstream mf(outdir / "manifest.json");
  const nlohmann::json manifest = nlohmann::json::parse(mf);
  REQUIRE(manifest["factors"].size() == 6);
  CHECK(manifest["interfaces"].size() == 5);
  CHECK(manifest["factors"][5]["vertex"] == "C");
  std::vector<POPGraph> factors;
  for (const auto& f : manifest["factors"]) {
    std::ifstream in(outdir / f["file"].get<std::string>());
    std::stringstream ss;
    ss << in.rdbuf();
    factors.push_back(to_pop(parse_ppg(ss.str())));
  }
  CHECK(pop_isomorphic(recompose(factors), fixture::gamma_pop()));
  CHECK(ppg_run({"decompose", fixture::path("gamma.ppg")}).code == 3);
}

TEST_CASE("cli: hat, circ, conjugate, render") {
  TempDir dir;
  const Result h = ppg_run({"hat", fixture::path("gamma.ppg")});
  REQUIRE(h.code == 0);
  const std::string stg = dir.file("gamma.stg", h.out);
  const Result c = ppg_run({"circ", stg});
  REQUIRE(c.code == 0);
  CHECK(to_pa(parse_ppg(c.out)) == fixture::gamma_pa());
  CHECK(ppg_run({"order", stg}).out == ppg_run({"order", fixture::path("gamma.ppg")}).out);

  const Result conj = ppg_run({"conjugate", fixture::path("spider22.ppg")});
  CHECK(conj.out == "a b\nc d\n");

  const std::string svg = (dir.path() / "g.svg").string();
  CHECK(ppg_run({"render", fixture::path("gamma.ppg"), "-o", svg}).code == 0);
  CHECK(fs::file_size(svg) > 0);
  const Result tex = ppg_run({"render", fixture::path("gamma.ppg"), "--st", "--up", "--format", "tikz"});
  CHECK(tex.out.find("\\begin{tikzpicture}") != std::string::npos);
  const std::string texfile = (dir.path() / "g.tex").string();
  CHECK(ppg_run({"render", fixture::path("gamma.ppg"), "-o", texfile}).code == 0);
  std::ifstream in(texfile);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("%", 0) == 0);
}

TEST_CASE("cli output is byte-deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"order", fixture::path("gamma.ppg")},
           {"render", fixture::path("gamma.ppg")},
           {"hat", fixture::path("gamma.ppg")},
           {"conjugate", fixture::path("gamma.ppg")},
           {"enumerate", fixture::path("layer_bottom.ppg"), "--limit", "20"}}) {
    const Result a = ppg_run(args);
    const Result b = ppg_run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
