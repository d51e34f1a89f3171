#include "ppg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppg/composition.hpp"
#include "ppg/error.hpp"
#include "ppg/layout.hpp"
#include "ppg/ppg_format.hpp"
#include "ppg/render.hpp"

namespace ppg::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot write '" + path.string() + "'");
  o << data;
  if (!o) throw UsageError("write failed for '" + path.string() + "'");
}

void print_ids(std::ostream& out, const std::vector<EdgeId>& ids) {
  for (std::size_t k = 0; k < ids.size(); ++k)
    out << (k ? " " : "") << ids[k];
  out << '\n';
}

bool rotation_complete(const StGraph& st) {
  const Digraph& g = st.digraph();
  std::vector<std::size_t> indeg(g.vertex_count()), outdeg(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ++outdeg[g.src(e)];
    ++indeg[g.dst(e)];
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto it = st.rotation().find(g.vertices()[v]);
    const std::size_t in = it == st.rotation().end() ? 0 : it->second.incoming.size();
    const std::size_t out = it == st.rotation().end() ? 0 : it->second.outgoing.size();
    if (in != indeg[v] || out != outdeg[v]) return false;
  }
  return true;
}

// A POP-graph from either format; an st graph needs full rotation data.
POPGraph load_pop(const std::string& path) {
  const std::string text = read_file(path);
  if (sniff(text) == FileKind::Stg)
    return synthesize_order(circ_pa(to_st(parse_stg(text))));
  return to_pop(parse_ppg(text));
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const std::string text = read_file(path);
  if (sniff(text) == FileKind::Stg) {
    const StGraph st = to_st(parse_stg(text));
    out << "st graph: " << st.digraph().vertex_count() << " vertices, "
        << st.digraph().edge_count() << " edges"
        << (rotation_complete(st) ? ", rotation complete" : "") << '\n';
    return kOk;
  }
  const PpgDocument doc = parse_ppg(text);
  const ProgressiveGraph g = ProgressiveGraph::validate(doc.graph);
  out << "progressive graph: " << g.edge_count() << " edges, "
      << g.internal_vertices().size() << " internal vertices";
  if (doc.has_pa()) {
    (void)to_pa(doc);
    out << ", anchor and polarization valid";
  }
  if (doc.order || doc.has_pa()) {
    (void)to_pop(doc);
    out << (doc.order ? ", planar order valid" : ", planar order exists");
  }
  out << '\n';
  return kOk;
}

int cmd_check_order(const std::string& path, std::ostream& out,
                    std::ostream& err) {
  const PpgDocument doc = parse_ppg(read_file(path));
  if (!doc.order) throw UsageError("'" + path + "' has no 'order' line");
  const ProgressiveGraph g = ProgressiveGraph::validate(doc.graph);
  const auto seq = edge_sequence(g, *doc.order);
  const auto violations = planar_order_violations(g, seq);
  for (const OrderViolation& v : violations) err << v.describe() << '\n';
  if (!violations.empty()) {
    err << violations.size() << " violation(s)\n";
    return kInvalid;
  }
  (void)to_pop(doc);
  out << "ok\n";
  return kOk;
}

int cmd_decompose(const std::string& path, const std::string& dir,
                  std::ostream& out) {
  const POPGraph pop = load_pop(path);
  const ElementaryDecomposition d = elementary_decomposition(pop);
  fs::create_directories(dir);

  nlohmann::ordered_json manifest;
  manifest["source"] = fs::path(path).filename().string();
  manifest["factors"] = nlohmann::ordered_json::array();
  const int digits = std::max<int>(2, static_cast<int>(
                                          std::to_string(d.factors.size()).size()));
  for (std::size_t k = 0; k < d.factors.size(); ++k) {
    const POPGraph& f = d.factors[k];
    std::ostringstream name;
    name << "factor_" << std::setw(digits) << std::setfill('0') << k + 1
         << ".ppg";
    write_file(fs::path(dir) / name.str(), emit_ppg(f));

    nlohmann::ordered_json entry;
    entry["file"] = name.str();
    const auto internal = f.graph().internal_vertices();
    entry["vertex"] = internal.empty()
                          ? nlohmann::ordered_json(nullptr)
                          : nlohmann::ordered_json(
                                f.graph().vertex_id(internal.front()).str());
    for (const char* side : {"inputs", "outputs"}) {
      auto& list = entry[side] = nlohmann::ordered_json::array();
      const auto idx = std::string(side) == "inputs" ? f.ordered_inputs()
                                                     : f.ordered_outputs();
      for (std::size_t e : idx) list.push_back(f.graph().edge_id(e).str());
    }
    manifest["factors"].push_back(std::move(entry));
  }
  manifest["interfaces"] = nlohmann::ordered_json::array();
  for (const auto& iface : d.interfaces) {
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [lo, up] : iface) pairs.push_back({lo.str(), up.str()});
    manifest["interfaces"].push_back(std::move(pairs));
  }
  write_file(fs::path(dir) / "manifest.json", manifest.dump(2) + "\n");
  out << d.factors.size() << " factor(s) written to " << dir << '\n';
  return kOk;
}

int cmd_enumerate(const std::string& path, std::size_t limit, bool count,
                  EnumerationBound bound, std::ostream& out,
                  std::ostream& err) {
  const PpgDocument doc = parse_ppg(read_file(path));
  const ProgressiveGraph g = ProgressiveGraph::validate(doc.graph);
  if (count) {
    out << count_planar_orders(g, bound) << '\n';
    return kOk;
  }
  const Enumeration en = enumerate_planar_orders(g, limit, bound);
  for (const auto& seq : en.orders) {
    for (std::size_t k = 0; k < seq.size(); ++k)
      out << (k ? " " : "") << g.edge_id(seq[k]);
    out << '\n';
  }
  if (en.truncated) err << "stopped after " << en.orders.size() << " orders\n";
  return kOk;
}

int cmd_hat(const std::string& path, std::ostream& out) {
  const PpgDocument doc = parse_ppg(read_file(path));
  if (doc.has_pa())
    out << emit_stg(hat(to_pa(doc)));
  else
    out << emit_stg(hat(ProgressiveGraph::validate(doc.graph)));
  return kOk;
}

int cmd_circ(const std::string& path, std::ostream& out) {
  const StGraph st = to_st(parse_stg(read_file(path)));
  if (rotation_complete(st)) {
    out << emit_ppg(circ_pa(st));
  } else {
    PpgDocument doc;
    doc.graph = circ(st).digraph();
    out << emit_ppg(doc);
  }
  return kOk;
}

int cmd_render(const std::string& path, const std::string& output, bool st,
               bool up, std::string format, std::ostream& out) {
  if (format.empty())
    format = fs::path(output).extension() == ".tex" ? "tikz" : "svg";
  const POPGraph pop = load_pop(path);
  const Flow flow = up ? Flow::Up : Flow::Down;
  const Drawing d = st ? layout_st(pop, flow) : layout(pop, flow);
  const std::string text = format == "tikz" ? render_tikz(d) : render_svg(d);
  if (output.empty())
    out << text;
  else
    write_file(output, text);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Planarly ordered progressive graphs", "ppg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string file, file2, output, format;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool count = false, st = false, up = false;
  EnumerationBound bound;

  auto* validate = app.add_subcommand("validate", "Check a .ppg or .stg file");
  auto* order = app.add_subcommand("order", "Print the planar order");
  auto* check = app.add_subcommand("check-order",
                                   "List planar-order violations of the order line");
  auto* compose_cmd = app.add_subcommand("compose", "Stack B on top of A");
  auto* decompose = app.add_subcommand("decompose", "Write elementary factors");
  auto* enumerate = app.add_subcommand("enumerate", "List all planar orders");
  auto* conjugate = app.add_subcommand("conjugate", "Print the conjugate order");
  auto* hat_cmd = app.add_subcommand("hat", "st completion as .stg");
  auto* circ_cmd = app.add_subcommand("circ", "Progressive truncation of an .stg");
  auto* render = app.add_subcommand("render", "Draw as SVG or TikZ");

  for (auto* sub : {validate, order, check, compose_cmd, decompose, enumerate,
                    conjugate, hat_cmd, circ_cmd, render})
    sub->add_option("file", file, "Input file")->required();
  compose_cmd->add_option("upper", file2, "Graph stacked on top")->required();
  compose_cmd->add_option("-o,--output", output, "Output file");
  decompose->add_option("-o,--output", output, "Output directory")->required();
  enumerate->add_option("--limit", limit, "Stop after N orders");
  enumerate->add_flag("--count", count, "Print only the number of orders");
  enumerate->add_option("--max-edges", bound.max_edges, "Edge bound")
      ->capture_default_str();
  enumerate->add_flag("--force", bound.force, "Ignore the edge bound");
  render->add_option("-o,--output", output, "Output file (.svg or .tex)");
  render->add_flag("--st", st, "Add the s and t apexes");
  render->add_flag("--up", up, "Edges point upwards");
  render->add_option("--format", format, "svg or tikz")
      ->check(CLI::IsMember({"svg", "tikz"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*order) {
      print_ids(out, load_pop(file).ids());
      return kOk;
    }
    if (*check) return cmd_check_order(file, out, err);
    if (*compose_cmd) {
      const std::string text = emit_ppg(compose(load_pop(file), load_pop(file2)));
      if (output.empty())
        out << text;
      else
        write_file(output, text);
      return kOk;
    }
    if (*decompose) return cmd_decompose(file, output, out);
    if (*enumerate) return cmd_enumerate(file, limit, count, bound, out, err);
    if (*conjugate) {
      const POPGraph pop = load_pop(file);
      for (const auto& [a, b] : conjugate_order(pop).pairs())
        out << pop.graph().edge_id(a) << ' ' << pop.graph().edge_id(b) << '\n';
      return kOk;
    }
    if (*hat_cmd) return cmd_hat(file, out);
    if (*circ_cmd) return cmd_circ(file, out);
    if (*render) return cmd_render(file, output, st, up, format, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PlanarOrderError& e) {
    err << "invalid: " << e.what() << '\n';
    for (const OrderViolation& v : e.violations()) err << "  " << v.describe() << '\n';
    return kInvalid;
  } catch (const ValidationError& e) {
    err << "invalid (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (!e.witness().empty()) {
      err << "  witness:";
      for (const std::string& w : e.witness()) err << ' ' << w;
      err << '\n';
    }
    return kInvalid;
  } catch (const ArityMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << " (use --force or --max-edges)\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ppg::cli
