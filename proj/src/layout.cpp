#include "ppg/layout.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ppg/composition.hpp"

namespace ppg {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string show(const Point& p) {
  std::ostringstream os;
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

enum class Contact { None, Point, Overlap };

struct SegmentContact {
  Contact kind = Contact::None;
  Point at;
};

// Exact intersection of closed segments ab and cd.
SegmentContact contact(const Point& a, const Point& b, const Point& c,
                       const Point& d) {
  const Point r{b.x - a.x, b.y - a.y};
  const Point s{d.x - c.x, d.y - c.y};
  const Coord denom = r.x * s.y - r.y * s.x;
  const Point ac{c.x - a.x, c.y - a.y};
  if (denom == Coord(0)) {
    if (ac.x * r.y - ac.y * r.x != Coord(0)) return {};
    // Collinear: parametrize c and d along ab.
    const Coord rr = r.x * r.x + r.y * r.y;
    Coord tc = (ac.x * r.x + ac.y * r.y) / rr;
    Coord td = ((d.x - a.x) * r.x + (d.y - a.y) * r.y) / rr;
    if (tc > td) std::swap(tc, td);
    const Coord lo = std::max(tc, Coord(0));
    const Coord hi = std::min(td, Coord(1));
    if (lo > hi) return {};
    if (lo < hi) return {Contact::Overlap, {}};
    return {Contact::Point, {a.x + lo * r.x, a.y + lo * r.y}};
  }
  const Coord t = (ac.x * s.y - ac.y * s.x) / denom;
  const Coord u = (ac.x * r.y - ac.y * r.x) / denom;
  if (t < Coord(0) || t > Coord(1) || u < Coord(0) || u > Coord(1)) return {};
  return {Contact::Point, {a.x + t * r.x, a.y + t * r.y}};
}

void flip(Drawing& d) {
  const Coord h = d.height;
  for (Node& n : d.nodes) n.at.y = h - n.at.y;
  for (Route& r : d.routes)
    for (Point& p : r.points) p.y = h - p.y;
  d.flow = Flow::Up;
}

// Upstream and downstream box edges in the drawing's flow.
Coord upstream_y(const Drawing& d) {
  return d.flow == Flow::Down ? Coord(0) : d.height;
}
Coord downstream_y(const Drawing& d) {
  return d.flow == Flow::Down ? d.height : Coord(0);
}
bool flows_forward(const Drawing& d, const Coord& from, const Coord& to) {
  return d.flow == Flow::Down ? from < to : from > to;
}

}  // namespace

Drawing layout(const POPGraph& pop, Flow flow) {
  const ProgressiveGraph& g = pop.graph();
  const ElementaryDecomposition dec = elementary_decomposition(pop);

  Drawing d;
  d.bands = dec.factors.size();
  d.height = Coord(static_cast<std::int64_t>(d.bands));
  std::vector<Route> routes(g.edge_count());
  std::size_t columns = 1;

  for (std::size_t j = 0; j < dec.factors.size(); ++j) {
    const POPGraph& f = dec.factors[j];
    const ProgressiveGraph& fg = f.graph();
    const auto ins = f.ordered_inputs();
    const auto outs = f.ordered_outputs();
    columns = std::max({columns, ins.size(), outs.size()});

    std::vector<Coord> col_in(fg.edge_count());
    std::vector<Coord> col_out(fg.edge_count());
    for (std::size_t k = 0; k < ins.size(); ++k)
      col_in[ins[k]] = Coord(static_cast<std::int64_t>(k + 1));
    for (std::size_t k = 0; k < outs.size(); ++k)
      col_out[outs[k]] = Coord(static_cast<std::int64_t>(k + 1));

    const Coord top(static_cast<std::int64_t>(j));
    const Coord bottom(static_cast<std::int64_t>(j + 1));

    // At most one internal vertex per factor.
    std::size_t vnode = kNone;
    Point vpos;
    for (std::size_t v : fg.internal_vertices()) {
      Coord sum(0);
      std::int64_t slots = 0;
      for (std::size_t e : fg.in_edges(v)) {
        sum += col_in[e];
        ++slots;
      }
      for (std::size_t e : fg.out_edges(v)) {
        sum += col_out[e];
        ++slots;
      }
      vpos = {sum / slots, top + Coord(1, 2)};
      vnode = d.nodes.size();
      d.nodes.push_back({fg.vertex_id(v), NodeKind::Internal, vpos});
    }

    for (std::size_t fe : f.sequence()) {
      const std::size_t e = g.edge_index(fg.edge_id(fe));
      Route& r = routes[e];
      if (fg.is_input(fe)) {
        const Point entry{col_in[fe], top};
        if (j == 0) {
          r.edge = g.edge_id(e);
          r.from = d.nodes.size();
          d.nodes.push_back(
              {g.vertex_id(g.src(e)), NodeKind::Source, entry});
          r.points = {entry};
        } else if (r.points.empty() || r.points.back() != entry) {
          throw std::logic_error("layout: interface columns disagree at " +
                                 r.edge.str());
        }
      } else {
        r.edge = g.edge_id(e);
        r.from = vnode;
        r.points = {vpos};
      }
      if (fg.is_output(fe)) {
        const Point exit{col_out[fe], bottom};
        r.points.push_back(exit);
        if (j + 1 == dec.factors.size()) {
          r.to = d.nodes.size();
          d.nodes.push_back({g.vertex_id(g.dst(e)), NodeKind::Sink, exit});
        }
      } else {
        r.points.push_back(vpos);
        r.to = vnode;
      }
    }
  }

  d.width = Coord(static_cast<std::int64_t>(columns + 1));
  d.routes = std::move(routes);
  if (flow == Flow::Up) flip(d);
  return d;
}

Drawing layout_st(const POPGraph& pop, Flow flow) {
  Drawing inner = layout(pop, Flow::Down);
  Drawing d;
  d.width = inner.width;
  d.height = inner.height;
  d.bands = inner.bands;
  d.st = true;

  std::vector<std::size_t> remap(inner.nodes.size(), kNone);
  for (std::size_t i = 0; i < inner.nodes.size(); ++i)
    if (inner.nodes[i].kind == NodeKind::Internal) {
      remap[i] = d.nodes.size();
      d.nodes.push_back(inner.nodes[i]);
    }
  const std::size_t s = d.nodes.size();
  d.nodes.push_back({kHatSource, NodeKind::Apex, {d.width / 2, Coord(-1)}});
  const std::size_t t = d.nodes.size();
  d.nodes.push_back(
      {kHatSink, NodeKind::Apex, {d.width / 2, d.height + 1}});

  for (Route r : inner.routes) {
    if (inner.nodes[r.from].kind == NodeKind::Source) {
      r.points.insert(r.points.begin(), d.nodes[s].at);
      r.from = s;
    } else {
      r.from = remap[r.from];
    }
    if (inner.nodes[r.to].kind == NodeKind::Sink) {
      r.points.push_back(d.nodes[t].at);
      r.to = t;
    } else {
      r.to = remap[r.to];
    }
    d.routes.push_back(std::move(r));
  }
  if (flow == Flow::Up) flip(d);
  return d;
}

DrawingReport check_drawing(const Drawing& d) {
  DrawingReport report;
  auto fail = [&](std::string w) {
    report.ok = false;
    report.witnesses.push_back(std::move(w));
  };
  const Coord up = upstream_y(d);
  const Coord down = downstream_y(d);

  for (const Node& n : d.nodes) {
    const std::string name = "node " + n.id.str() + " at " + show(n.at);
    switch (n.kind) {
      case NodeKind::Internal:
        if (n.at.x <= Coord(0) || n.at.x >= d.width || n.at.y <= Coord(0) ||
            n.at.y >= d.height)
          fail(name + " is not inside the box");
        break;
      case NodeKind::Source:
        if (n.at.y != up) fail(name + " is not on the upstream box edge");
        break;
      case NodeKind::Sink:
        if (n.at.y != down) fail(name + " is not on the downstream box edge");
        break;
      case NodeKind::Apex:
        if (!flows_forward(d, n.at.y, up) && !flows_forward(d, down, n.at.y))
          fail(name + " is not outside the box");
        break;
    }
  }

  for (const Route& r : d.routes) {
    if (r.points.size() < 2) {
      fail("route " + r.edge.str() + " has fewer than two points");
      continue;
    }
    if (r.from >= d.nodes.size() || r.to >= d.nodes.size() ||
        r.points.front() != d.nodes[r.from].at ||
        r.points.back() != d.nodes[r.to].at)
      fail("route " + r.edge.str() + " is detached from its end nodes");
    for (std::size_t k = 0; k + 1 < r.points.size(); ++k)
      if (!flows_forward(d, r.points[k].y, r.points[k + 1].y))
        fail("route " + r.edge.str() + " is not monotone at " +
             show(r.points[k + 1]));
  }

  // Routes may only meet at a node that ends both of them.
  for (std::size_t i = 0; i < d.routes.size(); ++i)
    for (std::size_t j = i + 1; j < d.routes.size(); ++j) {
      const Route& a = d.routes[i];
      const Route& b = d.routes[j];
      std::vector<Point> shared;
      for (std::size_t na : {a.from, a.to})
        for (std::size_t nb : {b.from, b.to})
          if (na == nb && na < d.nodes.size())
            shared.push_back(d.nodes[na].at);
      for (std::size_t p = 0; p + 1 < a.points.size(); ++p)
        for (std::size_t q = 0; q + 1 < b.points.size(); ++q) {
          const SegmentContact c = contact(a.points[p], a.points[p + 1],
                                           b.points[q], b.points[q + 1]);
          if (c.kind == Contact::None) continue;
          if (c.kind == Contact::Point &&
              std::find(shared.begin(), shared.end(), c.at) != shared.end())
            continue;
          fail("routes " + a.edge.str() + " and " + b.edge.str() +
               (c.kind == Contact::Overlap ? " overlap"
                                           : " cross at " + show(c.at)));
        }
    }

  // No route may pass through a node it does not end at.
  for (std::size_t n = 0; n < d.nodes.size(); ++n)
    for (const Route& r : d.routes) {
      if (r.from == n || r.to == n) continue;
      const Point& at = d.nodes[n].at;
      for (std::size_t p = 0; p + 1 < r.points.size(); ++p)
        if (contact(r.points[p], r.points[p + 1], at, at).kind !=
            Contact::None)
          fail("route " + r.edge.str() + " passes through node " +
               d.nodes[n].id.str());
    }
  return report;
}

DrawnIncidence read_back_incidence(const Drawing& d) {
  DrawnIncidence out;
  const Coord up = upstream_y(d);
  const Coord down = downstream_y(d);
  auto slope = [](const Point& from, const Point& to) {
    Coord dy = to.y - from.y;
    if (dy < Coord(0)) dy = -dy;
    return (to.x - from.x) / dy;
  };
  auto sorted_ids = [](std::vector<std::pair<Coord, EdgeId>> keyed) {
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<EdgeId> ids;
    for (auto& [key, id] : keyed) ids.push_back(std::move(id));
    return ids;
  };

  for (std::size_t n = 0; n < d.nodes.size(); ++n) {
    if (d.nodes[n].kind != NodeKind::Internal) continue;
    const Point& v = d.nodes[n].at;
    std::vector<std::pair<Coord, EdgeId>> in;
    std::vector<std::pair<Coord, EdgeId>> outgoing;
    for (const Route& r : d.routes) {
      if (r.to == n) in.emplace_back(slope(v, r.points[r.points.size() - 2]), r.edge);
      if (r.from == n) outgoing.emplace_back(slope(v, r.points[1]), r.edge);
    }
    Rotation& rot = out.polarization[d.nodes[n].id];
    rot.incoming = sorted_ids(std::move(in));
    rot.outgoing = sorted_ids(std::move(outgoing));
  }

  std::vector<std::pair<Coord, EdgeId>> inputs;
  std::vector<std::pair<Coord, EdgeId>> outputs;
  for (const Route& r : d.routes) {
    if (d.nodes[r.from].kind != NodeKind::Internal) {
      auto it = std::find_if(r.points.begin(), r.points.end(),
                             [&](const Point& p) { return p.y == up; });
      if (it != r.points.end()) inputs.emplace_back(it->x, r.edge);
    }
    if (d.nodes[r.to].kind != NodeKind::Internal) {
      auto it = std::find_if(r.points.rbegin(), r.points.rend(),
                             [&](const Point& p) { return p.y == down; });
      if (it != r.points.rend()) outputs.emplace_back(it->x, r.edge);
    }
  }
  out.anchor.inputs = sorted_ids(std::move(inputs));
  out.anchor.outputs = sorted_ids(std::move(outputs));
  return out;
}

}  // namespace ppg
