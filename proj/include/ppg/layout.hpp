#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ppg/order.hpp"
#include "ppg/synthesis.hpp"

namespace ppg {

/// Compare Coord only with Coord: under C++20 the mixed rational/integer
/// comparison operators of Boost 1.74 recurse through the rewritten
/// candidates and never return.
using Coord = boost::rational<std::int64_t>;

struct Point {
  Coord x;
  Coord y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Down: sources at y = 0, edges run towards larger y (usual convention for
/// progressive plane graphs, matching SVG's downward y axis).
/// Up: mirrored so that edges run towards smaller y (st-graph convention).
enum class Flow { Down, Up };

enum class NodeKind {
  Internal,
  Source,  ///< boundary start vertex, on the upstream box edge
  Sink,    ///< boundary end vertex, on the downstream box edge
  Apex,    ///< s or t of an st drawing, outside the box
};

struct Node {
  VertexId id;
  NodeKind kind;
  Point at;
};

struct Route {
  EdgeId edge;
  std::size_t from;  ///< index into Drawing::nodes
  std::size_t to;
  std::vector<Point> points;
};

/// Layered drawing. The box spans x in [0, width] and y in [0, height];
/// band k occupies y in [k, k + 1] before any flow flip.
struct Drawing {
  Coord width;
  Coord height;
  std::size_t bands = 0;
  Flow flow = Flow::Down;
  bool st = false;
  std::vector<Node> nodes;
  std::vector<Route> routes;
};

/// One band per elementary factor, edges at unit column spacing in planar
/// order, each spider's vertex at the mean column of its incident slots.
Drawing layout(const POPGraph& pop, Flow flow = Flow::Down);

/// layout() plus apexes s above and t below the box, fanning to the
/// input and output columns.
Drawing layout_st(const POPGraph& pop, Flow flow = Flow::Down);

struct DrawingReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

/// Exact checks: routes strictly monotone in the flow direction and attached
/// to their end nodes, boundary nodes on the box edges (apexes outside,
/// internal vertices inside), and no two routes meeting anywhere except at
/// a node they share.
DrawingReport check_drawing(const Drawing& d);

/// Polarization and anchor as realized by the drawing: incidences at each
/// internal vertex and boundary crossings sorted left to right.
struct DrawnIncidence {
  Polarization polarization;
  Anchor anchor;
};
DrawnIncidence read_back_incidence(const Drawing& d);

}  // namespace ppg
