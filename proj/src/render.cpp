#include "ppg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ppg {

namespace {

constexpr double kScale = 40.0;
constexpr double kMargin = 30.0;
constexpr double kArrow = 6.0;
constexpr double kVertexRadius = 4.0;

double to_double(const Coord& c) {
  return static_cast<double>(c.numerator()) /
         static_cast<double>(c.denominator());
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string xml_escape(const std::string& in) {
  std::string out;
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tex_label(const std::string& in) {
  std::string out;
  for (char c : in) out += (c == '{' || c == '}') ? '?' : c;
  return "\\detokenize{" + out + "}";
}

struct Extent {
  Coord xmin, xmax, ymin, ymax;
};

Extent extent(const Drawing& d) {
  Extent e{Coord(0), d.width, Coord(0), d.height};
  for (const Node& n : d.nodes) {
    e.ymin = std::min(e.ymin, n.at.y);
    e.ymax = std::max(e.ymax, n.at.y);
    e.xmin = std::min(e.xmin, n.at.x);
    e.xmax = std::max(e.xmax, n.at.x);
  }
  return e;
}

// Point halfway along the route's flow extent, and the direction of the
// segment it lies on.
struct Midpoint {
  double x, y, dx, dy;
};

Midpoint route_midpoint(const Route& r) {
  const double y0 = to_double(r.points.front().y);
  const double y1 = to_double(r.points.back().y);
  const double target = (y0 + y1) / 2;
  for (std::size_t k = 0; k + 1 < r.points.size(); ++k) {
    const double ay = to_double(r.points[k].y);
    const double by = to_double(r.points[k + 1].y);
    if ((target - ay) * (target - by) > 0) continue;
    const double ax = to_double(r.points[k].x);
    const double bx = to_double(r.points[k + 1].x);
    const double t = by == ay ? 0.5 : (target - ay) / (by - ay);
    return {ax + t * (bx - ax), target, bx - ax, by - ay};
  }
  const Point& a = r.points.front();
  const Point& b = r.points.back();
  return {to_double(a.x), to_double(a.y), to_double(b.x - a.x),
          to_double(b.y - a.y)};
}

}  // namespace

std::string render_svg(const Drawing& d) {
  const Extent ext = extent(d);
  auto px = [&](const Coord& x) { return kMargin + kScale * to_double(x - ext.xmin); };
  auto py = [&](const Coord& y) { return kMargin + kScale * to_double(y - ext.ymin); };
  const double width = 2 * kMargin + kScale * to_double(ext.xmax - ext.xmin);
  const double height = 2 * kMargin + kScale * to_double(ext.ymax - ext.ymin);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
     << num(width) << ' ' << num(height) << "\">\n";
  os << "  <rect x=\"" << num(px(Coord(0))) << "\" y=\"" << num(py(Coord(0)))
     << "\" width=\"" << num(kScale * to_double(d.width)) << "\" height=\""
     << num(kScale * to_double(d.height))
     << "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";

  os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Route& r : d.routes) {
    os << "    <path d=\"";
    for (std::size_t k = 0; k < r.points.size(); ++k)
      os << (k == 0 ? "M" : " L") << num(px(r.points[k].x)) << ' '
         << num(py(r.points[k].y));
    os << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <g fill=\"black\" stroke=\"none\">\n";
  for (const Route& r : d.routes) {
    const Midpoint m = route_midpoint(r);
    const double len = std::hypot(m.dx, m.dy);
    const double ux = len > 0 ? m.dx / len : 0;
    const double uy = len > 0 ? m.dy / len : 1;
    const double cx = kMargin + kScale * (m.x - to_double(ext.xmin));
    const double cy = kMargin + kScale * (m.y - to_double(ext.ymin));
    const double tipx = cx + ux * kArrow;
    const double tipy = cy + uy * kArrow;
    const double lx = cx - ux * kArrow / 2 - uy * kArrow / 2;
    const double ly = cy - uy * kArrow / 2 + ux * kArrow / 2;
    const double rx = cx - ux * kArrow / 2 + uy * kArrow / 2;
    const double ry = cy - uy * kArrow / 2 - ux * kArrow / 2;
    os << "    <polygon points=\"" << num(tipx) << ',' << num(tipy) << ' '
       << num(lx) << ',' << num(ly) << ' ' << num(rx) << ',' << num(ry)
       << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <g fill=\"black\">\n";
  for (const Node& n : d.nodes) {
    if (n.kind != NodeKind::Internal && n.kind != NodeKind::Apex) continue;
    os << "    <circle cx=\"" << num(px(n.at.x)) << "\" cy=\""
       << num(py(n.at.y)) << "\" r=\"" << num(kVertexRadius) << "\"><title>"
       << xml_escape(n.id.str()) << "</title></circle>\n";
  }
  os << "  </g>\n";

  os << "  <g font-family=\"sans-serif\" font-size=\"10\" fill=\"#333333\">\n";
  for (const Route& r : d.routes) {
    const Midpoint m = route_midpoint(r);
    os << "    <text x=\""
       << num(kMargin + kScale * (m.x - to_double(ext.xmin)) + 5) << "\" y=\""
       << num(kMargin + kScale * (m.y - to_double(ext.ymin)) - 3) << "\">"
       << xml_escape(r.edge.str()) << "</text>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string render_tikz(const Drawing& d) {
  // TikZ's y axis points up; negate to keep the on-page orientation.
  auto pt = [](const Point& p) {
    return "(" + num(to_double(p.x)) + "," + num(-to_double(p.y)) + ")";
  };
  std::ostringstream os;
  os << "% requires \\usetikzlibrary{decorations.markings}\n"
     << "\\begin{tikzpicture}[scale=0.6]\n";
  os << "\\draw [dashed] " << pt({Coord(0), Coord(0)}) << " rectangle "
     << pt({d.width, d.height}) << ";\n";
  for (const Route& r : d.routes) {
    os << "\\draw [postaction={decorate, decoration={markings, mark=at "
          "position .5 with {\\arrow[black]{stealth}}}}] ";
    for (std::size_t k = 0; k < r.points.size(); ++k)
      os << (k == 0 ? "" : " -- ") << pt(r.points[k]);
    os << ";\n";
    const Midpoint m = route_midpoint(r);
    os << "\\node [scale=0.7][right] at (" << num(m.x) << "," << num(-m.y)
       << ") {" << tex_label(r.edge.str()) << "};\n";
  }
  for (const Node& n : d.nodes) {
    if (n.kind != NodeKind::Internal && n.kind != NodeKind::Apex) continue;
    os << "\\draw[fill] " << pt(n.at) << " circle [radius=0.11];\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace ppg
