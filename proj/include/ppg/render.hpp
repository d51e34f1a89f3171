#pragma once

#include <string>

#include "ppg/layout.hpp"

namespace ppg {

/// SVG 1.1 document: one <path> per edge, an arrowhead polygon at each
/// route's midpoint, a circle per internal vertex or apex, and a dashed
/// bounding box. Output is a pure function of the drawing.
std::string render_svg(const Drawing& d);

/// TikZ picture in the style of the usual string-diagram figures. Needs
/// \usetikzlibrary{decorations.markings}.
std::string render_tikz(const Drawing& d);

}  // namespace ppg
