// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cvxpt/convexity.hpp"
#include "cvxpt/decompose.hpp"
#include "cvxpt/middle.hpp"

namespace cvxpt {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0 ? 0.0 : v);
  return buf;
}

struct Box {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

// SVG's y axis points down; flip it.
std::string points_attr(const Body& b) {
  std::string s;
  for (const auto& v : b.vertices()) {
    if (!s.empty()) s += ' ';
    s += num(to_double(v.x)) + "," + num(-to_double(v.y));
  }
  return s;
}

}  // namespace

std::string render_svg(const Body& body, const RenderOptions& opt) {
  std::optional<Body> reflection;
  if (opt.z) reflection = reflect(body, *opt.z);
  std::optional<Body> a_k;
  if (opt.a_body) {
    const Decomposition dec = decompose(body);
    if (dec.core.kind() == BodyKind::polygon) {
      a_k = a_body(dec.core);
    } else {
      a_k = dec.core;
    }
  }
  std::vector<Point> markers;
  if (opt.z) markers.push_back(*opt.z);
  if (opt.certificates) {
    for (const auto& c : theorem_points(body)) markers.push_back(c.z);
  }

  Box box;
  auto add_body = [&box](const Body& b) {
    for (const auto& v : b.vertices()) box.add(to_double(v.x), -to_double(v.y));
  };
  add_body(body);
  if (reflection) add_body(*reflection);
  if (a_k) add_body(*a_k);
  for (const auto& m : markers) box.add(to_double(m.x), -to_double(m.y));

  double w = box.x1 - box.x0;
  double h = box.y1 - box.y0;
  const double extent = std::max({w, h, 1e-9});
  if (w < 1e-9) w = extent;
  if (h < 1e-9) h = extent;
  const double cx = 0.5 * (box.x0 + box.x1);
  const double cy = 0.5 * (box.y0 + box.y1);
  const double vw = w * 1.1;
  const double vh = h * 1.1;
  const double stroke = extent / 300;
  const double radius = extent / 80;
  const double hatch = extent / 60;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(cx - vw / 2) + " " +
         num(cy - vh / 2) + " " + num(vw) + " " + num(vh) + "\" width=\"600\" height=\"" +
         num(600 * vh / vw) + "\">\n";
  svg += "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"" + num(hatch) +
         "\" height=\"" + num(hatch) + "\"><path d=\"M0," + num(hatch) + " L" + num(hatch) +
         ",0\" stroke=\"#238b45\" stroke-width=\"" + num(stroke) + "\"/></pattern></defs>\n";
  svg += "<polygon class=\"body\" points=\"" + points_attr(body) +
         "\" fill=\"#c6dbef\" stroke=\"#08519c\" stroke-width=\"" + num(stroke) + "\"/>\n";
  if (reflection) {
    svg += "<polygon class=\"reflection\" points=\"" + points_attr(*reflection) +
           "\" fill=\"none\" stroke=\"#cb181d\" stroke-width=\"" + num(stroke) + "\"/>\n";
  }
  if (a_k) {
    svg += "<polygon class=\"a-body\" points=\"" + points_attr(*a_k) +
           "\" fill=\"url(#hatch)\" stroke=\"#238b45\" stroke-width=\"" + num(stroke) + "\"/>\n";
  }
  for (const auto& m : markers) {
    svg += "<circle class=\"marker\" cx=\"" + num(to_double(m.x)) + "\" cy=\"" + num(-to_double(m.y)) +
           "\" r=\"" + num(radius) + "\" fill=\"#000\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cvxpt
