// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvxpt/geom.hpp"

namespace cvxpt {

struct RenderOptions {
  std::optional<Point> z;       // draws 2z - K and a marker at z
  bool a_body = false;          // hatched A_K (of the decomposition core)
  bool certificates = false;    // a marker per theorem point
};

// Deterministic SVG: identical inputs give identical bytes. The viewport is
// the joint bounding box of every drawn layer plus a 5% margin.
std::string render_svg(const Body& body, const RenderOptions& opt);

}  // namespace cvxpt
