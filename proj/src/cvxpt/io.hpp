// SPDX-License-Identifier: Apache-2.0
//
// JSON file formats. Body files:
//   {"type": "point" | "segment" | "polygon", "vertices": [[x, y], ...]}
// with each coordinate an integer or a lowest-terms "p/q" string. Emission is
// canonical: compact, sorted keys, canonical vertex order, and every rational
// written as a string ("3", "-1/2").
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cvxpt/convexity.hpp"
#include "cvxpt/decompose.hpp"
#include "cvxpt/middle.hpp"
#include "cvxpt/smooth.hpp"

namespace cvxpt {

using json = nlohmann::json;

json to_json(const Rat& r);
json to_json(const Point& p);
json to_json(const Direction& d);
json to_json(const Line& l);
json to_json(const Face& f);
json to_json(const Body& b);
json to_json(const MiddleSegment& z);
json to_json(const AntipodalEvent& ev);
json to_json(const Decomposition& d);
json to_json(const ConvexityCertificate& c);
json to_json(const InterceptProfile& p);
json to_json(const SmoothBody& b);
json to_json(const ZCurveSample& s);

Rat rat_from_json(const json& j, const std::string& where);
Point point_from_json(const json& j, const std::string& where);
Body body_from_json(const json& j, bool normalize = false);
SmoothBody smooth_from_json(const json& j, double margin = 0.0);

// Parses text and reports JSON syntax errors as InputError.
json parse_json_text(std::string_view text);

// Parses "x,y" where each part is an integer or p/q.
Point parse_point_text(std::string_view text);

std::string emit_body(const Body& b);

}  // namespace cvxpt
