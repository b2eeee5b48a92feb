// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/io.hpp"

#include <limits>

#include "cvxpt/errors.hpp"

namespace cvxpt {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

json to_json(const Direction& d) { return json::array({to_json(d.dx()), to_json(d.dy())}); }

json to_json(const Line& l) { return {{"normal", to_json(l.normal())}, {"offset", to_json(l.offset())}}; }

json to_json(const Face& f) {
  if (f.is_point()) return {{"type", "point"}, {"vertices", json::array({to_json(f.a)})}};
  return {{"type", "segment"}, {"vertices", json::array({to_json(f.a), to_json(f.b)})}};
}

json to_json(const Body& b) {
  json verts = json::array();
  for (const auto& v : b.vertices()) verts.push_back(to_json(v));
  return {{"type", to_string(b.kind())}, {"vertices", std::move(verts)}};
}

json to_json(const MiddleSegment& z) {
  return {{"carrier", to_json(z.carrier)}, {"s", to_json(z.s)}, {"t", to_json(z.t)}};
}

json to_json(const AntipodalEvent& ev) {
  return {{"arc", json::array({to_json(ev.from), to_json(ev.to)})},
          {"face_pos", to_json(ev.face_pos)},
          {"face_neg", to_json(ev.face_neg)}};
}

json to_json(const Decomposition& d) {
  json summands = json::array();
  for (const auto& s : d.summands) summands.push_back(to_json(s));
  json trace = json::array();
  for (const auto& t : d.trace) {
    trace.push_back({{"direction", to_json(t.direction)}, {"extracted", to_json(t.extracted)}});
  }
  return {{"core", to_json(d.core)}, {"summands", std::move(summands)}, {"trace", std::move(trace)}};
}

json to_json(const ConvexityCertificate& c) {
  json w = json::array();
  for (const auto& d : c.witnesses) w.push_back(to_json(d));
  json j = {{"z", to_json(c.z)}, {"method", to_string(c.method)}, {"witnesses", std::move(w)}};
  if (c.degenerate) j["degenerate"] = true;
  return j;
}

json to_json(const InterceptProfile& p) {
  json samples = json::array();
  for (const auto& [phi, f] : p.samples) samples.push_back(json::array({phi, f}));
  json zero = nullptr;
  if (p.zero_component) zero = json::array({p.zero_component->first, p.zero_component->second});
  return {{"frame", {{"origin", to_json(p.origin)}, {"e1", to_json(p.e1)}, {"e2", to_json(p.e2)}}},
          {"samples", std::move(samples)},
          {"zero_component", std::move(zero)},
          {"zero_runs", p.zero_runs},
          {"violations", p.monotone_violations}};
}

json to_json(const SmoothBody& b) {
  json h = json::array();
  for (const auto& hk : b.harmonics()) h.push_back(json::array({hk.k, hk.a, hk.b}));
  return {{"harmonics", std::move(h)}};
}

json to_json(const ZCurveSample& s) {
  return {{"phi", s.phi}, {"z", json::array({s.z[0], s.z[1]})}, {"p", s.p}, {"p_prime", s.p_prime}};
}

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rat(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rat(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

Point point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected [x, y]");
  return {rat_from_json(j[0], where + "[0]"), rat_from_json(j[1], where + "[1]")};
}

Body body_from_json(const json& j, bool normalize) {
  if (!j.is_object()) throw InputError("body: expected an object");
  if (!j.contains("type") || !j["type"].is_string()) throw InputError("body.type: missing");
  const std::string type = j["type"].get<std::string>();
  BodyKind kind;
  if (type == "point") {
    kind = BodyKind::point;
  } else if (type == "segment") {
    kind = BodyKind::segment;
  } else if (type == "polygon") {
    kind = BodyKind::polygon;
  } else {
    throw InputError("body.type: unknown type '" + type + "'");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw InputError("body.vertices: missing");
  }
  std::vector<Point> verts;
  for (size_t i = 0; i < j["vertices"].size(); ++i) {
    verts.push_back(point_from_json(j["vertices"][i], "body.vertices[" + std::to_string(i) + "]"));
  }
  try {
    return Body::make(kind, std::move(verts), normalize);
  } catch (const InputError& e) {
    throw InputError(std::string("body.vertices: ") + e.what());
  }
}

SmoothBody smooth_from_json(const json& j, double margin) {
  if (!j.is_object() || !j.contains("harmonics") || !j["harmonics"].is_array()) {
    throw InputError("smooth body: expected {\"harmonics\": [[k, a, b], ...]}");
  }
  std::vector<Harmonic> hs;
  for (size_t i = 0; i < j["harmonics"].size(); ++i) {
    const json& e = j["harmonics"][i];
    const std::string where = "harmonics[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number() ||
        !e[2].is_number()) {
      throw InputError(where + ": expected [k, a_k, b_k]");
    }
    hs.push_back({e[0].get<int>(), e[1].get<double>(), e[2].get<double>()});
  }
  return SmoothBody::make(std::move(hs), margin);
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Point parse_point_text(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw InputError("point: expected \"x,y\"");
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  try {
    return {parse_rat(trim(text.substr(0, comma))), parse_rat(trim(text.substr(comma + 1)))};
  } catch (const InputError& e) {
    throw InputError(std::string("point: ") + e.what());
  }
}

std::string emit_body(const Body& b) { return to_json(b).dump(); }

}  // namespace cvxpt
