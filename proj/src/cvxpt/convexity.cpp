// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/convexity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cvxpt/decompose.hpp"
#include "cvxpt/errors.hpp"
#include "cvxpt/middle.hpp"

namespace cvxpt {
namespace {

bool in_closed_segment(const Point& a, const Point& b, const Point& p) {
  if (a == b) return p == a;
  return orient(a, b, p) == 0 && dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

// Strictly inside the counterclockwise cone from `from` to `to` (angle < pi).
bool strictly_inside(const Point& c, const Point& from, const Point& to) {
  return cross(from, c) > 0 && cross(c, to) > 0;
}

void push_unique(std::vector<Direction>& list, const Direction& d) {
  if (std::find(list.begin(), list.end(), d) == list.end()) list.push_back(d);
}

}  // namespace

const char* to_string(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::direct: return "direct";
    case CertificateMethod::characterization: return "characterization";
    case CertificateMethod::symmetric_center: return "symmetric-center";
  }
  return "?";
}

bool is_convexity_point_direct(const Body& body, const Point& z) {
  return is_convex_union(body, reflect(body, z));
}

CharacterizationResult is_convexity_point_char(const Body& polygon, const Point& z) {
  if (polygon.kind() != BodyKind::polygon) {
    throw PreconditionError("the characterization requires a two-dimensional polygon");
  }
  if (find_parallel_edges(polygon)) {
    throw PreconditionError("the characterization requires a polygon without parallel edges");
  }
  CharacterizationResult r;
  r.convexity_point = true;
  auto fail = [&r](const Direction& d) {
    r.convexity_point = false;
    if (!r.violation) r.violation = d;
  };

  for (const auto& ev : antipodal_events(polygon)) {
    if (ev.is_boundary()) {
      const MiddleSegment zs = middle_set_from_faces(ev.from, ev.face_pos, ev.face_neg);
      if (!zs.carrier.contains(z)) continue;
      push_unique(r.witnesses, ev.from);
      if (!in_closed_segment(zs.s, zs.t, z)) fail(ev.from);
      continue;
    }
    // On an open arc Z(u) = {m} and M(u) = {x : <x - m, u> = 0}.
    const Point m = midpoint(ev.face_pos.a, ev.face_neg.a);
    if (z == m) {
      push_unique(r.witnesses, ev.representative());
      continue;
    }
    const Point perp = rot90(z - m);
    for (const Point& cand : {perp, -perp}) {
      if (strictly_inside(cand, ev.from.vec(), ev.to.vec())) {
        const Direction d(cand);
        push_unique(r.witnesses, d);
        fail(d);
      }
    }
  }
  return r;
}

std::optional<Point> witness_nonconvexity(const Body& k, const Body& l) { return union_gap(k, l); }

std::vector<ConvexityCertificate> theorem_points(const Body& body) {
  auto verified = [&body](ConvexityCertificate c) {
    if (!is_convexity_point_direct(body, c.z)) {
      throw VerificationError("certificate (" + to_string(c.z.x) + "," + to_string(c.z.y) +
                              ") failed the direct convexity test");
    }
    return c;
  };

  const auto& v = body.vertices();
  if (body.kind() == BodyKind::point) {
    return {verified({v[0], CertificateMethod::direct, {}, true})};
  }
  if (body.kind() == BodyKind::segment) {
    return {verified({midpoint(v[0], v[1]), CertificateMethod::direct, {}, true})};
  }

  const Decomposition dec = decompose(body);
  if (dec.core.kind() != BodyKind::polygon) {
    // K = c + T with T 0-symmetric: K is symmetric about c.
    return {verified({dec.core.vertices()[0], CertificateMethod::symmetric_center, {}, false})};
  }

  std::vector<ConvexityCertificate> out;
  for (const Point& z : exposed_points(a_body(dec.core))) {
    CharacterizationResult ch = is_convexity_point_char(dec.core, z);
    if (!ch.convexity_point) {
      throw VerificationError("exposed point of A_K rejected by the characterization");
    }
    out.push_back(verified({z, CertificateMethod::characterization, std::move(ch.witnesses), false}));
  }
  return out;
}

InterceptProfile middle_intercept_profile(const Body& polygon, const Point& exposed, int n_samples,
                                          double tolerance) {
  if (n_samples < 2) throw InputError("profile needs at least 2 samples");
  const Body a = a_body(polygon);
  const auto& av = a.vertices();
  const auto it = std::find(av.begin(), av.end(), exposed);
  if (it == av.end()) throw PreconditionError("point is not an exposed point of A_K");
  const size_t idx = static_cast<size_t>(it - av.begin());

  Point e2v;
  if (a.kind() == BodyKind::polygon) {
    const Point& prev = av[(idx + av.size() - 1) % av.size()];
    const Point& next = av[(idx + 1) % av.size()];
    const Point in_edge = exposed - prev;
    const Point out_edge = next - exposed;
    // Sum of the two outward edge normals lies inside the normal cone.
    e2v = -(Point(in_edge.y, -in_edge.x) + Point(out_edge.y, -out_edge.x));
  } else if (a.kind() == BodyKind::segment) {
    e2v = av[1 - idx] - exposed;
  } else {
    e2v = Point(0, 1);
  }
  const Direction e2(e2v);
  const Direction e1(e2.dy(), -e2.dx());

  InterceptProfile prof{exposed, e1, e2, {}, std::nullopt, 0, 0};

  std::vector<std::array<double, 2>> w;
  double radius = 0;
  for (const Point& v : polygon.vertices()) {
    const Point d = v - exposed;
    w.push_back({to_double(d.x), to_double(d.y)});
    radius = std::max(radius, std::hypot(w.back()[0], w.back()[1]));
  }
  for (auto& p : w) {
    p[0] /= radius;
    p[1] /= radius;
  }
  const double n1 = std::hypot(to_double(e1.dx()), to_double(e1.dy()));
  const double n2 = std::hypot(to_double(e2.dx()), to_double(e2.dy()));
  const std::array<double, 2> f1{to_double(e1.dx()) / n1, to_double(e1.dy()) / n1};
  const std::array<double, 2> f2{to_double(e2.dx()) / n2, to_double(e2.dy()) / n2};

  const double limit = std::numbers::pi / 2 - kTolerances.pole_margin;
  prof.samples.reserve(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double phi = -limit + 2 * limit * i / (n_samples - 1);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double ux = c * f1[0] + s * f2[0];
    const double uy = c * f1[1] + s * f2[1];
    double hp = -INFINITY;
    double hm = -INFINITY;
    for (const auto& p : w) {
      const double d = p[0] * ux + p[1] * uy;
      hp = std::max(hp, d);
      hm = std::max(hm, -d);
    }
    prof.samples.emplace_back(phi, 0.5 * (hp - hm) / c);
  }

  size_t best_len = 0;
  for (size_t i = 0; i < prof.samples.size();) {
    if (std::abs(prof.samples[i].second) > tolerance) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < prof.samples.size() && std::abs(prof.samples[j + 1].second) <= tolerance) ++j;
    ++prof.zero_runs;
    if (j - i + 1 > best_len) {
      best_len = j - i + 1;
      prof.zero_component = std::make_pair(prof.samples[i].first, prof.samples[j].first);
    }
    i = j + 1;
  }
  for (size_t i = 0; i + 1 < prof.samples.size(); ++i) {
    if (prof.samples[i + 1].second < prof.samples[i].second - tolerance) ++prof.monotone_violations;
  }
  return prof;
}

bool frame_is_strict(const Body& a_k, const InterceptProfile& profile) {
  bool found = false;
  for (const Point& x : a_k.vertices()) {
    if (x == profile.origin) {
      found = true;
      continue;
    }
    if (dot(x - profile.origin, profile.e2.vec()) <= 0) return false;
  }
  return found;
}

}  // namespace cvxpt
