// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/middle.hpp"

#include <algorithm>

#include "cvxpt/errors.hpp"

namespace cvxpt {
namespace {

void require_polygon(const Body& body, const char* what) {
  if (body.kind() != BodyKind::polygon) {
    throw PreconditionError(std::string(what) + " requires a two-dimensional polygon");
  }
}

Face vertex_face(const Point& p) { return Face{p, p}; }

}  // namespace

Direction AntipodalEvent::representative() const {
  if (is_boundary()) return from;
  return Direction(from.vec() + to.vec());
}

Rat p_value(const Body& body, const Direction& n) {
  Rat p = support(body, n) - support(body, -n);
  p /= 2;
  return p;
}

Line middle_line(const Body& body, const Direction& n) { return Line(n, p_value(body, n)); }

MiddleSegment middle_set_from_faces(const Direction& n, const Face& pos, const Face& neg) {
  if (pos.is_segment() && neg.is_segment()) {
    throw PreconditionError("parallel edge pair in direction (" + to_string(n.dx()) + "," +
                            to_string(n.dy()) + "); decompose the body first");
  }
  Line carrier(n, dot(midpoint(pos.a, neg.a), n.vec()));
  if (neg.is_point()) {
    return {std::move(carrier), midpoint(pos.a, neg.a), midpoint(pos.b, neg.a)};
  }
  // F(K,-u) = [c, d] with d - c a nonnegative multiple of -u'.
  return {std::move(carrier), midpoint(neg.a, pos.a), midpoint(neg.b, pos.a)};
}

MiddleSegment middle_set(const Body& body, const Direction& n) {
  require_polygon(body, "middle_set");
  return middle_set_from_faces(n, face(body, n), face(body, -n));
}

std::vector<AntipodalEvent> antipodal_events(const Body& polygon) {
  require_polygon(polygon, "antipodal_events");
  const auto& v = polygon.vertices();
  const size_t n = v.size();

  // Every edge normal tags the circle twice: at +n_i the positive face is
  // edge i, at -n_i the negative face is edge i.
  struct Mark {
    Direction dir;
    int pos_edge = -1;
    int neg_edge = -1;
  };
  std::vector<Mark> raw;
  raw.reserve(2 * n);
  for (size_t i = 0; i < n; ++i) {
    const Direction ni = edge_normal(polygon, i);
    raw.push_back({ni, static_cast<int>(i), -1});
    raw.push_back({-ni, -1, static_cast<int>(i)});
  }
  std::sort(raw.begin(), raw.end(), [](const Mark& a, const Mark& b) { return a.dir < b.dir; });
  std::vector<Mark> marks;
  for (auto& m : raw) {
    if (!marks.empty() && marks.back().dir == m.dir) {
      if (m.pos_edge >= 0) marks.back().pos_edge = m.pos_edge;
      if (m.neg_edge >= 0) marks.back().neg_edge = m.neg_edge;
    } else {
      marks.push_back(std::move(m));
    }
  }
  const size_t count = marks.size();

  // Rotating calipers: the vertex faces on the arc following mark k are the
  // successors of the most recent edges passed by each caliper.
  std::vector<int> pos_edge_before(count);
  std::vector<int> neg_edge_before(count);
  int last_pos = -1;
  int last_neg = -1;
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t k = 0; k < count; ++k) {
      if (marks[k].pos_edge >= 0) last_pos = marks[k].pos_edge;
      if (marks[k].neg_edge >= 0) last_neg = marks[k].neg_edge;
      pos_edge_before[k] = last_pos;
      neg_edge_before[k] = last_neg;
    }
  }
  auto successor = [&](int edge) { return v[(static_cast<size_t>(edge) + 1) % n]; };

  std::vector<AntipodalEvent> events;
  const size_t half = count / 2;
  events.reserve(2 * half);
  for (size_t k = 0; k < half; ++k) {
    const Mark& m = marks[k];
    Face pos = m.pos_edge >= 0 ? Face{v[static_cast<size_t>(m.pos_edge)], successor(m.pos_edge)}
                               : vertex_face(successor(pos_edge_before[k]));
    Face neg = m.neg_edge >= 0 ? Face{v[static_cast<size_t>(m.neg_edge)], successor(m.neg_edge)}
                               : vertex_face(successor(neg_edge_before[k]));
    events.push_back({m.dir, m.dir, std::move(pos), std::move(neg)});
    events.push_back({m.dir, marks[(k + 1) % count].dir,
                      vertex_face(successor(pos_edge_before[k])),
                      vertex_face(successor(neg_edge_before[k]))});
  }
  return events;
}

Body a_body(const Body& polygon) {
  require_polygon(polygon, "a_body");
  if (find_parallel_edges(polygon)) {
    throw PreconditionError("a_body requires a polygon without parallel edges");
  }
  std::vector<Point> ends;
  for (const auto& ev : antipodal_events(polygon)) {
    const MiddleSegment z = middle_set_from_faces(ev.representative(), ev.face_pos, ev.face_neg);
    ends.push_back(z.s);
    if (z.t != z.s) ends.push_back(z.t);
  }
  return hull(ends);
}

std::vector<Point> exposed_points(const Body& body) { return body.vertices(); }

std::optional<ParallelPair> find_parallel_edges(const Body& polygon, PairOrder order) {
  require_polygon(polygon, "find_parallel_edges");
  const size_t n = polygon.size();
  std::vector<Point> undirected(n);
  for (size_t i = 0; i < n; ++i) {
    const Point e = polygon.edge(i);
    undirected[i] = in_upper_half(e) ? e : -e;
  }
  std::optional<size_t> best;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (cross(undirected[i], undirected[j]) != 0) continue;
      if (!best) {
        best = i;
      } else if (order == PairOrder::ascending ? angle_less(undirected[i], undirected[*best])
                                               : angle_less(undirected[*best], undirected[i])) {
        best = i;
      }
    }
  }
  if (!best) return std::nullopt;
  Direction normal = edge_normal(polygon, *best);
  if (!in_upper_half(normal.vec())) normal = -normal;
  Face pos = face(polygon, normal);
  Face neg = face(polygon, -normal);
  return ParallelPair{std::move(normal), std::move(pos), std::move(neg)};
}

SymmetryResult is_centrally_symmetric(const Body& body) {
  const auto& v = body.vertices();
  switch (body.kind()) {
    case BodyKind::point:
      return {true, v[0]};
    case BodyKind::segment:
      return {true, midpoint(v[0], v[1])};
    case BodyKind::polygon:
      break;
  }
  const size_t n = v.size();
  if (n % 2 != 0) return {};
  const Point sum = v[0] + v[n / 2];
  for (size_t i = 1; i < n / 2; ++i) {
    if (v[i] + v[i + n / 2] != sum) return {};
  }
  return {true, midpoint(v[0], v[n / 2])};
}

}  // namespace cvxpt
