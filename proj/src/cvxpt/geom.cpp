// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/geom.hpp"

#include <algorithm>

#include "cvxpt/errors.hpp"

namespace cvxpt {

bool in_upper_half(const Point& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

bool angle_less(const Point& a, const Point& b) {
  const bool ua = in_upper_half(a);
  const bool ub = in_upper_half(b);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

bool same_angle(const Point& a, const Point& b) {
  return in_upper_half(a) == in_upper_half(b) && cross(a, b) == 0;
}

Direction::Direction(const Rat& dx, const Rat& dy) {
  if (dx == 0 && dy == 0) throw InputError("zero direction");
  mpz_class scale;
  mpz_lcm(scale.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  mpz_class x = dx.get_num() * (scale / dx.get_den());
  mpz_class y = dy.get_num() * (scale / dy.get_den());
  mpz_class g = gcd(x, y);
  v_ = Point(Rat(x / g), Rat(y / g));
}

Line::Line(const Direction& normal, const Rat& offset)
    : normal_(in_upper_half(normal.vec()) ? normal : -normal), offset_(offset) {
  // The offset is measured against normal.vec(); flipping the normal flips it.
  if (!in_upper_half(normal.vec())) offset_ = -offset_;
}

const char* to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::point: return "point";
    case BodyKind::segment: return "segment";
    case BodyKind::polygon: return "polygon";
  }
  return "?";
}

namespace {

void rotate_to_min(std::vector<Point>& ring) {
  auto it = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), it, ring.end());
}

// Drops consecutive repeats and vertices lying on the segment between their
// neighbours. Returns false on a backtracking spike.
bool drop_degenerate(std::vector<Point>& ring) {
  bool changed = true;
  while (changed && ring.size() >= 2) {
    changed = false;
    for (size_t i = 0; i < ring.size() && ring.size() >= 2; ++i) {
      const size_t n = ring.size();
      const Point& prev = ring[(i + n - 1) % n];
      const Point& cur = ring[i];
      const Point& next = ring[(i + 1) % n];
      if (cur == next) {
        ring.erase(ring.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      if (n >= 3 && orient(prev, cur, next) == 0) {
        if (dot(cur - prev, next - cur) < 0) return false;
        ring.erase(ring.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return true;
}

// Edge vectors of a canonical body in counterclockwise order starting at its
// bottom-most (then left-most) vertex; their angles increase through [0, 2pi).
std::vector<Point> edges_from_bottom(const Body& b, Point& start) {
  const auto& v = b.vertices();
  size_t lo = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[lo].y || (v[i].y == v[lo].y && v[i].x < v[lo].x)) lo = i;
  }
  start = v[lo];
  std::vector<Point> edges;
  if (v.size() < 2) return edges;
  edges.reserve(v.size());
  for (size_t k = 0; k < v.size(); ++k) {
    edges.push_back(v[(lo + k + 1) % v.size()] - v[(lo + k) % v.size()]);
  }
  return edges;
}

std::vector<Point> mapped(const Body& b, auto&& fn) {
  std::vector<Point> out;
  out.reserve(b.size());
  for (const auto& p : b.vertices()) out.push_back(fn(p));
  return out;
}

}  // namespace

Body body_from_ccw_ring(std::vector<Point> ring) {
  if (ring.empty()) throw InputError("empty vertex list");
  if (ring.size() == 1) return Body(BodyKind::point, std::move(ring));
  if (ring.size() == 2) {
    if (ring[1] < ring[0]) std::swap(ring[0], ring[1]);
    return Body(BodyKind::segment, std::move(ring));
  }
  rotate_to_min(ring);
  return Body(BodyKind::polygon, std::move(ring));
}

Body Body::make_point(Point p) { return Body(BodyKind::point, {std::move(p)}); }

Body Body::make_segment(Point a, Point b) {
  if (a == b) throw InputError("segment endpoints coincide");
  return body_from_ccw_ring({std::move(a), std::move(b)});
}

Body Body::make(BodyKind kind, std::vector<Point> vertices, bool normalize) {
  switch (kind) {
    case BodyKind::point:
      if (vertices.size() != 1) throw InputError("a point body needs exactly 1 vertex");
      return make_point(std::move(vertices[0]));
    case BodyKind::segment:
      if (vertices.size() != 2) throw InputError("a segment body needs exactly 2 vertices");
      return make_segment(std::move(vertices[0]), std::move(vertices[1]));
    case BodyKind::polygon:
      break;
  }
  if (vertices.size() < 3) throw InputError("a polygon needs at least 3 vertices");
  if (normalize) {
    if (!drop_degenerate(vertices)) throw InputError("polygon ring backtracks on itself");
    if (vertices.size() < 3) throw InputError("polygon degenerates after normalization");
  }
  const size_t n = vertices.size();
  Rat area2 = 0;
  for (size_t i = 0; i < n; ++i) area2 += cross(vertices[i], vertices[(i + 1) % n]);
  if (area2 < 0) std::reverse(vertices.begin(), vertices.end());
  if (area2 == 0) throw InputError("polygon has zero area");

  size_t wraps = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    const Point& c = vertices[(i + 2) % n];
    if (a == b) throw InputError("repeated vertex at index " + std::to_string((i + 1) % n));
    const Rat turn = orient(a, b, c);
    if (turn == 0) {
      throw InputError("collinear vertices around index " + std::to_string((i + 1) % n));
    }
    if (turn < 0) throw InputError("non-convex vertex at index " + std::to_string((i + 1) % n));
    if (angle_less(c - b, b - a)) ++wraps;
  }
  if (wraps != 1) throw InputError("polygon ring is not simple (winds more than once)");
  rotate_to_min(vertices);
  return Body(BodyKind::polygon, std::move(vertices));
}

Body hull(std::span<const Point> points) {
  if (points.empty()) throw InputError("hull of an empty point set");
  std::vector<Point> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() == 1) return body_from_ccw_ring(std::move(p));

  // Andrew's monotone chain; "<= 0" pops collinear points.
  std::vector<Point> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && orient(h[k - 2], h[k - 1], p[i - 1]) <= 0) --k;
    h[k++] = p[i - 1];
  }
  h.resize(k - 1);
  return body_from_ccw_ring(std::move(h));
}

Rat support(const Body& body, const Direction& n) {
  const auto& v = body.vertices();
  Rat best = dot(v[0], n.vec());
  for (size_t i = 1; i < v.size(); ++i) {
    Rat d = dot(v[i], n.vec());
    if (d > best) best = std::move(d);
  }
  return best;
}

Face face(const Body& body, const Direction& n) {
  const auto& v = body.vertices();
  Rat best = dot(v[0], n.vec());
  std::vector<size_t> arg{0};
  for (size_t i = 1; i < v.size(); ++i) {
    Rat d = dot(v[i], n.vec());
    if (d > best) {
      best = std::move(d);
      arg.assign(1, i);
    } else if (d == best) {
      arg.push_back(i);
    }
  }
  if (arg.size() == 1) return Face{v[arg[0]], v[arg[0]]};
  // A strictly convex ring has at most two maximizers.
  Face f{v[arg[0]], v[arg[1]]};
  if (dot(f.b - f.a, n.rotated().vec()) < 0) std::swap(f.a, f.b);
  return f;
}

Body minkowski_sum(const Body& a, const Body& b) {
  Point sa;
  Point sb;
  const auto ea = edges_from_bottom(a, sa);
  const auto eb = edges_from_bottom(b, sb);

  std::vector<Point> merged;
  merged.reserve(ea.size() + eb.size());
  size_t i = 0;
  size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && angle_less(ea[i], eb[j]))) {
      merged.push_back(ea[i++]);
    } else if (i == ea.size() || angle_less(eb[j], ea[i])) {
      merged.push_back(eb[j++]);
    } else {
      merged.push_back(ea[i++] + eb[j++]);
    }
  }

  std::vector<Point> ring;
  ring.reserve(merged.size() + 1);
  Point cur = sa + sb;
  ring.push_back(cur);
  for (size_t k = 0; k + 1 < merged.size(); ++k) {
    cur = cur + merged[k];
    ring.push_back(cur);
  }
  return body_from_ccw_ring(std::move(ring));
}

Body translate(const Body& body, const Point& t) {
  return body_from_ccw_ring(mapped(body, [&](const Point& p) { return p + t; }));
}

Body scale(const Body& body, const Rat& factor) {
  if (factor <= 0) throw InputError("scale factor must be positive");
  return body_from_ccw_ring(mapped(body, [&](const Point& p) { return factor * p; }));
}

Body reflect(const Body& body, const Point& z) {
  const Point twice_z{2 * z.x, 2 * z.y};
  // A point reflection is a half turn, so orientation is preserved.
  return body_from_ccw_ring(mapped(body, [&](const Point& p) { return twice_z - p; }));
}

bool contains(const Body& body, const Point& p) {
  const auto& v = body.vertices();
  switch (body.kind()) {
    case BodyKind::point:
      return v[0] == p;
    case BodyKind::segment:
      return orient(v[0], v[1], p) == 0 && dot(p - v[0], v[1] - v[0]) >= 0 &&
             dot(p - v[1], v[0] - v[1]) >= 0;
    case BodyKind::polygon:
      for (size_t i = 0; i < v.size(); ++i) {
        if (orient(v[i], v[(i + 1) % v.size()], p) < 0) return false;
      }
      return true;
  }
  return false;
}

int affine_dim(std::span<const Point> points) {
  if (points.empty()) throw InputError("affine_dim of an empty point set");
  const Point& o = points[0];
  size_t i = 1;
  while (i < points.size() && points[i] == o) ++i;
  if (i == points.size()) return 0;
  const Point d = points[i] - o;
  for (size_t j = i + 1; j < points.size(); ++j) {
    if (cross(d, points[j] - o) != 0) return 2;
  }
  return 1;
}

Direction edge_normal(const Body& polygon, size_t i) {
  const Point e = polygon.edge(i);
  return Direction(e.y, -e.x);
}

std::optional<Point> union_gap(const Body& k, const Body& l) {
  std::vector<Point> all(k.vertices());
  all.insert(all.end(), l.vertices().begin(), l.vertices().end());
  const Body h = hull(all);
  if (h.kind() == BodyKind::point) return std::nullopt;

  // For a segment hull the whole segment is boundary; test it once with a
  // normal across it.
  const size_t edge_count = h.kind() == BodyKind::segment ? 1 : h.size();
  for (size_t e = 0; e < edge_count; ++e) {
    const Point& p = h.vertices()[e];
    const Point& q = h.vertices()[(e + 1) % h.size()];
    const Point pq = q - p;
    const Direction n(pq.y, -pq.x);
    const Rat level = dot(p, n.vec());
    const Rat len2 = dot(pq, pq);

    std::vector<std::pair<Rat, Rat>> covered;
    for (const Body* body : {&k, &l}) {
      if (support(*body, n) != level) continue;
      const Face f = face(*body, n);
      Rat ta = dot(f.a - p, pq) / len2;
      Rat tb = dot(f.b - p, pq) / len2;
      if (tb < ta) std::swap(ta, tb);
      covered.emplace_back(std::move(ta), std::move(tb));
    }
    std::sort(covered.begin(), covered.end());

    Rat reached = 0;
    for (const auto& [lo, hi] : covered) {
      if (lo > reached) break;
      if (hi > reached) reached = hi;
    }
    if (reached < 1) {
      // First gap starts at `reached`; it ends at the next interval start or 1.
      Rat gap_end = 1;
      for (const auto& [lo, hi] : covered) {
        if (lo > reached) {
          gap_end = lo;
          break;
        }
      }
      Rat t = (reached + gap_end) / 2;
      return p + t * pq;
    }
  }
  return std::nullopt;
}

bool is_convex_union(const Body& k, const Body& l) { return !union_gap(k, l).has_value(); }

}  // namespace cvxpt
