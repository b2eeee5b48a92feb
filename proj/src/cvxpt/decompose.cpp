// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/decompose.hpp"

#include "cvxpt/errors.hpp"

namespace cvxpt {
namespace {

Point upper(const Point& v) { return in_upper_half(v) ? v : -v; }

Body centred_segment(const Point& full) {
  Point half = full;
  half.x /= 2;
  half.y /= 2;
  return Body::make_segment(-half, half);
}

// Adds a summand, merging it into an existing parallel one.
void add_summand(Decomposition& d, const Point& full) {
  const Point u = upper(full);
  for (auto& s : d.summands) {
    const Point existing = s.vertices()[1] - s.vertices()[0];
    if (cross(existing, u) == 0) {
      s = centred_segment(upper(existing) + u);
      d.trace.push_back({Direction(u), u});
      return;
    }
  }
  d.summands.push_back(centred_segment(u));
  d.trace.push_back({Direction(u), u});
}

}  // namespace

Body summand_sum(const std::vector<Body>& summands) {
  Body total = Body::make_point({0, 0});
  for (const auto& s : summands) total = minkowski_sum(total, s);
  return total;
}

std::optional<Extraction> extract_parallel_summand(const Body& polygon, PairOrder order) {
  if (polygon.kind() != BodyKind::polygon) {
    throw PreconditionError("extract_parallel_summand requires a polygon");
  }
  const auto pair = find_parallel_edges(polygon, order);
  if (!pair) return std::nullopt;

  // edge_pos runs along +u', edge_neg along -u'.
  const Point e_pos = pair->edge_pos.b - pair->edge_pos.a;
  const Point e_neg = pair->edge_neg.b - pair->edge_neg.a;
  const Point d = dot(e_pos, e_pos) <= dot(e_neg, e_neg) ? e_pos : -e_neg;

  const auto& v = polygon.vertices();
  const size_t n = v.size();
  size_t start = 0;
  while (v[start] != pair->edge_pos.a) ++start;

  // In P = C + S the face of P along e_pos is [c + (-d/2), c + e' + d/2], so
  // C's copy of that edge starts at v + d/2 and is d shorter.
  Point half_d = d;
  half_d.x /= 2;
  half_d.y /= 2;
  std::vector<Point> ring;
  Point cur = v[start] + half_d;
  for (size_t k = 0; k < n; ++k) {
    const size_t i = (start + k) % n;
    Point e = polygon.edge(i);
    if (e == e_pos) {
      e = e - d;
    } else if (e == e_neg) {
      e = e + d;
    }
    if (e.x == 0 && e.y == 0) continue;
    ring.push_back(cur);
    cur = cur + e;
  }
  Body core = ring.empty() ? Body::make_point(cur) : hull(ring);
  Body summand = centred_segment(d);

  for (size_t i = 0; i < n; ++i) {
    for (const Direction& nrm : {edge_normal(polygon, i), -edge_normal(polygon, i)}) {
      if (support(core, nrm) + support(summand, nrm) != support(polygon, nrm)) {
        throw VerificationError("summand extraction violates h_C = h_P - h_S");
      }
    }
  }
  const Point u = upper(d);
  return Extraction{std::move(summand), std::move(core), TraceStep{Direction(u), u}};
}

Decomposition decompose(const Body& body, PairOrder order) {
  Decomposition d{body, {}, {}};
  // Every extraction removes at least one edge.
  const size_t budget = body.size() + 1;
  for (size_t step = 0; step <= budget; ++step) {
    if (d.core.kind() == BodyKind::point) return d;
    if (d.core.kind() == BodyKind::segment) {
      const auto& v = d.core.vertices();
      add_summand(d, v[1] - v[0]);
      d.core = Body::make_point(midpoint(v[0], v[1]));
      return d;
    }
    auto ex = extract_parallel_summand(d.core, order);
    if (!ex) return d;
    add_summand(d, ex->step.extracted);
    d.core = std::move(ex->core);
  }
  throw VerificationError("decomposition did not terminate within the edge budget");
}

bool verify_decomposition(const Body& body, const Decomposition& d) {
  for (const auto& s : d.summands) {
    if (s.kind() != BodyKind::segment) return false;
    const auto& v = s.vertices();
    if (v[0] + v[1] != Point(0, 0)) return false;
  }
  if (d.core.kind() == BodyKind::polygon && find_parallel_edges(d.core)) return false;
  return minkowski_sum(d.core, summand_sum(d.summands)) == body;
}

}  // namespace cvxpt
