// SPDX-License-Identifier: Apache-2.0
//
// Middle lines M_K(u), middle sets Z_K(u) = (F(K,u) + F(K,-u)) / 2, the
// antipodal face structure of a polygon, and the body A_K = conv U Z_K(u).
#pragma once

#include <optional>
#include <vector>

#include "cvxpt/geom.hpp"

namespace cvxpt {

// Z_K(u) = [s, t] on its carrier line M_K(u). With u' = rot90(u):
//   F(K, u) a segment  -> t - s is a nonnegative multiple of u'
//   F(K,-u) a segment  -> t - s is a nonpositive multiple of u'
// so that <t, u'> and <s, u'> are the right and left derivatives of the
// middle-line offset p with respect to the angle of u.
struct MiddleSegment {
  Line carrier;
  Point s;
  Point t;
};

// One stratum of the direction circle. A boundary event (`from == to`) sits
// on an edge normal or its negative; an arc event covers the open cone
// strictly between `from` and `to`, where both faces are vertices.
struct AntipodalEvent {
  Direction from;
  Direction to;
  Face face_pos;  // F(K, n)
  Face face_neg;  // F(K, -n), ordered along (-n)'

  bool is_boundary() const { return from == to; }
  // A direction inside the event: `from` for a boundary, from + to for an arc.
  Direction representative() const;
};

struct SymmetryResult {
  bool symmetric = false;
  std::optional<Point> center;
};

struct ParallelPair {
  Direction normal;  // outward normal of edge_pos, in the upper half plane
  Face edge_pos;     // F(P, normal)
  Face edge_neg;     // F(P, -normal)
};

enum class PairOrder { ascending, descending };

// (h(n) - h(-n)) / 2 evaluated on the ray representative n.
Rat p_value(const Body& body, const Direction& n);
Line middle_line(const Body& body, const Direction& n);

// Requires a polygon and at most one segment among F(K, n), F(K, -n).
MiddleSegment middle_set(const Body& body, const Direction& n);
// Same, from already computed faces.
MiddleSegment middle_set_from_faces(const Direction& n, const Face& pos, const Face& neg);

// Caliper sweep over half a turn of directions; the other half is the same
// list with the two faces swapped. Starts at the boundary direction with the
// smallest polar angle.
std::vector<AntipodalEvent> antipodal_events(const Body& polygon);

// Requires a polygon without a parallel edge pair.
Body a_body(const Body& polygon);

std::vector<Point> exposed_points(const Body& body);

// Parallel edge pair whose (undirected) edge direction comes first in polar
// order from the +x axis, or last with PairOrder::descending.
std::optional<ParallelPair> find_parallel_edges(const Body& polygon,
                                                PairOrder order = PairOrder::ascending);

SymmetryResult is_centrally_symmetric(const Body& body);

}  // namespace cvxpt
