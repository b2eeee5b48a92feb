// SPDX-License-Identifier: Apache-2.0
//
// Exact planar primitives. Every scalar is a Rat; there are no tolerances
// anywhere in this header.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvxpt/rational.hpp"

namespace cvxpt {

struct Point {
  Rat x;
  Rat y;

  Point() = default;
  Point(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(const Point& a) { return {-a.x, -a.y}; }
inline Point operator*(const Rat& s, const Point& a) { return {s * a.x, s * a.y}; }
inline Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
// Twice the signed area of (a, b, c); positive for a counterclockwise turn.
inline Rat orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }
inline Point midpoint(const Point& a, const Point& b) {
  Point m{a.x + b.x, a.y + b.y};
  m.x /= 2;
  m.y /= 2;
  return m;
}
// Counterclockwise quarter turn.
inline Point rot90(const Point& v) { return {-v.y, v.x}; }

// Polar-angle order on nonzero vectors, starting at the +x axis and running
// counterclockwise through [0, 2*pi).
bool angle_less(const Point& a, const Point& b);
bool same_angle(const Point& a, const Point& b);
// True for the half-open upper half plane {y > 0} U {y = 0, x > 0}.
bool in_upper_half(const Point& v);

// A ray of directions: (dx, dy) and every positive multiple of it.
// Stored as coprime integers, so two equivalent rays compare equal.
class Direction {
 public:
  Direction(const Rat& dx, const Rat& dy);
  explicit Direction(const Point& v) : Direction(v.x, v.y) {}

  const Rat& dx() const { return v_.x; }
  const Rat& dy() const { return v_.y; }
  const Point& vec() const { return v_; }

  // u' : the counterclockwise quarter turn (dx, dy) -> (-dy, dx).
  Direction rotated() const { return Direction(rot90(v_)); }
  Direction operator-() const { return Direction(-v_); }

  friend bool operator==(const Direction& a, const Direction& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
  friend bool operator<(const Direction& a, const Direction& b) { return angle_less(a.v_, b.v_); }

 private:
  Point v_;
};

// {x : <x, normal> = offset}. Stored with the normal in the upper half
// plane, so the two representations of one line compare equal.
class Line {
 public:
  Line(const Direction& normal, const Rat& offset);

  const Direction& normal() const { return normal_; }
  const Rat& offset() const { return offset_; }
  bool contains(const Point& p) const { return dot(p, normal_.vec()) == offset_; }

  friend bool operator==(const Line& a, const Line& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }

 private:
  Direction normal_;
  Rat offset_;
};

enum class BodyKind { point, segment, polygon };

const char* to_string(BodyKind kind);

// A planar convex body with exact vertices in canonical form:
//   point   - one vertex
//   segment - two distinct vertices, lexicographically ordered
//   polygon - >= 3 vertices, counterclockwise, no three consecutive
//             vertices collinear, lexicographically minimal vertex first
class Body {
 public:
  // Validates and canonicalizes. A clockwise polygon ring is reversed. With
  // `normalize`, repeated and collinear vertices are dropped instead of
  // rejected; a reflex vertex is always an error.
  static Body make(BodyKind kind, std::vector<Point> vertices, bool normalize = false);
  static Body make_point(Point p);
  static Body make_segment(Point a, Point b);

  BodyKind kind() const { return kind_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  size_t size() const { return vertices_.size(); }
  int dim() const { return static_cast<int>(kind_); }

  // Polygon edge i runs from vertex i to vertex i+1 (cyclically).
  Point edge(size_t i) const { return vertices_[(i + 1) % size()] - vertices_[i]; }

  friend bool operator==(const Body& a, const Body& b) {
    return a.kind_ == b.kind_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const Body& a, const Body& b) { return !(a == b); }

 private:
  friend Body body_from_ccw_ring(std::vector<Point> ring);
  Body(BodyKind kind, std::vector<Point> vertices) : kind_(kind), vertices_(std::move(vertices)) {}

  BodyKind kind_;
  std::vector<Point> vertices_;
};

// Trusted construction from a strictly convex counterclockwise ring (any
// starting vertex). One vertex gives a point, two a segment.
Body body_from_ccw_ring(std::vector<Point> ring);

// F(K, n): a point (a == b) or a segment ordered so that b - a is a positive
// multiple of n' = rot90(n).
struct Face {
  Point a;
  Point b;

  bool is_point() const { return a == b; }
  bool is_segment() const { return a != b; }
  friend bool operator==(const Face& f, const Face& g) { return f.a == g.a && f.b == g.b; }
};

Body hull(std::span<const Point> points);
Rat support(const Body& body, const Direction& n);
Face face(const Body& body, const Direction& n);
Body minkowski_sum(const Body& a, const Body& b);
Body translate(const Body& body, const Point& t);
Body scale(const Body& body, const Rat& factor);  // factor > 0
// 2z - K
Body reflect(const Body& body, const Point& z);
bool contains(const Body& body, const Point& p);
int affine_dim(std::span<const Point> points);

// Outward normal of polygon edge i.
Direction edge_normal(const Body& polygon, size_t i);

// Walks every edge of conv(K U L) and checks it is covered by the faces of K
// and L on that edge's line. Returns the midpoint of the first uncovered
// interval, or nothing when the boundary of the hull lies in K U L.
std::optional<Point> union_gap(const Body& k, const Body& l);
bool is_convex_union(const Body& k, const Body& l);

}  // namespace cvxpt
