// SPDX-License-Identifier: Apache-2.0
//
// Fixtures and brute-force oracles shared by the unit tests. The oracles
// deliberately avoid the library's own combinatorics.
#pragma once

#include <cmath>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cvxpt/generate.hpp"
#include "cvxpt/geom.hpp"

namespace fixtures {

using cvxpt::Body;
using cvxpt::BodyKind;
using cvxpt::Direction;
using cvxpt::Point;
using cvxpt::Rat;

inline Point P(long x, long y) { return {x, y}; }

inline Point Q(long xn, long xd, long yn, long yd) { return {Rat(xn) / xd, Rat(yn) / yd}; }

inline Body poly(std::initializer_list<Point> pts) { return Body::make(BodyKind::polygon, pts); }

inline Body t0() { return poly({P(0, 0), P(4, 0), P(0, 4)}); }
inline Body unit_square() { return poly({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}); }
inline Body big_square() { return poly({P(-1, -1), P(1, -1), P(1, 1), P(-1, 1)}); }
inline Body p5() { return poly({P(0, 0), P(3, 0), P(4, 2), P(2, 4), P(0, 3)}); }
inline Body hexagon() { return poly({P(2, 0), P(1, 2), P(-1, 2), P(-2, 0), P(-1, -2), P(1, -2)}); }

inline Body random_polygon(std::uint64_t seed, bool no_parallel = true, int n = 0) {
  cvxpt::Rng rng(seed);
  cvxpt::GenOptions opt;
  opt.n = n > 0 ? n : static_cast<int>(rng.uniform_int(3, 25));
  opt.seed = seed;
  opt.no_parallel = no_parallel;
  opt.range = 60;
  return cvxpt::generate_body(opt).body;
}

// Brute-force support: max over vertices, no caching or face logic.
inline Rat brute_support(const Body& b, const Point& n) {
  Rat best = cvxpt::dot(b.vertices()[0], n);
  for (const auto& v : b.vertices()) best = std::max(best, Rat(cvxpt::dot(v, n)));
  return best;
}

// All vertices attaining the support value.
inline std::vector<Point> brute_face(const Body& b, const Point& n) {
  const Rat h = brute_support(b, n);
  std::vector<Point> out;
  for (const auto& v : b.vertices()) {
    if (cvxpt::dot(v, n) == h) out.push_back(v);
  }
  return out;
}

// Rational ray close to angle theta, pushed off the coordinate axes.
inline Direction ray_at(double theta) {
  const long scale = 100000;
  long x = std::lround(std::cos(theta) * scale);
  long y = std::lround(std::sin(theta) * scale);
  if (x == 0 && y == 0) x = 1;
  return Direction(Rat(x), Rat(y));
}

inline std::vector<Direction> ray_sweep(int count, double offset = 0.0137) {
  std::vector<Direction> out;
  for (int i = 0; i < count; ++i) out.push_back(ray_at(offset + 2 * M_PI * i / count));
  return out;
}

// Minkowski oracle: hull of all pairwise vertex sums.
inline Body pairwise_sum(const Body& a, const Body& b) {
  std::vector<Point> pts;
  for (const auto& x : a.vertices()) {
    for (const auto& y : b.vertices()) pts.push_back(x + y);
  }
  return cvxpt::hull(pts);
}

}  // namespace fixtures
