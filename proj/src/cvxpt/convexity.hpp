// SPDX-License-Identifier: Apache-2.0
//
// Convexity points: z such that K U (2z - K) is convex.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cvxpt/geom.hpp"
#include "cvxpt/tolerances.hpp"

namespace cvxpt {

enum class CertificateMethod { direct, characterization, symmetric_center };

const char* to_string(CertificateMethod m);

struct ConvexityCertificate {
  Point z;
  CertificateMethod method = CertificateMethod::direct;
  // Directions u with z on M(u); z lies in Z(u) for each of them.
  std::vector<Direction> witnesses;
  // Point or segment input; outside the two-dimensional theory.
  bool degenerate = false;
};

struct CharacterizationResult {
  bool convexity_point = false;
  // Every direction u (one per antipodal event) with z on M(u).
  std::vector<Direction> witnesses;
  // First u with z on M(u) but outside Z(u).
  std::optional<Direction> violation;
};

// Definition check: is_convex_union(K, 2z - K).
bool is_convexity_point_direct(const Body& body, const Point& z);

// Checks "z on M(u) implies z in Z(u)" over all u, one antipodal event at a
// time. Requires a polygon without parallel edges.
CharacterizationResult is_convexity_point_char(const Body& polygon, const Point& z);

// A point of conv(K U L) boundary in neither body, or nothing if K U L is convex.
std::optional<Point> witness_nonconvexity(const Body& k, const Body& l);

// Decomposes K = C + T; returns the centre for a centrally symmetric K and
// otherwise every vertex of A_C. Each certificate is re-checked against K
// with the direct test; a failure throws VerificationError.
std::vector<ConvexityCertificate> theorem_points(const Body& body);

// Intercept function of the middle lines along the tangent line at an
// exposed point of A_K, sampled in floating point.
struct InterceptProfile {
  Point origin;
  Direction e1;
  Direction e2;
  std::vector<std::pair<double, double>> samples;  // (angle, f)
  std::optional<std::pair<double, double>> zero_component;
  int zero_runs = 0;
  int monotone_violations = 0;
};

// Frame: origin at `exposed`, e2 an inner normal of a line exposing it in A_K
// (so <x - origin, e2> > 0 on A_K minus the origin), e1 = e2 turned clockwise.
// Angles are clamped to |phi| <= pi/2 - kTolerances.pole_margin. The polygon is
// rescaled to unit radius around the origin before sampling.
InterceptProfile middle_intercept_profile(const Body& polygon, const Point& exposed, int n_samples,
                                          double tolerance = kTolerances.profile);

// Exact re-check of the frame condition on every vertex of A_K.
bool frame_is_strict(const Body& a_k, const InterceptProfile& profile);

}  // namespace cvxpt
