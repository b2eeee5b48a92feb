// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace cvxpt {

// Floating-point thresholds. Exact mode uses none of these.
struct Tolerances {
  double identity = 1e-12;     // algebraic identities (z(phi + pi) = z(phi), ...)
  double derivative = 1e-6;    // finite-difference checks
  double cover = 1e-6;         // sampled union-cover checks
  double profile = 1e-9;       // intercept profile zero set and monotonicity
  double pole_margin = 1e-3;   // profile angles stay within pi/2 - pole_margin
};

inline constexpr Tolerances kTolerances{};

}  // namespace cvxpt
