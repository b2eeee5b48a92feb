// SPDX-License-Identifier: Apache-2.0
//
// Floating-point bodies given by a trigonometric-polynomial support function
//   h(phi) = a_0 + sum_k a_k cos(k phi) + b_k sin(k phi).
#pragma once

#include <array>
#include <vector>

#include "cvxpt/errors.hpp"
#include "cvxpt/tolerances.hpp"

namespace cvxpt {

struct Harmonic {
  int k = 0;
  double a = 0;
  double b = 0;
};

using Vec2 = std::array<double, 2>;

// h + h'' fell to or below the requested margin at `phi`.
class SmoothValidationError : public InputError {
 public:
  SmoothValidationError(const std::string& what, double phi) : InputError(what), phi_(phi) {}
  double phi() const { return phi_; }

 private:
  double phi_;
};

inline constexpr int kValidationSamples = 4096;
inline constexpr int kSymmetrySamples = 1024;

class SmoothBody {
 public:
  // Rejects negative or repeated orders, non-finite coefficients, a nonzero
  // b for k = 0, and min(h + h'') <= margin over kValidationSamples angles.
  static SmoothBody make(std::vector<Harmonic> harmonics, double margin = 0.0);

  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  // min over the validation samples of h + h''.
  double curvature_margin() const { return margin_; }

  double h(double phi) const;
  double dh(double phi) const;
  double d2h(double phi) const;
  long double h_extended(long double phi) const;

  // Closed forms; only odd orders contribute.
  double p_analytic(double phi) const;
  double dp(double phi) const;
  double d2p(double phi) const;

  // Support point x_K(u(phi)) = h u + h' u'.
  Vec2 boundary_point(double phi) const;

  // Rotation of the body by `angle` about the origin.
  SmoothBody rotated(double angle) const;

 private:
  SmoothBody(std::vector<Harmonic> harmonics, double margin)
      : harmonics_(std::move(harmonics)), margin_(margin) {}

  std::vector<Harmonic> harmonics_;
  double margin_;
};

// One point of the curve of middle sets. z is the midpoint of the two support
// points at +u and -u; p comes from (h(phi) - h(phi + pi)) / 2 and p' from
// the harmonics, so z = p u + p' u' is a checkable identity.
struct ZCurveSample {
  double phi = 0;
  Vec2 z{};
  double p = 0;
  double p_prime = 0;
};

ZCurveSample z_curve(const SmoothBody& body, double phi);

struct DerivativeResidual {
  double right = 0;  // |forward difference of p - <z, u'>|
  double left = 0;   // |backward difference of p - <z, u'>|
  double max() const { return right > left ? right : left; }
};

// One-sided second-order differences of p, evaluated in extended precision
// from h alone, against <z(phi), u'(phi)>. step must lie in [1e-6, 1e-3].
DerivativeResidual derivative_residuals(const SmoothBody& body, double phi, double step);
double fd_check_lemma4(const SmoothBody& body, double phi, double step);

// max over kSymmetrySamples angles of |p + p''|; zero iff the odd part of h
// is a pure first harmonic.
double symmetry_residual(const SmoothBody& body);

// Counterclockwise convex polygon with floating-point vertices.
struct FloatPolygon {
  std::vector<Vec2> vertices;
};

// Hull with near-duplicates (within `merge`) collapsed.
FloatPolygon float_hull(std::vector<Vec2> points, double merge = kTolerances.identity);

// Hull of z(phi_i), phi_i = pi i / m, i < m. Requires m >= 16.
FloatPolygon a_body_approx(const SmoothBody& body, int m);

// Hull of x_K(u(2 pi i / samples)).
FloatPolygon boundary_polygon(const SmoothBody& body, int samples);

// Largest distance from a point of the boundary of conv(K U L) to K U L;
// zero exactly when the union is convex.
double union_cover_gap(const FloatPolygon& k, const FloatPolygon& l);
FloatPolygon reflect(const FloatPolygon& k, const Vec2& z);

bool numeric_convexity_point(const FloatPolygon& k, const Vec2& z,
                             double tol = kTolerances.cover);

}  // namespace cvxpt
