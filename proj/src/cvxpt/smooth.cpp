// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace cvxpt {
namespace {

constexpr double kPi = std::numbers::pi;

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double segment_distance(const Vec2& q, const Vec2& a, const Vec2& b) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((q[0] - a[0]) * dx + (q[1] - a[1]) * dy) / len2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(q[0] - a[0] - t * dx, q[1] - a[1] - t * dy);
}

// Zero inside the (counterclockwise) polygon.
double distance_to(const FloatPolygon& poly, const Vec2& q) {
  const auto& v = poly.vertices;
  if (v.size() == 1) return std::hypot(q[0] - v[0][0], q[1] - v[0][1]);
  bool inside = v.size() >= 3;
  double best = INFINITY;
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    if (cross(a, b, q) < 0) inside = false;
    best = std::min(best, segment_distance(q, a, b));
  }
  return inside ? 0 : best;
}

}  // namespace

SmoothBody SmoothBody::make(std::vector<Harmonic> harmonics, double margin) {
  std::sort(harmonics.begin(), harmonics.end(),
            [](const Harmonic& x, const Harmonic& y) { return x.k < y.k; });
  for (size_t i = 0; i < harmonics.size(); ++i) {
    const Harmonic& hk = harmonics[i];
    if (hk.k < 0) throw InputError("negative harmonic order " + std::to_string(hk.k));
    if (i > 0 && harmonics[i - 1].k == hk.k) {
      throw InputError("repeated harmonic order " + std::to_string(hk.k));
    }
    if (!std::isfinite(hk.a) || !std::isfinite(hk.b)) {
      throw InputError("non-finite coefficient at order " + std::to_string(hk.k));
    }
    if (hk.k == 0 && hk.b != 0) throw InputError("order 0 takes no sine coefficient");
  }

  double worst = INFINITY;
  double worst_phi = 0;
  for (int i = 0; i < kValidationSamples; ++i) {
    const double phi = 2 * kPi * i / kValidationSamples;
    double g = 0;
    for (const auto& hk : harmonics) {
      g += (1.0 - hk.k * hk.k) * (hk.a * std::cos(hk.k * phi) + hk.b * std::sin(hk.k * phi));
    }
    if (g < worst) {
      worst = g;
      worst_phi = phi;
    }
  }
  if (!(worst > margin)) {
    throw SmoothValidationError("h + h'' = " + std::to_string(worst) + " <= margin at phi = " +
                                    std::to_string(worst_phi),
                                worst_phi);
  }
  return SmoothBody(std::move(harmonics), worst);
}

double SmoothBody::h(double phi) const {
  double v = 0;
  for (const auto& hk : harmonics_) v += hk.a * std::cos(hk.k * phi) + hk.b * std::sin(hk.k * phi);
  return v;
}

long double SmoothBody::h_extended(long double phi) const {
  long double v = 0;
  for (const auto& hk : harmonics_) {
    const long double kp = static_cast<long double>(hk.k) * phi;
    v += static_cast<long double>(hk.a) * std::cos(kp) + static_cast<long double>(hk.b) * std::sin(kp);
  }
  return v;
}

double SmoothBody::dh(double phi) const {
  double v = 0;
  for (const auto& hk : harmonics_) {
    v += hk.k * (-hk.a * std::sin(hk.k * phi) + hk.b * std::cos(hk.k * phi));
  }
  return v;
}

double SmoothBody::d2h(double phi) const {
  double v = 0;
  for (const auto& hk : harmonics_) {
    v -= hk.k * hk.k * (hk.a * std::cos(hk.k * phi) + hk.b * std::sin(hk.k * phi));
  }
  return v;
}

double SmoothBody::p_analytic(double phi) const {
  double v = 0;
  for (const auto& hk : harmonics_) {
    if (hk.k % 2 == 1) v += hk.a * std::cos(hk.k * phi) + hk.b * std::sin(hk.k * phi);
  }
  return v;
}

double SmoothBody::dp(double phi) const {
  double v = 0;
  for (const auto& hk : harmonics_) {
    if (hk.k % 2 == 1) v += hk.k * (-hk.a * std::sin(hk.k * phi) + hk.b * std::cos(hk.k * phi));
  }
  return v;
}

double SmoothBody::d2p(double phi) const {
  double v = 0;
  for (const auto& hk : harmonics_) {
    if (hk.k % 2 == 1) v -= hk.k * hk.k * (hk.a * std::cos(hk.k * phi) + hk.b * std::sin(hk.k * phi));
  }
  return v;
}

Vec2 SmoothBody::boundary_point(double phi) const {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double hv = h(phi);
  const double dv = dh(phi);
  return {hv * c - dv * s, hv * s + dv * c};
}

SmoothBody SmoothBody::rotated(double angle) const {
  std::vector<Harmonic> out;
  out.reserve(harmonics_.size());
  for (const auto& hk : harmonics_) {
    const double c = std::cos(hk.k * angle);
    const double s = std::sin(hk.k * angle);
    out.push_back({hk.k, hk.a * c - hk.b * s, hk.k == 0 ? 0.0 : hk.a * s + hk.b * c});
  }
  return SmoothBody(std::move(out), margin_);
}

ZCurveSample z_curve(const SmoothBody& body, double phi) {
  const Vec2 xp = body.boundary_point(phi);
  const Vec2 xm = body.boundary_point(phi + kPi);
  ZCurveSample s;
  s.phi = phi;
  s.z = {0.5 * (xp[0] + xm[0]), 0.5 * (xp[1] + xm[1])};
  s.p = 0.5 * (body.h(phi) - body.h(phi + kPi));
  s.p_prime = body.dp(phi);
  return s;
}

DerivativeResidual derivative_residuals(const SmoothBody& body, double phi, double step) {
  if (!(step >= 1e-6 && step <= 1e-3)) throw InputError("finite-difference step must lie in [1e-6, 1e-3]");
  constexpr long double pi = std::numbers::pi_v<long double>;
  auto p = [&body](long double x) { return 0.5L * (body.h_extended(x) - body.h_extended(x + pi)); };
  const long double x = phi;
  const long double hs = step;
  const long double p0 = p(x);
  const long double right = (-3 * p0 + 4 * p(x + hs) - p(x + 2 * hs)) / (2 * hs);
  const long double left = (3 * p0 - 4 * p(x - hs) + p(x - 2 * hs)) / (2 * hs);

  const ZCurveSample zs = z_curve(body, phi);
  const double along = -zs.z[0] * std::sin(phi) + zs.z[1] * std::cos(phi);
  return {static_cast<double>(std::abs(right - along)), static_cast<double>(std::abs(left - along))};
}

double fd_check_lemma4(const SmoothBody& body, double phi, double step) {
  return derivative_residuals(body, phi, step).max();
}

double symmetry_residual(const SmoothBody& body) {
  double worst = 0;
  for (int i = 0; i < kSymmetrySamples; ++i) {
    const double phi = 2 * kPi * i / kSymmetrySamples;
    worst = std::max(worst, std::abs(body.p_analytic(phi) + body.d2p(phi)));
  }
  return worst;
}

FloatPolygon float_hull(std::vector<Vec2> points, double merge) {
  std::sort(points.begin(), points.end());
  std::vector<Vec2> p;
  for (const auto& q : points) {
    if (!p.empty() && std::abs(q[0] - p.back()[0]) <= merge && std::abs(q[1] - p.back()[1]) <= merge) {
      continue;
    }
    p.push_back(q);
  }
  if (p.size() <= 2) return {p};
  std::vector<Vec2> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i - 1]) <= 0) --k;
    h[k++] = p[i - 1];
  }
  h.resize(k - 1);
  return {h};
}

FloatPolygon a_body_approx(const SmoothBody& body, int m) {
  if (m < 16) throw InputError("a_body_approx needs m >= 16");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) pts.push_back(z_curve(body, kPi * i / m).z);
  return float_hull(std::move(pts));
}

FloatPolygon boundary_polygon(const SmoothBody& body, int samples) {
  if (samples < 3) throw InputError("boundary_polygon needs at least 3 samples");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) pts.push_back(body.boundary_point(2 * kPi * i / samples));
  return float_hull(std::move(pts));
}

FloatPolygon reflect(const FloatPolygon& k, const Vec2& z) {
  FloatPolygon out;
  out.vertices.reserve(k.vertices.size());
  for (const auto& v : k.vertices) out.vertices.push_back({2 * z[0] - v[0], 2 * z[1] - v[1]});
  return out;
}

double union_cover_gap(const FloatPolygon& k, const FloatPolygon& l) {
  std::vector<Vec2> all(k.vertices);
  all.insert(all.end(), l.vertices.begin(), l.vertices.end());
  const FloatPolygon hull = float_hull(all);
  const auto& hv = hull.vertices;
  if (hv.size() < 2) return 0;

  // Hull edges joining consecutive vertices of one body lie on that body.
  std::map<Vec2, std::pair<int, size_t>> owner;
  for (size_t i = l.vertices.size(); i-- > 0;) owner[l.vertices[i]] = {1, i};
  for (size_t i = k.vertices.size(); i-- > 0;) owner[k.vertices[i]] = {0, i};
  auto on_body_edge = [&](const Vec2& a, const Vec2& b) {
    const auto ia = owner.find(a);
    const auto ib = owner.find(b);
    if (ia == owner.end() || ib == owner.end() || ia->second.first != ib->second.first) return false;
    const size_t n = (ia->second.first == 0 ? k : l).vertices.size();
    return (ia->second.second + 1) % n == ib->second.second;
  };
  auto gap_at = [&](const Vec2& q) { return std::min(distance_to(k, q), distance_to(l, q)); };

  constexpr int kEdgeSamples = 64;
  const size_t edges = hv.size() == 2 ? 1 : hv.size();
  double worst = 0;
  for (size_t e = 0; e < edges; ++e) {
    const Vec2& a = hv[e];
    const Vec2& b = hv[(e + 1) % hv.size()];
    if (on_body_edge(a, b)) continue;
    auto at = [&](double t) { return gap_at({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])}); };
    int best = 0;
    double best_gap = 0;
    for (int i = 1; i < kEdgeSamples; ++i) {
      const double g = at(static_cast<double>(i) / kEdgeSamples);
      if (g > best_gap) {
        best_gap = g;
        best = i;
      }
    }
    if (best > 0) {
      // Golden-section refinement between the neighbouring samples.
      double lo = (best - 1.0) / kEdgeSamples;
      double hi = (best + 1.0) / kEdgeSamples;
      const double r = (std::sqrt(5.0) - 1) / 2;
      for (int it = 0; it < 60; ++it) {
        const double m1 = hi - r * (hi - lo);
        const double m2 = lo + r * (hi - lo);
        if (at(m1) < at(m2)) {
          lo = m1;
        } else {
          hi = m2;
        }
      }
      best_gap = std::max(best_gap, at(0.5 * (lo + hi)));
    }
    worst = std::max(worst, best_gap);
  }
  return worst;
}

bool numeric_convexity_point(const FloatPolygon& k, const Vec2& z, double tol) {
  return union_cover_gap(k, reflect(k, z)) <= tol;
}

}  // namespace cvxpt
