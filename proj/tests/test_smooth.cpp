// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>

#include "cvxpt/generate.hpp"
#include "cvxpt/smooth.hpp"

using namespace cvxpt;

namespace {

SmoothBody disc() { return SmoothBody::make({{0, 1.0, 0.0}}); }
SmoothBody trefoil() { return SmoothBody::make({{0, 1.0, 0.0}, {3, 0.1, 0.0}}); }

double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }

Vec2 rotate(const Vec2& v, double a) {
  return {std::cos(a) * v[0] - std::sin(a) * v[1], std::sin(a) * v[0] + std::cos(a) * v[1]};
}

}  // namespace

TEST_SUITE("smooth") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(disc());
    CHECK_NOTHROW(trefoil());
    CHECK(trefoil().curvature_margin() == doctest::Approx(0.2).epsilon(1e-9));
    // h + h'' = 1 - 1.6 cos 3phi dips below zero.
    CHECK_THROWS_AS(SmoothBody::make({{0, 1.0, 0.0}, {3, 0.2, 0.0}}), SmoothValidationError);
    try {
      SmoothBody::make({{0, 1.0, 0.0}, {3, 0.2, 0.0}});
    } catch (const SmoothValidationError& e) {
      const double phi = e.phi();
      CHECK(1.0 - 1.6 * std::cos(3 * phi) <= 0.0);
    }
    CHECK_THROWS_AS(SmoothBody::make({{-1, 1.0, 0.0}}), InputError);
    CHECK_THROWS_AS(SmoothBody::make({{0, 1.0, 0.0}, {0, 1.0, 0.0}}), InputError);
    CHECK_THROWS_AS(SmoothBody::make({{0, 1.0, 0.5}}), InputError);
    CHECK_THROWS_AS(SmoothBody::make({{0, std::numeric_limits<double>::quiet_NaN(), 0.0}}), InputError);
    // A requested margin above the actual minimum is a failure.
    CHECK_THROWS_AS(SmoothBody::make({{0, 1.0, 0.0}, {3, 0.1, 0.0}}, 0.5), SmoothValidationError);
  }

  TEST_CASE("derivatives of h against finite differences") {
    const SmoothBody b = SmoothBody::make({{0, 2.0, 0.0}, {1, 0.3, -0.2}, {2, 0.1, 0.05}, {5, 0.01, 0.02}});
    const double e = 1e-5;
    for (double phi = -3.0; phi < 3.0; phi += 0.37) {
      CHECK(b.dh(phi) == doctest::Approx((b.h(phi + e) - b.h(phi - e)) / (2 * e)).epsilon(1e-6));
      CHECK(b.d2h(phi) == doctest::Approx((b.dh(phi + e) - b.dh(phi - e)) / (2 * e)).epsilon(1e-6));
    }
  }

  TEST_CASE("curve of middle sets") {
    const SmoothBody t = trefoil();
    const ZCurveSample z0 = z_curve(t, 0.0);
    CHECK(z0.p == doctest::Approx(0.1));
    CHECK(z0.z[0] == doctest::Approx(0.1));
    CHECK(std::abs(z0.z[1]) < 1e-12);
    const ZCurveSample z1 = z_curve(t, M_PI / 6);
    CHECK(z1.p_prime == doctest::Approx(-0.3));
    CHECK(std::abs(z1.p) < 1e-12);
    for (double phi = 0.0; phi < 2 * M_PI; phi += 0.1) {
      CHECK(norm(z_curve(disc(), phi).z) < 1e-12);
      // Midpoint of antipodal support points, independently.
      const Vec2 a = t.boundary_point(phi);
      const Vec2 b = t.boundary_point(phi + M_PI);
      const Vec2 z = z_curve(t, phi).z;
      CHECK(std::abs(z[0] - (a[0] + b[0]) / 2) < 1e-12);
      CHECK(std::abs(z[1] - (a[1] + b[1]) / 2) < 1e-12);
      // Z(u) = Z(-u).
      const Vec2 w = z_curve(t, phi + M_PI).z;
      CHECK(std::abs(z[0] - w[0]) < 1e-12);
      CHECK(std::abs(z[1] - w[1]) < 1e-12);
      CHECK(z_curve(t, phi).p == doctest::Approx(t.p_analytic(phi)).epsilon(1e-12));
    }
  }

  TEST_CASE("one-sided differences of p") {
    const SmoothBody t = trefoil();
    CHECK(fd_check_lemma4(t, 0.7, 1e-4) < 1e-6);
    const DerivativeResidual r = derivative_residuals(t, 0.7, 1e-4);
    CHECK(r.max() == fd_check_lemma4(t, 0.7, 1e-4));
    // The error shrinks as the step shrinks.
    const double r3 = fd_check_lemma4(t, 1.3, 1e-3);
    const double r4 = fd_check_lemma4(t, 1.3, 1e-4);
    CHECK(r4 < r3);
    CHECK_THROWS(fd_check_lemma4(t, 0.7, 1e-2));
    CHECK_THROWS(fd_check_lemma4(t, 0.7, 1e-7));
  }

  TEST_CASE("symmetry residual") {
    CHECK(symmetry_residual(disc()) < 1e-12);
    CHECK(symmetry_residual(trefoil()) == doctest::Approx(0.8).epsilon(1e-9));
    const SmoothBody shifted = SmoothBody::make({{0, 1.0, 0.0}, {1, 0.3, 0.4}, {2, 0.1, 0.0}});
    CHECK(symmetry_residual(shifted) < 1e-12);
  }

  TEST_CASE("approximate A_K") {
    const FloatPolygon d = a_body_approx(disc(), 64);
    CHECK(d.vertices.size() == 1);
    CHECK(norm(d.vertices[0]) < 1e-12);
    CHECK_THROWS(a_body_approx(disc(), 8));

    // The trefoil's A_K is invariant under rotation by 2 pi / 3.
    const FloatPolygon a = a_body_approx(trefoil(), 360);
    REQUIRE(a.vertices.size() >= 3);
    for (const auto& v : a.vertices) {
      const Vec2 r = rotate(v, 2 * M_PI / 3);
      double best = 1e9;
      for (const auto& w : a.vertices) best = std::min(best, std::hypot(r[0] - w[0], r[1] - w[1]));
      CHECK(best < 1e-9);
    }
  }

  TEST_CASE("rotation equivariance") {
    const SmoothBody t = trefoil();
    const double angle = 0.4;
    const SmoothBody r = t.rotated(angle);
    for (double phi = 0.0; phi < 2 * M_PI; phi += 0.3) {
      CHECK(r.h(phi + angle) == doctest::Approx(t.h(phi)).epsilon(1e-12));
      const Vec2 z = rotate(z_curve(t, phi).z, angle);
      const Vec2 w = z_curve(r, phi + angle).z;
      CHECK(std::hypot(z[0] - w[0], z[1] - w[1]) < 1e-12);
    }
  }

  TEST_CASE("numeric convexity points") {
    const SmoothBody t = trefoil();
    const FloatPolygon k = boundary_polygon(t, 720);
    const FloatPolygon a = a_body_approx(t, 360);
    for (const auto& v : a.vertices) CHECK(numeric_convexity_point(k, v, 1e-6));
    // Far away the union splits into two pieces.
    CHECK_FALSE(numeric_convexity_point(k, {3.0, 0.0}, 1e-6));
    CHECK(union_cover_gap(k, reflect(k, {3.0, 0.0})) > 0.1);
    // Disc: the centre works exactly.
    const FloatPolygon dk = boundary_polygon(disc(), 720);
    CHECK(union_cover_gap(dk, reflect(dk, {0.0, 0.0})) < 1e-12);
  }

  TEST_CASE("random smooth bodies are valid") {
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
      const SmoothBody b = random_smooth_body(rng, {2, 3, 5}, 0.1);
      CHECK(b.curvature_margin() > 0.0);
      CHECK(fd_check_lemma4(b, 0.3 * i, 1e-4) < 1e-6);
    }
  }
}
