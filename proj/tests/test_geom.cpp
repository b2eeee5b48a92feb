// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "cvxpt/errors.hpp"
#include "cvxpt/geom.hpp"
#include "cvxpt/rational.hpp"
#include "support.hpp"

using namespace cvxpt;
using namespace fixtures;

TEST_SUITE("rational") {
  TEST_CASE("parse and print") {
    CHECK(parse_rat("3") == 3);
    CHECK(parse_rat("-7/2") == Rat(-7) / 2);
    CHECK(to_string(parse_rat("-7/2")) == "-7/2");
    CHECK(to_string(Rat(6) / 4) == "3/2");
    CHECK(to_string(Rat(-4) / 2) == "-2");
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_rat("4/2"), InputError);
    CHECK_THROWS_AS(parse_rat("3/1"), InputError);
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rat("1.5"), InputError);
    CHECK_THROWS_AS(parse_rat(""), InputError);
    CHECK_THROWS_AS(parse_rat("/3"), InputError);
  }

  TEST_CASE("from_double is exact") {
    CHECK(from_double(0.5) == Rat(1) / 2);
    CHECK(to_double(from_double(0.1)) == 0.1);
    CHECK_THROWS_AS(from_double(NAN), InputError);
  }
}

TEST_SUITE("geom") {
  TEST_CASE("directions are canonical rays") {
    CHECK(Direction(Rat(2), Rat(4)) == Direction(Rat(1), Rat(2)));
    CHECK(Direction(Rat(1) / 2, Rat(1) / 3) == Direction(Rat(3), Rat(2)));
    CHECK(Direction(Rat(-2), Rat(0)) == Direction(Rat(-1), Rat(0)));
    CHECK(Direction(Rat(-2), Rat(0)) != Direction(Rat(1), Rat(0)));
    CHECK(Direction(Rat(1), Rat(0)).rotated() == Direction(Rat(0), Rat(1)));
    CHECK_THROWS_AS(Direction(Rat(0), Rat(0)), InputError);
  }

  TEST_CASE("polar order") {
    const std::vector<Point> ccw{P(1, 0), P(1, 1), P(0, 1), P(-1, 1), P(-1, 0), P(-1, -1), P(0, -1), P(1, -1)};
    for (size_t i = 0; i < ccw.size(); ++i) {
      for (size_t j = 0; j < ccw.size(); ++j) CHECK(angle_less(ccw[i], ccw[j]) == (i < j));
    }
    CHECK(same_angle(P(2, 2), P(1, 1)));
    CHECK_FALSE(same_angle(P(1, 1), P(-1, -1)));
  }

  TEST_CASE("lines compare as sets") {
    const Line a(Direction(Rat(0), Rat(1)), Rat(2));
    const Line b(Direction(Rat(0), Rat(-1)), Rat(-2));
    CHECK(a == b);
    CHECK(b.contains(P(7, 2)));
    CHECK_FALSE(b.contains(P(7, -2)));
  }

  TEST_CASE("body validation and canonical form") {
    const Body cw = poly({P(0, 0), P(0, 4), P(4, 0)});
    CHECK(cw == t0());
    CHECK(cw.vertices()[0] == P(0, 0));
    const Body rotated = poly({P(0, 4), P(0, 0), P(4, 0)});
    CHECK(rotated == t0());
    CHECK_THROWS_AS(poly({P(0, 0), P(4, 0), P(1, 1), P(0, 4)}), InputError);
    CHECK_THROWS_AS(poly({P(0, 0), P(2, 0), P(4, 0), P(0, 4)}), InputError);
    CHECK_THROWS_AS(poly({P(0, 0), P(4, 0), P(4, 0), P(0, 4)}), InputError);
    CHECK_THROWS_AS(poly({P(0, 0), P(1, 1), P(2, 2)}), InputError);
    // A star-shaped ring winding twice.
    CHECK_THROWS_AS(poly({P(0, 0), P(2, 0), P(1, 1), P(0, 2), P(2, 2)}), InputError);
    const Body norm = Body::make(BodyKind::polygon, {P(0, 0), P(2, 0), P(4, 0), P(4, 0), P(0, 4)}, true);
    CHECK(norm == t0());
    CHECK(Body::make_segment(P(3, 3), P(1, 1)).vertices()[0] == P(1, 1));
    CHECK_THROWS_AS(Body::make_segment(P(1, 1), P(1, 1)), InputError);
  }

  TEST_CASE("hull") {
    const std::vector<Point> a{P(0, 0), P(4, 0), P(0, 4), P(1, 1)};
    CHECK(hull(a) == t0());
    const std::vector<Point> b{P(0, 0), P(2, 2), P(1, 1)};
    CHECK(hull(b) == Body::make_segment(P(0, 0), P(2, 2)));
    const std::vector<Point> c{P(5, 5)};
    CHECK(hull(c) == Body::make_point(P(5, 5)));
    CHECK_THROWS_AS(hull(std::vector<Point>{}), InputError);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Body k = random_polygon(s, false);
      CHECK(hull(k.vertices()) == k);
    }
  }

  TEST_CASE("support") {
    const Body t = t0();
    CHECK(support(t, Direction(Rat(1), Rat(0))) == 4);
    CHECK(support(t, Direction(Rat(1), Rat(1))) == 4);
    CHECK(support(Body::make_point(P(5, 5)), Direction(Rat(-1), Rat(0))) == -5);
    for (const auto& n : ray_sweep(90)) CHECK(support(p5(), n) == brute_support(p5(), n.vec()));
  }

  TEST_CASE("faces follow the rotation convention") {
    const Body t = t0();
    const Face hyp = face(t, Direction(Rat(1), Rat(1)));
    CHECK(hyp.a == P(4, 0));
    CHECK(hyp.b == P(0, 4));
    const Face bottom = face(t, Direction(Rat(0), Rat(-1)));
    CHECK(bottom.a == P(0, 0));
    CHECK(bottom.b == P(4, 0));
    CHECK(face(t, Direction(Rat(-1), Rat(-1))).is_point());
    CHECK(face(t, Direction(Rat(-1), Rat(-1))).a == P(0, 0));

    // Oracle: brute-force maximizers, ordered by the quarter turn.
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Body k = random_polygon(s, false);
      for (size_t i = 0; i < k.size(); ++i) {
        const Direction n = edge_normal(k, i);
        const auto maxi = brute_face(k, n.vec());
        REQUIRE(maxi.size() == 2);
        const Face f = face(k, n);
        CHECK(cross(n.vec(), f.b - f.a) > 0);
        CHECK(((f.a == maxi[0] && f.b == maxi[1]) || (f.a == maxi[1] && f.b == maxi[0])));
      }
    }
  }

  TEST_CASE("minkowski sum") {
    const Body sx = Body::make_segment(P(-1, 0), P(1, 0));
    const Body sy = Body::make_segment(P(0, -1), P(0, 1));
    CHECK(minkowski_sum(sx, sy) == big_square());
    CHECK(minkowski_sum(t0(), Body::make_point(P(1, 1))) == translate(t0(), P(1, 1)));
    const Body pent = minkowski_sum(t0(), sx);
    CHECK(pent == poly({P(-1, 0), P(5, 0), P(1, 4), P(-1, 4)}));
    CHECK(pent == pairwise_sum(t0(), sx));
    for (const auto& n : ray_sweep(12)) {
      CHECK(support(pent, n) == brute_support(t0(), n.vec()) + brute_support(sx, n.vec()));
    }
    for (std::uint64_t s = 0; s < 30; ++s) {
      const Body a = random_polygon(s, false);
      const Body b = random_polygon(1000 + s, false);
      const Body sum = minkowski_sum(a, b);
      CHECK(sum == pairwise_sum(a, b));
      for (const auto& n : ray_sweep(16, 0.001 * static_cast<double>(s))) {
        CHECK(support(sum, n) == support(a, n) + support(b, n));
        // Face additivity.
        const Face fa = face(a, n), fb = face(b, n), fs = face(sum, n);
        CHECK(fs.a == fa.a + fb.a);
        CHECK(fs.b == fa.b + fb.b);
      }
      for (size_t i = 0; i < a.size(); ++i) {
        const Direction n = edge_normal(a, i);
        const Face fa = face(a, n), fb = face(b, n), fs = face(sum, n);
        CHECK(fs.a == fa.a + fb.a);
        CHECK(fs.b == fa.b + fb.b);
      }
    }
  }

  TEST_CASE("reflect") {
    CHECK(reflect(t0(), P(2, 2)) == poly({P(0, 4), P(4, 0), P(4, 4)}));
    CHECK(reflect(Body::make_point(P(3, -1)), P(3, -1)) == Body::make_point(P(3, -1)));
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Body k = random_polygon(s, false);
      const Point z = Q(static_cast<long>(s) - 50, 7, 13, 3);
      const Body r = reflect(k, z);
      CHECK(reflect(r, z) == k);
      for (const auto& n : ray_sweep(8, 0.3)) {
        CHECK(support(r, n) == 2 * dot(z, n.vec()) + support(k, -n));
      }
    }
  }

  TEST_CASE("contains") {
    CHECK(contains(t0(), P(1, 1)));
    CHECK(contains(t0(), P(2, 2)));
    CHECK_FALSE(contains(t0(), P(4, 4)));
    CHECK(contains(Body::make_segment(P(0, 0), P(2, 2)), P(1, 1)));
    CHECK_FALSE(contains(Body::make_segment(P(0, 0), P(2, 2)), P(3, 3)));
    CHECK(contains(Body::make_point(P(1, 2)), P(1, 2)));
  }

  TEST_CASE("affine dimension") {
    CHECK(affine_dim(std::vector<Point>{P(1, 1)}) == 0);
    CHECK(affine_dim(std::vector<Point>{P(1, 1), P(1, 1)}) == 0);
    CHECK(affine_dim(std::vector<Point>{P(0, 0), P(1, 1), P(2, 2)}) == 1);
    CHECK(affine_dim(std::vector<Point>{P(2, 0), P(0, 2), P(2, 2)}) == 2);
    CHECK_THROWS_AS(affine_dim(std::vector<Point>{}), InputError);
  }

  TEST_CASE("convex unions") {
    const Body left = big_square();
    const Body right = poly({P(1, -1), P(3, -1), P(3, 1), P(1, 1)});
    CHECK(is_convex_union(left, right));
    CHECK(is_convex_union(t0(), reflect(t0(), P(2, 2))));
    CHECK_FALSE(is_convex_union(t0(), reflect(t0(), Q(4, 3, 4, 3))));
    CHECK_FALSE(is_convex_union(t0(), translate(t0(), P(10, 0))));
    CHECK(is_convex_union(t0(), t0()));
    CHECK(is_convex_union(Body::make_point(P(0, 0)), Body::make_point(P(0, 0))));
    CHECK_FALSE(is_convex_union(Body::make_point(P(0, 0)), Body::make_point(P(1, 0))));
    CHECK(is_convex_union(Body::make_segment(P(0, 0), P(2, 0)), Body::make_segment(P(1, 0), P(3, 0))));
    CHECK_FALSE(is_convex_union(Body::make_segment(P(0, 0), P(1, 0)), Body::make_segment(P(2, 0), P(3, 0))));
  }

  TEST_CASE("convex unions: soundness spot checks") {
    // A triangle and its reflection in an edge midpoint form a
    // parallelogram; midpoints of cross pairs must stay in the union.
    auto random_point_in = [](Rng& rng, const Body& b) {
      Point acc(0, 0);
      Rat total(0);
      for (const auto& v : b.vertices()) {
        const Rat w(rng.uniform_int(0, 9));
        acc = acc + w * v;
        total += w;
      }
      if (total == 0) return b.vertices()[0];
      return Point(acc.x / total, acc.y / total);
    };
    for (std::uint64_t s = 0; s < 40; ++s) {
      const Body k = random_polygon(s, false, 3);
      const Body l = reflect(k, midpoint(k.vertices()[0], k.vertices()[1]));
      REQUIRE(is_convex_union(k, l));
      Rng rng(s);
      for (int i = 0; i < 50; ++i) {
        const Point m = midpoint(random_point_in(rng, k), random_point_in(rng, l));
        CHECK((contains(k, m) || contains(l, m)));
      }
    }
    // Disjoint translates: the returned gap point lies in neither body.
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Body k = random_polygon(s, false);
      const Body l = translate(k, P(500, 3));
      const auto gap = union_gap(k, l);
      REQUIRE(gap.has_value());
      CHECK_FALSE(contains(k, *gap));
      CHECK_FALSE(contains(l, *gap));
    }
  }

  TEST_CASE("equivariance helpers") {
    CHECK(scale(t0(), Rat(1) / 2) == poly({P(0, 0), P(2, 0), P(0, 2)}));
    CHECK(translate(t0(), P(1, 2)).vertices()[0] == P(1, 2));
    for (size_t i = 0; i < 3; ++i) {
      const Point e = t0().edge(i);
      CHECK(edge_normal(t0(), i) == Direction(Point(e.y, -e.x)));
    }
  }
}
