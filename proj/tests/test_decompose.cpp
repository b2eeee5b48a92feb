// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "cvxpt/decompose.hpp"
#include "cvxpt/errors.hpp"
#include "support.hpp"

using namespace cvxpt;
using namespace fixtures;

namespace {

bool zero_symmetric(const Body& s) {
  return s.kind() == BodyKind::segment && s.vertices()[0] == -s.vertices()[1];
}

// Independent recomposition: pairwise-hull sums.
Body recompose(const Decomposition& d) {
  Body acc = d.core;
  for (const auto& s : d.summands) acc = pairwise_sum(acc, s);
  return acc;
}

}  // namespace

TEST_SUITE("decompose") {
  TEST_CASE("square: one extraction") {
    const auto ex = extract_parallel_summand(unit_square());
    REQUIRE(ex.has_value());
    CHECK(ex->summand == Body::make_segment(Q(-1, 2, 0, 1), Q(1, 2, 0, 1)));
    CHECK(ex->core == Body::make_segment(Q(1, 2, 0, 1), Q(1, 2, 1, 1)));
    CHECK(pairwise_sum(ex->core, ex->summand) == unit_square());
  }

  TEST_CASE("no pair, no extraction") {
    CHECK_FALSE(extract_parallel_summand(t0()).has_value());
    CHECK_FALSE(extract_parallel_summand(p5()).has_value());
    CHECK_THROWS_AS(extract_parallel_summand(Body::make_point(P(0, 0))), PreconditionError);
  }

  TEST_CASE("hexagon extracts the first canonical pair") {
    const auto ex = extract_parallel_summand(hexagon());
    REQUIRE(ex.has_value());
    // Edge directions (1,0), (1,2), (-1,2) up to sign; (1,0) comes first.
    CHECK(ex->step.direction == Direction(Rat(1), Rat(0)));
    CHECK(ex->summand == Body::make_segment(P(-1, 0), P(1, 0)));
    CHECK(pairwise_sum(ex->core, ex->summand) == hexagon());
  }

  TEST_CASE("full decompositions") {
    const Decomposition sq = decompose(unit_square());
    CHECK(sq.core == Body::make_point(Q(1, 2, 1, 2)));
    REQUIRE(sq.summands.size() == 2);
    CHECK(sq.summands[0] == Body::make_segment(Q(-1, 2, 0, 1), Q(1, 2, 0, 1)));
    CHECK(sq.summands[1] == Body::make_segment(Q(0, 1, -1, 2), Q(0, 1, 1, 2)));
    CHECK(verify_decomposition(unit_square(), sq));

    const Decomposition tri = decompose(t0());
    CHECK(tri.core == t0());
    CHECK(tri.summands.empty());

    const Body sx = Body::make_segment(P(-1, 0), P(1, 0));
    const Decomposition plus = decompose(minkowski_sum(t0(), sx));
    CHECK(plus.core == t0());
    REQUIRE(plus.summands.size() == 1);
    CHECK(plus.summands[0] == sx);

    const Decomposition hex = decompose(hexagon());
    CHECK(hex.core.kind() == BodyKind::point);
    CHECK(hex.core.vertices()[0] == P(0, 0));
    CHECK(hex.summands.size() == 3);
    CHECK(recompose(hex) == hexagon());
  }

  TEST_CASE("verify_decomposition catches a dropped summand") {
    Decomposition d = decompose(unit_square());
    d.summands.pop_back();
    CHECK_FALSE(verify_decomposition(unit_square(), d));
    Decomposition e = decompose(unit_square());
    e.summands[0] = Body::make_segment(P(0, 0), P(1, 0));  // not centred
    e.core = translate(e.core, Q(-1, 2, 0, 1));
    CHECK_FALSE(verify_decomposition(unit_square(), e));
  }

  TEST_CASE("random roundtrips") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      Rng rng(s);
      GenOptions opt;
      opt.n = static_cast<int>(rng.uniform_int(3, 20));
      opt.with_summands = static_cast<int>(rng.uniform_int(0, 3));
      opt.seed = s;
      opt.range = 40;
      const Generated g = generate_body(opt);
      const Decomposition d = decompose(g.body);
      CHECK(verify_decomposition(g.body, d));
      CHECK(recompose(d) == g.body);
      for (const auto& seg : d.summands) CHECK(zero_symmetric(seg));
      if (d.core.kind() == BodyKind::polygon) CHECK_FALSE(find_parallel_edges(d.core).has_value());
      const Decomposition rev = decompose(g.body, PairOrder::descending);
      CHECK(rev.core == d.core);
      CHECK(recompose(rev) == g.body);
      // At most one summand per direction after merging.
      for (size_t i = 0; i < d.summands.size(); ++i) {
        for (size_t j = i + 1; j < d.summands.size(); ++j) {
          CHECK(cross(d.summands[i].vertices()[1], d.summands[j].vertices()[1]) != 0);
        }
      }
    }
  }

  TEST_CASE("symmetric bodies decompose to their centre") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      GenOptions opt;
      opt.n = 3 + static_cast<int>(s % 9);
      opt.seed = s;
      opt.symmetric = true;
      const Generated g = generate_body(opt);
      const Decomposition d = decompose(g.body);
      CHECK(d.core == Body::make_point(*g.center));
    }
  }

  TEST_CASE("summand_sum") {
    CHECK(summand_sum({}) == Body::make_point(P(0, 0)));
    const Body sx = Body::make_segment(P(-1, 0), P(1, 0));
    const Body sy = Body::make_segment(P(0, -1), P(0, 1));
    CHECK(summand_sum({sx, sy}) == big_square());
  }
}
