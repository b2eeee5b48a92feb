// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/generate.hpp"

#include <cmath>
#include <limits>

#include "cvxpt/errors.hpp"
#include "cvxpt/middle.hpp"

namespace cvxpt {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t corpus_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Point lattice_point(Rng& rng, std::int64_t range) {
  return {rng.uniform_int(-range, range), rng.uniform_int(-range, range)};
}

}  // namespace

Generated generate_body(const GenOptions& opt) {
  if (opt.n < 3) throw InputError("generator needs n >= 3");
  if (opt.with_summands < 0) throw InputError("summand count must be nonnegative");
  Rng rng(opt.seed);

  std::optional<Point> center;
  std::optional<Body> base;
  while (!base) {
    std::vector<Point> pts;
    for (int i = 0; i < opt.n; ++i) pts.push_back(lattice_point(rng, opt.range));
    if (opt.symmetric) {
      const size_t half = pts.size();
      for (size_t i = 0; i < half; ++i) pts.push_back(-pts[i]);
    }
    Body h = hull(pts);
    if (h.kind() != BodyKind::polygon) continue;
    if (opt.no_parallel && find_parallel_edges(h)) continue;
    if (opt.symmetric) {
      Point t = lattice_point(rng, opt.range);
      h = translate(h, t);
      center = t;
    }
    base = std::move(h);
  }

  Body body = *base;
  for (int i = 0; i < opt.with_summands; ++i) {
    const std::int64_t r = std::max<std::int64_t>(1, opt.range / 3);
    Point a = lattice_point(rng, r);
    Point b = lattice_point(rng, r);
    while (b == a) b = lattice_point(rng, r);
    body = minkowski_sum(body, Body::make_segment(a, b));
    if (center) center = *center + midpoint(a, b);
  }
  return {std::move(body), center, std::move(*base)};
}

SmoothBody random_smooth_body(Rng& rng, const std::vector<int>& orders, double coeff_bound) {
  std::vector<Harmonic> hs;
  double curvature_load = 0;
  hs.push_back({1, rng.uniform(-2, 2), rng.uniform(-2, 2)});
  for (int k : orders) {
    if (k < 2) continue;
    Harmonic hk{k, rng.uniform(-coeff_bound, coeff_bound), rng.uniform(-coeff_bound, coeff_bound)};
    curvature_load += (k * k - 1.0) * (std::abs(hk.a) + std::abs(hk.b));
    hs.push_back(hk);
  }
  hs.push_back({0, 1.0 + curvature_load, 0});
  return SmoothBody::make(std::move(hs), 0.1);
}

}  // namespace cvxpt
