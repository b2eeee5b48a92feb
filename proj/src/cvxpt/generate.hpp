// SPDX-License-Identifier: Apache-2.0
//
// Seeded corpus generator. The stream is std::mt19937_64 (fully specified by
// the standard) with rejection-sampled bounded integers, so corpora are
// reproducible independent of the standard library's distributions.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cvxpt/geom.hpp"
#include "cvxpt/smooth.hpp"

namespace cvxpt {

inline constexpr const char* kGeneratorId = "mt19937_64+rejection/v1";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

// Seed of the index-th member of a corpus (splitmix64 of the pair).
std::uint64_t corpus_seed(std::uint64_t seed, std::uint64_t index);

struct GenOptions {
  int n = 12;                 // lattice points sampled per attempt
  std::uint64_t seed = 0;
  bool no_parallel = false;   // resample until no parallel edge pair
  bool symmetric = false;     // hull(V U -V) + t
  int with_summands = 0;      // Minkowski-add this many random segments
  std::int64_t range = 1000;  // coordinates in [-range, range]
};

struct Generated {
  Body body;
  std::optional<Point> center;  // symmetric construction centre
  Body base;                    // body before summands were added
};

// Throws InputError when n < 3 or with_summands < 0.
Generated generate_body(const GenOptions& opt);

// Random valid smooth body: a_0 chosen so that h + h'' >= 1 everywhere.
// `orders` lists the harmonic orders to populate (besides 0 and 1).
SmoothBody random_smooth_body(Rng& rng, const std::vector<int>& orders, double coeff_bound);

}  // namespace cvxpt
