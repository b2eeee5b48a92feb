// SPDX-License-Identifier: Apache-2.0
//
// Splits a polygon K into C + S_1 + ... + S_m where each S_i is a segment
// centred at the origin and C has no pair of parallel edges.
#pragma once

#include <optional>
#include <vector>

#include "cvxpt/geom.hpp"
#include "cvxpt/middle.hpp"

namespace cvxpt {

struct TraceStep {
  Direction direction;  // undirected edge direction, upper half plane
  Point extracted;      // full vector of the removed segment
};

struct Decomposition {
  Body core;
  std::vector<Body> summands;  // segments [-h, h]
  std::vector<TraceStep> trace;
};

struct Extraction {
  Body summand;  // 0-symmetric segment
  Body core;     // summand + core == input
  TraceStep step;
};

// Removes the shorter edge of one parallel pair (chosen by `order`) as a
// 0-symmetric summand. The core is built by edge-list surgery and checked
// against h_core = h_P - h_S at every edge normal of P.
std::optional<Extraction> extract_parallel_summand(const Body& polygon,
                                                   PairOrder order = PairOrder::ascending);

// Repeats extraction until the core has no parallel pair. A segment core is
// split into its midpoint plus a 0-symmetric segment, so a centrally
// symmetric input always ends at a point core.
Decomposition decompose(const Body& body, PairOrder order = PairOrder::ascending);

bool verify_decomposition(const Body& body, const Decomposition& d);

// Sum of a summand list, starting from the origin.
Body summand_sum(const std::vector<Body>& summands);

}  // namespace cvxpt
