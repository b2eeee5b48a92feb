// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cvxpt {

// Exact scalar. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation. The (num, den) constructor
// does not canonicalize; build fractions by division instead.
using Rat = mpq_class;

// Parses "n" or "p/q" (optional leading '-'). Rejects a zero or negative
// denominator and fractions that are not in lowest terms.
Rat parse_rat(std::string_view text);

// Lowest-terms text: "n" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

double to_double(const Rat& r);

// Exact conversion of a finite double (every finite double is a dyadic rational).
Rat from_double(double v);

}  // namespace cvxpt
