// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cvxpt {

// Malformed or invalid input data (bad file, zero direction, non-convex ring).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A valid body that does not meet an operation's hypothesis, e.g. middle_set
// on a direction carrying a parallel edge pair.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An independent re-check disagreed with a computed result.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cvxpt
