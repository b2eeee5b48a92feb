// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/rational.hpp"

#include <cmath>

#include "cvxpt/errors.hpp"

namespace cvxpt {
namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) {
    throw InputError("not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return Rat(mpz_class(std::string(num)));
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den) || den[0] == '-') {
    throw InputError("not a rational: '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  if (gcd(n, d) != 1 || d == 1) {
    throw InputError("rational not in lowest terms: '" + std::string(text) + "'");
  }
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rat& r) { return r.get_d(); }

Rat from_double(double v) {
  if (!std::isfinite(v)) throw InputError("non-finite value");
  return Rat(v);
}

}  // namespace cvxpt
