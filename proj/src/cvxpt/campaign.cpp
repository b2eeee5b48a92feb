// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>

#include "cvxpt/convexity.hpp"
#include "cvxpt/decompose.hpp"
#include "cvxpt/errors.hpp"
#include "cvxpt/generate.hpp"
#include "cvxpt/middle.hpp"
#include "cvxpt/smooth.hpp"

namespace cvxpt {
namespace {

using json = nlohmann::json;
using CaseFn = std::function<std::optional<std::string>(int index, std::uint64_t seed, json& metrics)>;

constexpr double kTwoPi = 2 * std::numbers::pi;

void bump(json& metrics, const char* key, double by = 1) {
  metrics[key] = metrics.value(key, 0.0) + by;
}

void keep_max(json& metrics, const char* key, double v) {
  metrics[key] = std::max(metrics.value(key, 0.0), v);
}

std::string str(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

// Polygon corpus shared by the exact suites: n uniform in [3, 40], no
// parallel edge pair.
Body corpus_polygon(std::uint64_t seed, int index) {
  const std::uint64_t s = corpus_seed(seed, static_cast<std::uint64_t>(index));
  Rng rng(s);
  GenOptions opt;
  opt.n = static_cast<int>(rng.uniform_int(3, 40));
  opt.seed = s;
  opt.no_parallel = true;
  return generate_body(opt).body;
}

std::optional<std::string> exposed_case(int index, std::uint64_t seed, json& metrics) {
  const Body p = corpus_polygon(seed, index);
  const Body a = a_body(p);
  for (const auto& z : a.vertices()) {
    bump(metrics, "points_checked");
    if (!is_convexity_point_direct(p, z)) return "exposed point " + str(z) + " of A_K is not a convexity point";
  }
  return std::nullopt;
}

std::optional<std::string> theorem_case(int index, std::uint64_t seed, json& metrics) {
  const Body p = corpus_polygon(seed, index);
  if (is_centrally_symmetric(p).symmetric) return std::string("corpus body is centrally symmetric");
  const auto certs = theorem_points(p);
  std::vector<Point> zs;
  for (const auto& c : certs) {
    if (c.method != CertificateMethod::characterization) return std::string("unexpected certificate method");
    zs.push_back(c.z);
  }
  bump(metrics, "certificates", static_cast<double>(certs.size()));
  if (certs.size() < 3) return "only " + std::to_string(certs.size()) + " certificates";
  if (affine_dim(zs) != 2) return std::string("certificates are not affinely independent");
  return std::nullopt;
}

std::optional<std::string> agreement_case(int index, std::uint64_t seed, json& metrics) {
  const Body p = corpus_polygon(seed, index);
  Rat x0 = p.vertices()[0].x, x1 = x0, y0 = p.vertices()[0].y, y1 = y0;
  for (const auto& v : p.vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  std::vector<Point> candidates;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      candidates.emplace_back(Rat(x0 + (x1 - x0) * i / 20), Rat(y0 + (y1 - y0) * j / 20));
    }
  }
  // The grid almost never hits a convexity point; add the known positives
  // and a near miss beside each.
  const Body a_k = a_body(p);
  for (const auto& a : a_k.vertices()) {
    candidates.push_back(a);
    candidates.push_back(a + Point(Rat(1) / 7, Rat(0)));
  }
  for (const auto& z : candidates) {
    const bool direct = is_convexity_point_direct(p, z);
    const bool chr = is_convexity_point_char(p, z).convexity_point;
    bump(metrics, "candidates");
    if (direct) bump(metrics, "convexity_points");
    if (direct != chr) {
      return "verdicts differ at " + str(z) + ": direct " + (direct ? "true" : "false") +
             ", characterization " + (chr ? "true" : "false");
    }
  }
  return std::nullopt;
}

std::optional<std::string> roundtrip_case(int index, std::uint64_t seed, json& metrics) {
  const std::uint64_t s = corpus_seed(seed, static_cast<std::uint64_t>(index));
  Rng rng(s);
  GenOptions opt;
  opt.n = static_cast<int>(rng.uniform_int(3, 40));
  opt.with_summands = static_cast<int>(rng.uniform_int(1, 3));
  opt.seed = s;
  const Body k = generate_body(opt).body;

  const Decomposition d = decompose(k);
  if (!verify_decomposition(k, d)) return std::string("verify_decomposition failed");
  if (d.core.kind() == BodyKind::polygon && find_parallel_edges(d.core)) {
    return std::string("core has a parallel edge pair");
  }
  const Decomposition rev = decompose(k, PairOrder::descending);
  if (rev.core != d.core) return std::string("core depends on extraction order");
  bump(metrics, "summands", static_cast<double>(d.summands.size()));
  for (const auto& c : theorem_points(d.core)) {
    bump(metrics, "certificates");
    if (!is_convexity_point_direct(k, c.z)) return "core certificate " + str(c.z) + " does not transfer";
  }
  return std::nullopt;
}

std::optional<std::string> symmetric_case(int index, std::uint64_t seed, json&) {
  const std::uint64_t s = corpus_seed(seed, static_cast<std::uint64_t>(index));
  Rng rng(s);
  GenOptions opt;
  opt.n = static_cast<int>(rng.uniform_int(3, 20));
  opt.symmetric = true;
  opt.seed = s;
  const Generated g = generate_body(opt);
  const auto certs = theorem_points(g.body);
  if (certs.size() != 1) return "expected one certificate, got " + std::to_string(certs.size());
  if (certs[0].method != CertificateMethod::symmetric_center) return std::string("wrong certificate method");
  if (certs[0].z != *g.center) return "centre " + str(certs[0].z) + " != construction " + str(*g.center);
  if (!is_convexity_point_direct(g.body, certs[0].z)) return std::string("direct test rejects the centre");
  return std::nullopt;
}

std::vector<int> random_orders(Rng& rng) {
  const int top = static_cast<int>(rng.uniform_int(2, 7));
  std::vector<int> orders;
  for (int k = 2; k <= top; ++k) {
    if (k == top || rng.uniform_int(0, 1) == 1) orders.push_back(k);
  }
  return orders;
}

std::optional<std::string> derivative_case(int index, std::uint64_t seed, json& metrics) {
  Rng rng(corpus_seed(seed, static_cast<std::uint64_t>(index)));
  const SmoothBody body = random_smooth_body(rng, random_orders(rng), 0.1);
  for (int i = 0; i < 1000; ++i) {
    const double phi = rng.uniform(0, kTwoPi);
    const double r = fd_check_lemma4(body, phi, 1e-4);
    keep_max(metrics, "max_residual", r);
    if (!(r < kTolerances.derivative)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "residual %.3e at phi=%.17g", r, phi);
      return std::string(buf);
    }
  }
  for (int i = 0; i < 50; ++i) {
    const double phi = rng.uniform(0, kTwoPi);
    const double r3 = fd_check_lemma4(body, phi, 1e-3);
    const double r4 = fd_check_lemma4(body, phi, 1e-4);
    const double r5 = fd_check_lemma4(body, phi, 1e-5);
    if (r4 > 1.1 * r3 || r5 > 1.1 * r4) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "residual not decreasing at phi=%.17g: %.3e %.3e %.3e", phi, r3, r4, r5);
      return std::string(buf);
    }
  }
  return std::nullopt;
}

// Even indices: first harmonic plus even orders only. Odd indices: at least
// one odd order k >= 3 with a coefficient of magnitude >= 0.05.
std::optional<std::string> odd_harmonic_case(int index, std::uint64_t seed, json& metrics) {
  Rng rng(corpus_seed(seed, static_cast<std::uint64_t>(index)));
  const bool symmetric = index % 2 == 0;
  std::vector<Harmonic> hs{{1, rng.uniform(-2, 2), rng.uniform(-2, 2)}};
  double load = 0;
  for (int k = 2; k <= 8; ++k) {
    if (k % 2 == 1 && symmetric) continue;
    if (rng.uniform_int(0, 1) == 0) continue;
    Harmonic h{k, rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)};
    load += (k * k - 1.0) * (std::abs(h.a) + std::abs(h.b));
    hs.push_back(h);
  }
  if (!symmetric) {
    const int k = static_cast<int>(2 * rng.uniform_int(1, 3) + 1);
    auto it = std::find_if(hs.begin(), hs.end(), [k](const Harmonic& h) { return h.k == k; });
    if (it == hs.end()) it = hs.insert(hs.end(), Harmonic{k, 0, 0});
    load -= (k * k - 1.0) * (std::abs(it->a) + std::abs(it->b));
    const double mag = rng.uniform(0.05, 0.15);
    it->a = rng.uniform_int(0, 1) == 0 ? mag : -mag;
    load += (k * k - 1.0) * (std::abs(it->a) + std::abs(it->b));
  }
  hs.push_back({0, 1.0 + load, 0});
  const SmoothBody body = SmoothBody::make(std::move(hs), 0.1);
  const double r = symmetry_residual(body);
  if (symmetric) {
    keep_max(metrics, "max_symmetric_residual", r);
    if (r > 1e-12) return "symmetric body has residual " + std::to_string(r);
  } else {
    const double prev = metrics.value("min_asymmetric_residual", INFINITY);
    metrics["min_asymmetric_residual"] = std::min(prev, r);
    if (r < 0.1) return "asymmetric body has residual " + std::to_string(r);
  }
  return std::nullopt;
}

std::optional<std::string> profile_case(int index, std::uint64_t seed, json& metrics) {
  const Body p = corpus_polygon(seed, index);
  const Body a = a_body(p);
  for (const auto& z : a.vertices()) {
    const InterceptProfile prof = middle_intercept_profile(p, z, 2001);
    bump(metrics, "profiles");
    if (!frame_is_strict(a, prof)) return "frame at " + str(z) + " is not strict";
    if (prof.monotone_violations != 0) {
      return std::to_string(prof.monotone_violations) + " monotonicity violations at " + str(z);
    }
    if (prof.zero_runs > 1) return "zero set is not connected at " + str(z);
  }
  return std::nullopt;
}

const std::map<std::string, CaseFn>& suite_table() {
  static const std::map<std::string, CaseFn> table{
      {"lemma6", exposed_case},
      {"theorem", theorem_case},
      {"lemma2-agreement", agreement_case},
      {"decompose-roundtrip", roundtrip_case},
      {"symmetric", symmetric_case},
      {"lemma4", derivative_case},
      {"odd-harmonics", odd_harmonic_case},
      {"profile", profile_case},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& campaign_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    return v;
  }();
  return names;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport run_campaign(const std::string& suite, int count, std::uint64_t seed) {
  const auto& table = suite_table();
  const auto it = table.find(suite);
  if (it == table.end()) throw InputError("unknown suite '" + suite + "'");
  if (count < 0) throw InputError("count must be nonnegative");

  RunReport report;
  report.suite = suite;
  report.seed = seed;
  report.count = count;
  report.generator = kGeneratorId;
  report.input_digest = fnv1a_hex(suite + "|" + std::to_string(count) + "|" + std::to_string(seed));

  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < count; ++i) {
    std::optional<std::string> failure;
    try {
      failure = it->second(i, seed, report.metrics);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++report.failed;
      if (report.failures.size() < kMaxReported) report.failures.push_back({i, *failure});
    } else {
      ++report.passed;
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const RunReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"index", f.index}, {"message", f.message}});
  return {{"command", r.command},   {"suite", r.suite},
          {"seed", r.seed},         {"count", r.count},
          {"input_digest", r.input_digest},
          {"generator", r.generator},
          {"passed", r.passed},     {"failed", r.failed},
          {"failures", failures},   {"wall_seconds", r.wall_seconds},
          {"metrics", r.metrics}};
}

}  // namespace cvxpt
