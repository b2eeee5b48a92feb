// SPDX-License-Identifier: Apache-2.0
//
// Seeded property suites over generated corpora.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cvxpt {

struct CaseFailure {
  int index = 0;
  std::string message;
};

struct RunReport {
  std::string command = "campaign";
  std::string suite;
  std::uint64_t seed = 0;
  int count = 0;
  std::string input_digest;  // FNV-1a of suite, count and seed
  std::string generator;
  int passed = 0;
  int failed = 0;
  std::vector<CaseFailure> failures;  // sorted by index, at most kMaxReported
  double wall_seconds = 0;
  nlohmann::json metrics = nlohmann::json::object();
};

inline constexpr size_t kMaxReported = 20;

const std::vector<std::string>& campaign_suites();

// Throws InputError for an unknown suite or a negative count.
RunReport run_campaign(const std::string& suite, int count, std::uint64_t seed);

nlohmann::json to_json(const RunReport& report);

std::string fnv1a_hex(const std::string& text);

}  // namespace cvxpt
