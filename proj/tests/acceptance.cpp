// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Uses only the C interface.
#include <cvxpt/cvxpt.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CVXPT_GOLDEN_DIR
#error "CVXPT_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { cvxpt_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

void campaign(int id, const std::string& name, const char* suite, int count, double budget_s) {
  const auto t0 = std::chrono::steady_clock::now();
  int failed = -1;
  Str out;
  const cvxpt_status st = cvxpt_campaign(suite, count, 1, &failed, &out.p);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (st != CVXPT_OK) {
    report(id, name, false, std::string("error: ") + cvxpt_last_error());
    return;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d cases, %d failed, %.1f s", count, failed, secs);
  std::string detail = buf;
  bool ok = failed == 0;
  if (budget_s > 0 && secs >= budget_s) {
    ok = false;
    std::snprintf(buf, sizeof buf, " (budget %.0f s exceeded)", budget_s);
    detail += buf;
  }
  if (failed > 0) detail += " " + out.s();
  report(id, name, ok, detail);
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(CVXPT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool load(const char* text, cvxpt_body** out) { return cvxpt_body_parse(text, 0, out) == CVXPT_OK; }

void known_values() {
  std::string detail;
  bool ok = true;
  auto expect = [&](const std::string& golden, const std::string& got) {
    if (read_golden(golden) != got + "\n") {
      ok = false;
      detail += golden + " differs; ";
    }
  };

  cvxpt_body* t0 = nullptr;
  cvxpt_body* sq = nullptr;
  if (!load(R"({"type":"polygon","vertices":[[0,0],[4,0],[0,4]]})", &t0) ||
      !load(R"({"type":"polygon","vertices":[[0,0],[1,0],[1,1],[0,1]]})", &sq)) {
    report(9, "known values", false, cvxpt_last_error());
    return;
  }
  cvxpt_body* a = nullptr;
  Str a_text, t0_points, sq_points, sq_dec;
  if (cvxpt_a_body(t0, &a) != CVXPT_OK || cvxpt_body_emit(a, &a_text.p) != CVXPT_OK ||
      cvxpt_theorem_points(t0, &t0_points.p) != CVXPT_OK ||
      cvxpt_theorem_points(sq, &sq_points.p) != CVXPT_OK ||
      cvxpt_decompose(sq, &sq_dec.p) != CVXPT_OK) {
    ok = false;
    detail += std::string("error: ") + cvxpt_last_error();
  } else {
    expect("t0_a_body.json", a_text.s());
    expect("t0_points.json", t0_points.s());
    expect("square_points.json", sq_points.s());
    expect("square_decompose.json", sq_dec.s());
  }
  cvxpt_body_free(a);
  cvxpt_body_free(t0);
  cvxpt_body_free(sq);
  report(9, "known values", ok, ok ? "4 golden files byte-identical" : detail);
}

}  // namespace

int main() {
  campaign(1, "exposed points of A_K are convexity points", "lemma6", 500, 120);
  campaign(2, "theorem certificates", "theorem", 500, 0);
  campaign(3, "characterization agrees with direct test", "lemma2-agreement", 100, 180);
  campaign(4, "decomposition roundtrip", "decompose-roundtrip", 200, 0);
  campaign(5, "symmetric pipeline", "symmetric", 100, 0);
  campaign(6, "smooth one-sided derivative numerics", "lemma4", 20, 0);
  campaign(7, "smooth symmetry residual", "odd-harmonics", 40, 0);
  campaign(8, "intercept profile", "profile", 50, 0);
  known_values();
  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
