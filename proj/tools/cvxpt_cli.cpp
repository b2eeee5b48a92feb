// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvxpt/cvxpt.h"

namespace {

using json = nlohmann::json;

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kInternal = 3 };

struct Failure {
  int code;
  std::string message;
};

struct CString {
  char* p = nullptr;
  ~CString() { cvxpt_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using BodyPtr = std::unique_ptr<cvxpt_body, decltype(&cvxpt_body_free)>;
using SmoothPtr = std::unique_ptr<cvxpt_smooth, decltype(&cvxpt_smooth_free)>;

void check(cvxpt_status s) {
  if (s == CVXPT_OK) return;
  const std::string msg = std::string(cvxpt_status_name(s)) + ": " + cvxpt_last_error();
  switch (s) {
    case CVXPT_ERR_INPUT:
    case CVXPT_ERR_PRECONDITION:
    case CVXPT_ERR_ARGUMENT:
      throw Failure{kInput, msg};
    case CVXPT_ERR_VERIFICATION:
      throw Failure{kViolation, msg};
    default:
      throw Failure{kInternal, msg};
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInput, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_smooth_text(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  return j.is_object() && j.contains("harmonics");
}

BodyPtr load_body(const std::string& text) {
  cvxpt_body* b = nullptr;
  check(cvxpt_body_parse(text.c_str(), 0, &b));
  return {b, cvxpt_body_free};
}

SmoothPtr load_smooth(const std::string& text) {
  cvxpt_smooth* b = nullptr;
  check(cvxpt_smooth_parse(text.c_str(), &b));
  return {b, cvxpt_smooth_free};
}

std::string coord(const json& c) { return c.is_string() ? c.get<std::string>() : c.dump(); }

std::string pt(const json& p) { return "(" + coord(p[0]) + ", " + coord(p[1]) + ")"; }

std::string pts(const json& list) {
  std::string s;
  for (const auto& p : list) s += (s.empty() ? "" : " ") + pt(p);
  return s;
}

std::string body_text(const json& b) { return b["type"].get<std::string>() + " " + pts(b["vertices"]); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::optional<double> tolerance;
  bool records() const { return format == "records"; }
};

void emit(const Globals& g, const json& doc, const std::string& text) {
  if (g.records()) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_gen(const Globals& g, int n, bool no_parallel, bool symmetric, int summands) {
  cvxpt_gen_options opt{n, g.seed, no_parallel, symmetric, summands};
  cvxpt_body* b = nullptr;
  check(cvxpt_generate(&opt, &b));
  BodyPtr body(b, cvxpt_body_free);
  CString out;
  check(cvxpt_body_emit(body.get(), &out.p));
  std::cout << out.str() << '\n';
  return kOk;
}

int cmd_info(const Globals& g, const std::string& file) {
  const std::string text = read_file(file);
  CString out;
  if (is_smooth_text(text)) {
    auto s = load_smooth(text);
    check(cvxpt_smooth_info(s.get(), g.tolerance.value_or(1e-12), &out.p));
    const json j = json::parse(out.str());
    emit(g, j,
         "smooth body, " + std::to_string(j["harmonics"].size()) + " harmonics\n" +
             "min h+h'': " + num(j["curvature_margin"]) + "\n" +
             "symmetry residual: " + num(j["symmetry_residual"]) + "\n" +
             "centrally symmetric: " + (j["centrally_symmetric"].get<bool>() ? "yes" : "no") + "\n");
    return kOk;
  }
  auto b = load_body(text);
  check(cvxpt_body_info(b.get(), &out.p));
  const json j = json::parse(out.str());
  std::string t = body_text(j) + "\n";
  t += "dimension: " + std::to_string(j["dimension"].get<int>()) + "\n";
  t += "centrally symmetric: ";
  t += j["centrally_symmetric"].get<bool>() ? "yes, centre " + pt(j["center"]) : std::string("no");
  t += "\nparallel edges: ";
  t += j["parallel_edges"].get<bool>() ? "yes\n" : "no\n";
  emit(g, j, t);
  return kOk;
}

int cmd_points(const Globals& g, const std::string& file, int m, int boundary) {
  const std::string text = read_file(file);
  CString out;
  if (is_smooth_text(text)) {
    auto s = load_smooth(text);
    int failed = 0;
    check(cvxpt_smooth_points(s.get(), m, boundary, g.tolerance.value_or(1e-6), &failed, &out.p));
    const json j = json::parse(out.str());
    std::string t;
    for (const auto& c : j["convexity_points"]) {
      t += "(" + num(c["z"][0]) + ", " + num(c["z"][1]) + ") gap " + num(c["cover_gap"]) +
           (c["ok"].get<bool>() ? "\n" : "  FAIL\n");
    }
    t += std::to_string(j["convexity_points"].size() - failed) + "/" +
         std::to_string(j["convexity_points"].size()) + " vertices of A_K pass\n";
    emit(g, j, t);
    return failed == 0 ? kOk : kViolation;
  }
  auto b = load_body(text);
  check(cvxpt_theorem_points(b.get(), &out.p));
  const json j = json::parse(out.str());
  std::string t;
  for (const auto& c : j["certificates"]) {
    t += pt(c["z"]) + " " + c["method"].get<std::string>();
    if (!c["witnesses"].empty()) t += " witnesses " + pts(c["witnesses"]);
    if (c.contains("degenerate")) t += " (degenerate body)";
    t += "\n";
  }
  t += std::string("affinely independent: ") + (j["affinely_independent"].get<bool>() ? "true" : "false") + "\n";
  emit(g, j, t);
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& file, const std::string& z) {
  auto b = load_body(read_file(file));
  CString out;
  int agree = 1;
  check(cvxpt_verify(b.get(), z.c_str(), &agree, &out.p));
  const json j = json::parse(out.str());
  std::string t = "direct: " + std::string(j["direct"].get<bool>() ? "true" : "false") + "\n";
  const json& ch = j["characterization"];
  t += "characterization: " + (ch.is_boolean() ? std::string(ch.get<bool>() ? "true" : "false") : ch.get<std::string>()) + "\n";
  if (j.contains("witnesses")) t += "witness directions: " + pts(j["witnesses"]) + "\n";
  if (j.contains("violation")) t += "violating direction: " + pt(j["violation"]) + "\n";
  if (j.contains("nonconvexity_witness") && !j["nonconvexity_witness"].is_null()) {
    t += "nonconvexity witness: " + pt(j["nonconvexity_witness"]) + "\n";
  }
  if (!agree) t += "DISAGREEMENT between direct test and characterization\n";
  emit(g, j, t);
  return agree ? kOk : kViolation;
}

int cmd_a_body(const Globals& g, const std::string& file, bool events) {
  auto b = load_body(read_file(file));
  if (events) {
    CString out;
    check(cvxpt_antipodal_events(b.get(), &out.p));
    const json j = json::parse(out.str());
    std::string t;
    for (const auto& ev : j) {
      t += "[" + pt(ev["arc"][0]) + " .. " + pt(ev["arc"][1]) + "]  +: " + pts(ev["face_pos"]["vertices"]) +
           "  -: " + pts(ev["face_neg"]["vertices"]) + "\n";
    }
    emit(g, j, t);
    return kOk;
  }
  cvxpt_body* a = nullptr;
  check(cvxpt_a_body(b.get(), &a));
  BodyPtr ab(a, cvxpt_body_free);
  CString out;
  check(cvxpt_body_emit(ab.get(), &out.p));
  const json j = json::parse(out.str());
  emit(g, j, body_text(j) + "\n");
  return kOk;
}

int cmd_decompose(const Globals& g, const std::string& file) {
  auto b = load_body(read_file(file));
  CString out;
  check(cvxpt_decompose(b.get(), &out.p));
  const json j = json::parse(out.str());
  std::string t = "core: " + body_text(j["core"]) + "\n";
  for (const auto& s : j["summands"]) t += "summand: " + body_text(s) + "\n";
  for (const auto& s : j["trace"]) {
    t += "step: direction " + pt(s["direction"]) + " extracted " + pt(s["extracted"]) + "\n";
  }
  emit(g, j, t);
  return kOk;
}

int cmd_profile(const Globals& g, const std::string& file, int samples, double step) {
  const std::string text = read_file(file);
  CString out;
  int violations = 0;
  if (is_smooth_text(text)) {
    auto s = load_smooth(text);
    check(cvxpt_smooth_sweep(s.get(), samples, step, g.tolerance.value_or(1e-6), &violations, &out.p));
    const json j = json::parse(out.str());
    if (g.records()) {
      for (const auto& r : j) std::cout << r.dump() << '\n';
    } else {
      std::cout << "phi p p' residual\n";
      for (const auto& r : j) {
        std::cout << num(r["phi"]) << ' ' << num(r["p"]) << ' ' << num(r["p_prime"]) << ' ' << num(r["residual"])
                  << '\n';
      }
      std::cout << violations << " residuals at or above tolerance\n";
    }
    return violations == 0 ? kOk : kViolation;
  }
  auto b = load_body(text);
  check(cvxpt_profile(b.get(), samples, g.tolerance.value_or(1e-9), &violations, &out.p));
  const json j = json::parse(out.str());
  std::string t;
  for (const auto& p : j["profiles"]) {
    t += pt(p["frame"]["origin"]) + " e2 " + pt(p["frame"]["e2"]) + ": " + std::to_string(p["samples"].size()) +
         " samples, violations " + std::to_string(p["violations"].get<int>()) + ", strict frame " +
         (p["strict_frame"].get<bool>() ? "yes" : "no") + "\n";
  }
  emit(g, j, t);
  return violations == 0 ? kOk : kViolation;
}

int cmd_campaign(const Globals& g, int count, const std::string& suite) {
  CString out;
  int failed = 0;
  check(cvxpt_campaign(suite.c_str(), count, g.seed, &failed, &out.p));
  const json j = json::parse(out.str());
  std::string t = suite + ": " + std::to_string(j["passed"].get<int>()) + " passed, " + std::to_string(failed) +
                  " failed in " + num(j["wall_seconds"]) + " s (seed " + std::to_string(g.seed) + ", " +
                  j["generator"].get<std::string>() + ")\n";
  for (const auto& f : j["failures"]) {
    t += "  #" + std::to_string(f["index"].get<int>()) + ": " + f["message"].get<std::string>() + "\n";
  }
  emit(g, j, t);
  return failed == 0 ? kOk : kViolation;
}

int cmd_render(const std::string& file, const std::string& z, bool a_body, bool certs, const std::string& output) {
  auto b = load_body(read_file(file));
  CString out;
  check(cvxpt_render_svg(b.get(), z.empty() ? nullptr : z.c_str(), a_body, certs, &out.p));
  if (output.empty() || output == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw Failure{kInput, "cannot write '" + output + "'"};
    f << out.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convexity points of planar convex bodies"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for gen and campaign");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--tolerance", g.tolerance, "Numeric tolerance (smooth bodies and profiles)")
      ->check(CLI::PositiveNumber);

  int result = kOk;
  std::function<int()> run;

  auto* gen = app.add_subcommand("gen", "Generate a random body file");
  int gen_n = 0, gen_summands = 0;
  bool gen_noparallel = false, gen_symmetric = false;
  gen->add_option("n", gen_n, "Lattice points sampled")->required();
  gen->add_flag("--no-parallel", gen_noparallel, "No parallel edge pair");
  gen->add_flag("--symmetric", gen_symmetric, "Centrally symmetric body");
  gen->add_option("--with-summands", gen_summands, "Add k random segments")->check(CLI::NonNegativeNumber);
  gen->callback([&] { run = [&] { return cmd_gen(g, gen_n, gen_noparallel, gen_symmetric, gen_summands); }; });

  std::string file;
  auto* info = app.add_subcommand("info", "Describe a body");
  info->add_option("file", file, "Body file ('-' for stdin)")->required();
  info->callback([&] { run = [&] { return cmd_info(g, file); }; });

  int pts_m = 720, pts_boundary = 4096;
  auto* points = app.add_subcommand("points", "Certified convexity points");
  points->add_option("file", file, "Body file")->required();
  points->add_option("--curve-samples", pts_m, "Smooth bodies: samples of the middle-set curve");
  points->add_option("--boundary-samples", pts_boundary, "Smooth bodies: boundary polygon size");
  points->callback([&] { run = [&] { return cmd_points(g, file, pts_m, pts_boundary); }; });

  std::string z;
  auto* verify = app.add_subcommand("verify", "Test a candidate point both ways");
  verify->add_option("file", file, "Body file")->required();
  verify->add_option("z", z, "Candidate point x,y")->required();
  verify->callback([&] { run = [&] { return cmd_verify(g, file, z); }; });

  bool events = false;
  auto* abody = app.add_subcommand("a-body", "Hull of all middle sets");
  abody->add_option("file", file, "Body file")->required();
  abody->add_flag("--events", events, "List the antipodal face events instead");
  abody->callback([&] { run = [&] { return cmd_a_body(g, file, events); }; });

  auto* decomp = app.add_subcommand("decompose", "Split off centred segment summands");
  decomp->add_option("file", file, "Body file")->required();
  decomp->callback([&] { run = [&] { return cmd_decompose(g, file); }; });

  int prof_samples = 1001;
  double prof_step = 1e-4;
  auto* profile = app.add_subcommand("profile", "Intercept profiles, or the smooth derivative sweep");
  profile->add_option("file", file, "Body file")->required();
  profile->add_option("--samples", prof_samples, "Samples per profile or sweep")->check(CLI::PositiveNumber);
  profile->add_option("--step", prof_step, "Smooth bodies: finite-difference step")->check(CLI::Range(1e-6, 1e-3));
  profile->callback([&] { run = [&] { return cmd_profile(g, file, prof_samples, prof_step); }; });

  int camp_count = 0;
  std::string camp_suite;
  auto* campaign = app.add_subcommand("campaign", "Run a seeded property suite");
  campaign->add_option("count", camp_count, "Number of inputs")->required()->check(CLI::NonNegativeNumber);
  campaign->add_option("suite", camp_suite, "Suite name")->required();
  campaign->callback([&] { run = [&] { return cmd_campaign(g, camp_count, camp_suite); }; });

  bool r_abody = false, r_certs = false;
  std::string r_out;
  auto* render = app.add_subcommand("render", "SVG figure");
  render->add_option("file", file, "Body file")->required();
  render->add_option("--z", z, "Draw 2z - K and mark z");
  render->add_flag("--a-body", r_abody, "Hatched A_K layer");
  render->add_flag("--certificates", r_certs, "Mark every certified point");
  render->add_option("-o,--output", r_out, "Output file (default stdout)");
  render->callback([&] { run = [&] { return cmd_render(file, z, r_abody, r_certs, r_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    result = run();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return result;
}
