// SPDX-License-Identifier: Apache-2.0
#include "cvxpt/cvxpt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cvxpt/campaign.hpp"
#include "cvxpt/convexity.hpp"
#include "cvxpt/decompose.hpp"
#include "cvxpt/errors.hpp"
#include "cvxpt/generate.hpp"
#include "cvxpt/io.hpp"
#include "cvxpt/middle.hpp"
#include "cvxpt/render.hpp"
#include "cvxpt/smooth.hpp"

struct cvxpt_body {
  cvxpt::Body body;
};

struct cvxpt_smooth {
  cvxpt::SmoothBody body;
};

namespace {

using cvxpt::json;

thread_local std::string g_last_error;

struct ArgumentError : std::exception {
  const char* what() const noexcept override { return "null argument"; }
};

template <class F>
cvxpt_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return CVXPT_OK;
  } catch (const cvxpt::InputError& e) {
    g_last_error = e.what();
    return CVXPT_ERR_INPUT;
  } catch (const cvxpt::PreconditionError& e) {
    g_last_error = e.what();
    return CVXPT_ERR_PRECONDITION;
  } catch (const cvxpt::VerificationError& e) {
    g_last_error = e.what();
    return CVXPT_ERR_VERIFICATION;
  } catch (const ArgumentError& e) {
    g_last_error = e.what();
    return CVXPT_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CVXPT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CVXPT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CVXPT_ERR_INTERNAL;
  }
}

template <class... Ts>
void require(const Ts*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw ArgumentError();
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup(const json& j) { return dup(j.dump()); }

// The body A_K refers to when K may carry parallel edges.
cvxpt::Body core_of(const cvxpt::Body& b) {
  if (b.kind() != cvxpt::BodyKind::polygon) return b;
  return cvxpt::decompose(b).core;
}

json vec_json(const cvxpt::Vec2& v) { return json::array({v[0], v[1]}); }

}  // namespace

extern "C" {

const char* cvxpt_version(void) { return "0.1.0"; }

const char* cvxpt_last_error(void) { return g_last_error.c_str(); }

const char* cvxpt_status_name(cvxpt_status status) {
  switch (status) {
    case CVXPT_OK: return "ok";
    case CVXPT_ERR_INPUT: return "input error";
    case CVXPT_ERR_PRECONDITION: return "precondition violated";
    case CVXPT_ERR_VERIFICATION: return "verification failed";
    case CVXPT_ERR_ARGUMENT: return "invalid argument";
    case CVXPT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void cvxpt_string_free(char* s) { std::free(s); }

cvxpt_status cvxpt_body_parse(const char* json_text, int normalize, cvxpt_body** out) {
  return guard([&] {
    require(json_text, out);
    *out = nullptr;
    cvxpt::Body b = cvxpt::body_from_json(cvxpt::parse_json_text(json_text), normalize != 0);
    *out = new cvxpt_body{std::move(b)};
  });
}

void cvxpt_body_free(cvxpt_body* body) { delete body; }

cvxpt_status cvxpt_body_emit(const cvxpt_body* body, char** out_json) {
  return guard([&] {
    require(body, out_json);
    *out_json = dup(cvxpt::emit_body(body->body));
  });
}

cvxpt_status cvxpt_body_info(const cvxpt_body* body, char** out_json) {
  return guard([&] {
    require(body, out_json);
    const cvxpt::Body& b = body->body;
    json j = cvxpt::to_json(b);
    j["dimension"] = b.dim();
    const auto sym = cvxpt::is_centrally_symmetric(b);
    j["centrally_symmetric"] = sym.symmetric;
    j["center"] = sym.center ? cvxpt::to_json(*sym.center) : json(nullptr);
    j["parallel_edges"] = b.kind() == cvxpt::BodyKind::polygon && cvxpt::find_parallel_edges(b).has_value();
    *out_json = dup(j);
  });
}

cvxpt_status cvxpt_theorem_points(const cvxpt_body* body, char** out_json) {
  return guard([&] {
    require(body, out_json);
    const auto certs = cvxpt::theorem_points(body->body);
    json list = json::array();
    std::vector<cvxpt::Point> zs;
    for (const auto& c : certs) {
      list.push_back(cvxpt::to_json(c));
      zs.push_back(c.z);
    }
    *out_json = dup(json{{"certificates", list}, {"affinely_independent", cvxpt::affine_dim(zs) == 2}});
  });
}

cvxpt_status cvxpt_verify(const cvxpt_body* body, const char* z_text, int* out_agree, char** out_json) {
  return guard([&] {
    require(body, z_text, out_agree, out_json);
    const cvxpt::Body& b = body->body;
    const cvxpt::Point z = cvxpt::parse_point_text(z_text);
    const bool direct = cvxpt::is_convexity_point_direct(b, z);
    json j{{"z", cvxpt::to_json(z)}, {"direct", direct}};
    bool agree = true;
    if (b.kind() != cvxpt::BodyKind::polygon) {
      j["characterization"] = "n/a: not two-dimensional";
    } else if (cvxpt::find_parallel_edges(b)) {
      j["characterization"] = "n/a: parallel edges";
    } else {
      const auto ch = cvxpt::is_convexity_point_char(b, z);
      j["characterization"] = ch.convexity_point;
      json w = json::array();
      for (const auto& d : ch.witnesses) w.push_back(cvxpt::to_json(d));
      j["witnesses"] = w;
      if (ch.violation) j["violation"] = cvxpt::to_json(*ch.violation);
      agree = ch.convexity_point == direct;
    }
    if (!direct) {
      const auto gap = cvxpt::witness_nonconvexity(b, cvxpt::reflect(b, z));
      j["nonconvexity_witness"] = gap ? cvxpt::to_json(*gap) : json(nullptr);
    }
    *out_agree = agree ? 1 : 0;
    *out_json = dup(j);
  });
}

cvxpt_status cvxpt_a_body(const cvxpt_body* body, cvxpt_body** out) {
  return guard([&] {
    require(body, out);
    *out = nullptr;
    const cvxpt::Body core = core_of(body->body);
    cvxpt::Body a = core.kind() == cvxpt::BodyKind::polygon ? cvxpt::a_body(core) : core;
    *out = new cvxpt_body{std::move(a)};
  });
}

cvxpt_status cvxpt_antipodal_events(const cvxpt_body* body, char** out_json) {
  return guard([&] {
    require(body, out_json);
    json list = json::array();
    for (const auto& ev : cvxpt::antipodal_events(body->body)) list.push_back(cvxpt::to_json(ev));
    *out_json = dup(list);
  });
}

cvxpt_status cvxpt_middle_set(const cvxpt_body* body, const char* direction_text, char** out_json) {
  return guard([&] {
    require(body, direction_text, out_json);
    const cvxpt::Point v = cvxpt::parse_point_text(direction_text);
    *out_json = dup(cvxpt::to_json(cvxpt::middle_set(body->body, cvxpt::Direction(v.x, v.y))));
  });
}

cvxpt_status cvxpt_decompose(const cvxpt_body* body, char** out_json) {
  return guard([&] {
    require(body, out_json);
    const auto d = cvxpt::decompose(body->body);
    if (!cvxpt::verify_decomposition(body->body, d)) {
      throw cvxpt::VerificationError("decomposition does not sum back to the input");
    }
    *out_json = dup(cvxpt::to_json(d));
  });
}

cvxpt_status cvxpt_profile(const cvxpt_body* body, int n_samples, double tolerance, int* out_violations,
                           char** out_json) {
  return guard([&] {
    require(body, out_violations, out_json);
    const cvxpt::Body& b = body->body;
    if (b.kind() != cvxpt::BodyKind::polygon) throw cvxpt::PreconditionError("profile requires a polygon");
    const cvxpt::Body a = cvxpt::a_body(b);
    json list = json::array();
    int violations = 0;
    for (const auto& z : cvxpt::exposed_points(a)) {
      const auto prof = cvxpt::middle_intercept_profile(b, z, n_samples, tolerance);
      json j = cvxpt::to_json(prof);
      const bool strict = cvxpt::frame_is_strict(a, prof);
      j["strict_frame"] = strict;
      violations += prof.monotone_violations + (strict ? 0 : 1);
      list.push_back(std::move(j));
    }
    *out_violations = violations;
    *out_json = dup(json{{"a_body", cvxpt::to_json(a)}, {"profiles", list}});
  });
}

cvxpt_status cvxpt_generate(const cvxpt_gen_options* options, cvxpt_body** out) {
  return guard([&] {
    require(options, out);
    *out = nullptr;
    cvxpt::GenOptions opt;
    opt.n = options->n;
    opt.seed = options->seed;
    opt.no_parallel = options->no_parallel != 0;
    opt.symmetric = options->symmetric != 0;
    opt.with_summands = options->with_summands;
    *out = new cvxpt_body{cvxpt::generate_body(opt).body};
  });
}

cvxpt_status cvxpt_render_svg(const cvxpt_body* body, const char* z_text, int a_body, int certificates,
                              char** out_svg) {
  return guard([&] {
    require(body, out_svg);
    cvxpt::RenderOptions opt;
    if (z_text) opt.z = cvxpt::parse_point_text(z_text);
    opt.a_body = a_body != 0;
    opt.certificates = certificates != 0;
    *out_svg = dup(cvxpt::render_svg(body->body, opt));
  });
}

cvxpt_status cvxpt_campaign(const char* suite, int count, uint64_t seed, int* out_failed, char** out_json) {
  return guard([&] {
    require(suite, out_failed, out_json);
    const auto report = cvxpt::run_campaign(suite, count, seed);
    *out_failed = report.failed;
    *out_json = dup(cvxpt::to_json(report));
  });
}

cvxpt_status cvxpt_campaign_suites(char** out_json) {
  return guard([&] {
    require(out_json);
    *out_json = dup(json(cvxpt::campaign_suites()));
  });
}

cvxpt_status cvxpt_smooth_parse(const char* json_text, cvxpt_smooth** out) {
  return guard([&] {
    require(json_text, out);
    *out = nullptr;
    *out = new cvxpt_smooth{cvxpt::smooth_from_json(cvxpt::parse_json_text(json_text))};
  });
}

void cvxpt_smooth_free(cvxpt_smooth* body) { delete body; }

cvxpt_status cvxpt_smooth_info(const cvxpt_smooth* body, double tolerance, char** out_json) {
  return guard([&] {
    require(body, out_json);
    json j = cvxpt::to_json(body->body);
    const double r = cvxpt::symmetry_residual(body->body);
    j["curvature_margin"] = body->body.curvature_margin();
    j["symmetry_residual"] = r;
    j["centrally_symmetric"] = r <= tolerance;
    *out_json = dup(j);
  });
}

cvxpt_status cvxpt_smooth_sweep(const cvxpt_smooth* body, int samples, double step, double tolerance,
                                int* out_violations, char** out_json) {
  return guard([&] {
    require(body, out_violations, out_json);
    if (samples < 1) throw cvxpt::InputError("sweep needs at least one sample");
    json list = json::array();
    int violations = 0;
    for (int i = 0; i < samples; ++i) {
      const double phi = 2 * 3.14159265358979323846 * i / samples;
      const auto s = cvxpt::z_curve(body->body, phi);
      const double r = cvxpt::fd_check_lemma4(body->body, phi, step);
      if (!(r < tolerance)) ++violations;
      json rec = cvxpt::to_json(s);
      rec["residual"] = r;
      list.push_back(std::move(rec));
    }
    *out_violations = violations;
    *out_json = dup(list);
  });
}

cvxpt_status cvxpt_smooth_points(const cvxpt_smooth* body, int m, int boundary_samples, double tolerance,
                                 int* out_failed, char** out_json) {
  return guard([&] {
    require(body, out_failed, out_json);
    const auto a = cvxpt::a_body_approx(body->body, m);
    const auto k = cvxpt::boundary_polygon(body->body, boundary_samples);
    json verts = json::array();
    json points = json::array();
    int failed = 0;
    for (const auto& z : a.vertices) {
      verts.push_back(vec_json(z));
      const double gap = cvxpt::union_cover_gap(k, cvxpt::reflect(k, z));
      const bool ok = gap <= tolerance;
      if (!ok) ++failed;
      points.push_back({{"z", vec_json(z)}, {"cover_gap", gap}, {"ok", ok}});
    }
    *out_failed = failed;
    *out_json = dup(json{{"a_body", verts}, {"convexity_points", points}});
  });
}

}  // extern "C"
