/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the convexity-point library.
 *
 * Bodies and smooth bodies are opaque handles. Every call returns a status;
 * on failure cvxpt_last_error() describes the problem (per thread, valid until
 * the next call on that thread). Strings returned through `char**` are
 * allocated by the library and released with cvxpt_string_free. Structured
 * results are JSON documents using the same encoding as body files.
 */
#ifndef CVXPT_CVXPT_H
#define CVXPT_CVXPT_H

#include <stdint.h>

#if defined(CVXPT_BUILDING_LIBRARY)
#define CVXPT_API __attribute__((visibility("default")))
#else
#define CVXPT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cvxpt_body cvxpt_body;
typedef struct cvxpt_smooth cvxpt_smooth;

typedef enum cvxpt_status {
  CVXPT_OK = 0,
  CVXPT_ERR_INPUT = 1,        /* malformed or invalid input */
  CVXPT_ERR_PRECONDITION = 2, /* valid input outside the operation's domain */
  CVXPT_ERR_VERIFICATION = 3, /* an internal cross-check failed */
  CVXPT_ERR_ARGUMENT = 4,     /* null handle or output pointer */
  CVXPT_ERR_INTERNAL = 5
} cvxpt_status;

typedef struct cvxpt_gen_options {
  int n;             /* lattice points per attempt, >= 3 */
  uint64_t seed;
  int no_parallel;   /* nonzero: resample until no parallel edge pair */
  int symmetric;     /* nonzero: centrally symmetric output */
  int with_summands; /* random segments added by Minkowski sum */
} cvxpt_gen_options;

CVXPT_API const char* cvxpt_version(void);
CVXPT_API const char* cvxpt_last_error(void);
CVXPT_API const char* cvxpt_status_name(cvxpt_status status);
CVXPT_API void cvxpt_string_free(char* s);

/* Body files: {"type": ..., "vertices": [[x, y], ...]}. With `normalize`,
 * repeated and collinear vertices are dropped instead of rejected. */
CVXPT_API cvxpt_status cvxpt_body_parse(const char* json_text, int normalize, cvxpt_body** out);
CVXPT_API void cvxpt_body_free(cvxpt_body* body);
CVXPT_API cvxpt_status cvxpt_body_emit(const cvxpt_body* body, char** out_json);
/* {"type", "vertices", "dimension", "centrally_symmetric", "center",
 *  "parallel_edges"} */
CVXPT_API cvxpt_status cvxpt_body_info(const cvxpt_body* body, char** out_json);

/* {"certificates": [{z, method, witnesses}...], "affinely_independent"} */
CVXPT_API cvxpt_status cvxpt_theorem_points(const cvxpt_body* body, char** out_json);

/* Runs the direct test and, for polygons without parallel edges, the
 * characterization. `z_text` is "x,y" with integer or p/q parts.
 * *out_agree is 0 when the two verdicts differ. */
CVXPT_API cvxpt_status cvxpt_verify(const cvxpt_body* body, const char* z_text, int* out_agree,
                                    char** out_json);

/* A_K, computed on the decomposition core when K has parallel edges. */
CVXPT_API cvxpt_status cvxpt_a_body(const cvxpt_body* body, cvxpt_body** out);
CVXPT_API cvxpt_status cvxpt_antipodal_events(const cvxpt_body* body, char** out_json);
/* `direction_text` is "dx,dy". */
CVXPT_API cvxpt_status cvxpt_middle_set(const cvxpt_body* body, const char* direction_text,
                                        char** out_json);
CVXPT_API cvxpt_status cvxpt_decompose(const cvxpt_body* body, char** out_json);

/* Intercept profiles at every exposed point of A_K. A polygon with parallel
 * edges is a precondition error. *out_violations sums the monotonicity
 * violations and non-strict frames. */
CVXPT_API cvxpt_status cvxpt_profile(const cvxpt_body* body, int n_samples, double tolerance,
                                     int* out_violations, char** out_json);

CVXPT_API cvxpt_status cvxpt_generate(const cvxpt_gen_options* options, cvxpt_body** out);

/* `z_text` may be null. */
CVXPT_API cvxpt_status cvxpt_render_svg(const cvxpt_body* body, const char* z_text, int a_body,
                                        int certificates, char** out_svg);

/* Writes a JSON run report; *out_failed is the number of failing inputs. */
CVXPT_API cvxpt_status cvxpt_campaign(const char* suite, int count, uint64_t seed, int* out_failed,
                                      char** out_json);
/* JSON array of suite names. */
CVXPT_API cvxpt_status cvxpt_campaign_suites(char** out_json);

/* Smooth bodies: {"harmonics": [[k, a_k, b_k], ...]}. */
CVXPT_API cvxpt_status cvxpt_smooth_parse(const char* json_text, cvxpt_smooth** out);
CVXPT_API void cvxpt_smooth_free(cvxpt_smooth* body);
/* {"harmonics", "curvature_margin", "symmetry_residual", "centrally_symmetric"} */
CVXPT_API cvxpt_status cvxpt_smooth_info(const cvxpt_smooth* body, double tolerance, char** out_json);
/* `samples` equally spaced angles; records {phi, z, p, p_prime, residual}
 * where residual is the finite-difference check at `step`. *out_violations
 * counts residuals >= tolerance. */
CVXPT_API cvxpt_status cvxpt_smooth_sweep(const cvxpt_smooth* body, int samples, double step,
                                          double tolerance, int* out_violations, char** out_json);
/* Approximates A_K by m curve points and checks each vertex numerically.
 * {"a_body": [[x, y]...], "convexity_points": [{"z", "cover_gap", "ok"}...]} */
CVXPT_API cvxpt_status cvxpt_smooth_points(const cvxpt_smooth* body, int m, int boundary_samples,
                                           double tolerance, int* out_failed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CVXPT_CVXPT_H */
