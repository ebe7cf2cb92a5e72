/* covspec: covering spectra of metric graphs, towers and model spaces.
 *
 * Plain C interface over the C++ library. Objects are opaque handles created
 * by a *_load / *_parse / *_preset / compute call and released with the
 * matching *_free. Every fallible call returns a covspec_status; on failure
 * covspec_last_error() describes the problem (per thread, valid until the
 * next failing call on that thread). Strings returned by accessors are owned
 * by the handle they came from. */
#ifndef COVSPEC_COVSPEC_H
#define COVSPEC_COVSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COVSPEC_BUILDING)
#    define COVSPEC_API __declspec(dllexport)
#  else
#    define COVSPEC_API __declspec(dllimport)
#  endif
#else
#  define COVSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covspec_status {
  COVSPEC_OK = 0,
  COVSPEC_ERR_INVALID_ARGUMENT = 1,
  COVSPEC_ERR_PARSE = 2,
  COVSPEC_ERR_IO = 3,
  COVSPEC_ERR_SOLVER = 4,
  COVSPEC_ERR_INTERNAL = 5
} covspec_status;

typedef enum covspec_provenance {
  COVSPEC_EXACT = 0,
  COVSPEC_NUMERIC = 1,
  COVSPEC_UNDETERMINED = 2
} covspec_provenance;

typedef enum covspec_verdict {
  COVSPEC_NO = 0,
  COVSPEC_YES = 1,
  COVSPEC_VERDICT_UNDETERMINED = 2
} covspec_verdict;

typedef enum covspec_variant {
  COVSPEC_BASEPOINT = 0,
  COVSPEC_INFINITY = 1
} covspec_variant;

typedef struct covspec_spectrum covspec_spectrum;
typedef struct covspec_graph covspec_graph;
typedef struct covspec_tower covspec_tower;
typedef struct covspec_cylinder covspec_cylinder;
typedef struct covspec_model covspec_model;

COVSPEC_API const char* covspec_version(void);
COVSPEC_API const char* covspec_status_string(covspec_status s);
COVSPEC_API const char* covspec_last_error(void);
/* Line and column of the last parse error, or 0 when unknown. */
COVSPEC_API void covspec_last_error_position(int* line, int* column);

/* Evaluates a constant expression such as "2*pi/2^10". `symbolic` receives
 * the exact form a + b*pi when there is one, else an empty string. */
COVSPEC_API covspec_status covspec_parse_length(const char* text, double* value, char* symbolic, size_t symbolic_size);

/* ---- spectra ---- */

COVSPEC_API void covspec_spectrum_free(covspec_spectrum* s);
COVSPEC_API size_t covspec_spectrum_size(const covspec_spectrum* s);
COVSPEC_API covspec_status covspec_spectrum_value(const covspec_spectrum* s, size_t i, double* value,
                                                  covspec_provenance* provenance, double* tolerance);
/* Exact form of value i, or "" when the value is numeric. */
COVSPEC_API const char* covspec_spectrum_symbolic(const covspec_spectrum* s, size_t i);
COVSPEC_API const char* covspec_spectrum_note(const covspec_spectrum* s, size_t i);
COVSPEC_API size_t covspec_spectrum_accumulation_count(const covspec_spectrum* s);
COVSPEC_API covspec_status covspec_spectrum_accumulation(const covspec_spectrum* s, size_t i, double* value,
                                                         double* radius);
COVSPEC_API int covspec_spectrum_has_undetermined(const covspec_spectrum* s);
/* Returns 1 and writes the bound when the spectrum is known complete below it. */
COVSPEC_API int covspec_spectrum_complete_below(const covspec_spectrum* s, double* bound);

/* ---- flat tori ---- */

/* S^1 x ... x S^1 with the given intrinsic circle diameters (expressions). */
COVSPEC_API covspec_status covspec_torus_spectrum(const char* const* diameters, size_t count,
                                                  covspec_spectrum** out);

/* ---- metric graphs ---- */

COVSPEC_API covspec_status covspec_graph_load(const char* path, covspec_graph** out);
COVSPEC_API covspec_status covspec_graph_parse(const char* text, covspec_graph** out);
/* Presets: "circle" (circumference 2*pi), "figure8" (2*pi, 3*pi),
 * "harmonic-wedge" (param = J circles of 2*pi*(1+1/j)). */
COVSPEC_API covspec_status covspec_graph_preset(const char* name, int param, covspec_graph** out);
/* Connected graph with at most max_edges edges and lengths in {8..16}/8. */
COVSPEC_API covspec_status covspec_graph_random(uint64_t seed, int max_edges, covspec_graph** out);
COVSPEC_API void covspec_graph_free(covspec_graph* g);
COVSPEC_API int covspec_graph_rank(const covspec_graph* g);
COVSPEC_API int covspec_graph_edge_count(const covspec_graph* g);
COVSPEC_API const char* covspec_graph_text(const covspec_graph* g);
/* `lmax` may be NULL for the default cycle bound. `truncated` may be NULL. */
COVSPEC_API covspec_status covspec_graph_spectrum(const covspec_graph* g, const char* lmax, covspec_spectrum** out,
                                                  int* truncated);
COVSPEC_API covspec_status covspec_graph_covofshift(const covspec_graph* g, int* pass, size_t* violations);

/* ---- warped cylinders R x_f S^1 ---- */

COVSPEC_API covspec_status covspec_cylinder_compute(const char* f, const char* circumference, int max_power,
                                                    covspec_cylinder** out);
/* "cusp-cylinder", "gauss-bump-cylinder", "flat-cylinder". */
COVSPEC_API covspec_status covspec_cylinder_preset(const char* name, covspec_cylinder** out);
COVSPEC_API void covspec_cylinder_free(covspec_cylinder* c);
/* Borrowed; lives as long as the cylinder. */
COVSPEC_API const covspec_spectrum* covspec_cylinder_spectrum(const covspec_cylinder* c);
COVSPEC_API size_t covspec_cylinder_length_count(const covspec_cylinder* c);
COVSPEC_API covspec_status covspec_cylinder_length(const covspec_cylinder* c, size_t i, long* power, double* length,
                                                   int* attained, double* argmin);
COVSPEC_API int covspec_cylinder_generator_slipping(const covspec_cylinder* c);

/* F(r, d) / r on [0, inf) x_f R for each r (plot data). */
COVSPEC_API covspec_status covspec_warped_ratio(const char* f, double d, const double* r, size_t count,
                                                double* out);

/* ---- cones C_k(Y) from CovSpec(Y) ---- */

COVSPEC_API covspec_status covspec_cone_spectra(const char* k, const char* const* base_covspec, size_t count,
                                                const char* base_diameter, covspec_spectrum** infinite,
                                                covspec_spectrum** basepoint);

/* ---- rescaled spectra over model spaces ---- */

typedef struct covspec_length_report {
  double value;
  int exact;           /* 1 when `symbolic` holds the exact value */
  char symbolic[64];
  int attained;
  char convergence[16];
  int has_numeric;     /* sampled estimate computed alongside a closed form */
  double numeric;
} covspec_length_report;

/* "flat-cylinder", "hyperboloid", "cone", "moebius", "nabonnand". */
COVSPEC_API covspec_status covspec_model_preset(const char* name, covspec_model** out);
COVSPEC_API covspec_status covspec_model_cone(double k, double fiber_length, covspec_model** out);
COVSPEC_API covspec_status covspec_model_moebius(double c, covspec_model** out);
COVSPEC_API covspec_status covspec_model_nabonnand(const char* warp, covspec_model** out);
COVSPEC_API covspec_status covspec_model_scaled(const covspec_model* m, double R, covspec_model** out);
COVSPEC_API covspec_status covspec_model_with_basepoint(const covspec_model* m, double u, double v,
                                                        covspec_model** out);
COVSPEC_API void covspec_model_free(covspec_model* m);
COVSPEC_API const char* covspec_model_name(const covspec_model* m);
COVSPEC_API int covspec_model_complete(const covspec_model* m);

COVSPEC_API covspec_status covspec_rescaled_length(const covspec_model* m, long power, covspec_variant which,
                                                   int cross_check, covspec_length_report* out);
COVSPEC_API covspec_status covspec_rescaled_spectrum(const covspec_model* m, covspec_variant which, long max_power,
                                                     covspec_spectrum** out);
/* Generator power of the subgroup (0 = trivial) and count of boundary powers. */
COVSPEC_API covspec_status covspec_rescaled_delta_group(const covspec_model* m, double delta, covspec_variant which,
                                                        long* generator, size_t* boundary);
COVSPEC_API covspec_status covspec_rescaled_slipping(const covspec_model* m, long power, covspec_verdict* out);
COVSPEC_API covspec_status covspec_rescaled_loops_to_infinity(const covspec_model* m, long power, int* loops,
                                                              int* cut_spectrum_empty);

/* ---- towers ---- */

COVSPEC_API covspec_status covspec_tower_load(const char* path, covspec_tower** out);
COVSPEC_API covspec_status covspec_tower_parse(const char* text, covspec_tower** out);
/* "pants", "harmonic-wedge", "shrinking-wedge", "shrinking-loop", "slipping-barbell". */
COVSPEC_API covspec_status covspec_tower_preset(const char* name, int levels, covspec_tower** out);
/* The graph repeated at every level. */
COVSPEC_API covspec_status covspec_tower_constant(const covspec_graph* g, int levels, covspec_tower** out);
COVSPEC_API void covspec_tower_free(covspec_tower* t);
COVSPEC_API int covspec_tower_levels(const covspec_tower* t);
COVSPEC_API size_t covspec_tower_generator_count(const covspec_tower* t, int level);
COVSPEC_API const char* covspec_tower_generator_name(const covspec_tower* t, int level, size_t i);
/* Slipping: some level gives translation length < eps. */
COVSPEC_API covspec_status covspec_tower_slipping(const covspec_tower* t, int level, const char* element, double eps,
                                                  covspec_verdict* out, int* witness_level);
/* Universal slipping at every delta of delta_max * 2^-i, i = 0..steps. */
COVSPEC_API covspec_status covspec_tower_universal_slipping(const covspec_tower* t, int level, const char* element,
                                                            double delta_max, int steps, covspec_verdict* out,
                                                            double* resolved_to);

typedef struct covspec_cover_summary {
  int pi_slip_full;
  int pi_slip_trivial;
  int is_delta_cover;
  int inf_positive;
  double covspec_inf;
  double delta0;
  size_t undetermined;
  char quotient_identity[160];
} covspec_cover_summary;

COVSPEC_API covspec_status covspec_tower_cover_summary(const covspec_tower* t, int schedule_steps,
                                                       covspec_cover_summary* out);

/* ---- curvature ---- */

COVSPEC_API covspec_status covspec_ricci_circle(const char* f, const char* h, double r, double* out);
COVSPEC_API covspec_status covspec_milnor_bound(int n, const char* delta, double* value, char* symbolic,
                                                size_t symbolic_size);
COVSPEC_API covspec_status covspec_wilking_curvature(double r, double* radial, double* fiber);

/* ---- property suites ---- */

typedef struct covspec_suite_result {
  int pass;
  size_t checks;
  size_t failures;
  double worst;      /* suite-specific: smallest margin, largest violation */
  char message[256];
} covspec_suite_result;

COVSPEC_API covspec_status covspec_verify_wilking(int samples, uint64_t seed, covspec_suite_result* out);
COVSPEC_API covspec_status covspec_verify_covofshift(int graphs, uint64_t seed, covspec_suite_result* out);
COVSPEC_API covspec_status covspec_verify_rescaled_lemmas(const char* preset, covspec_suite_result* out);

#ifdef __cplusplus
}
#endif

#endif
