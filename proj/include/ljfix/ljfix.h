/*
 * C interface to the ljfix library: self-similar Lennard-Jones fixed point,
 * fluctuation recursion, cluster cascade and figure tables.
 *
 * Every fallible call returns ljfix_status; on failure the message is
 * available from ljfix_last_error() on the calling thread. Handles are
 * opaque, owned by the caller, and released with the matching *_free.
 */
#ifndef LJFIX_LJFIX_H
#define LJFIX_LJFIX_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LJFIX_BUILDING)
#    define LJFIX_API __declspec(dllexport)
#  else
#    define LJFIX_API __declspec(dllimport)
#  endif
#else
#  define LJFIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define LJFIX_ABI_VERSION 1u

typedef enum ljfix_status {
  LJFIX_OK = 0,
  LJFIX_ERR_DOMAIN = 1,             /* q <= 0, chi <= 0 */
  LJFIX_ERR_ARGUMENT = 2,           /* bad counts, ranges, empty input */
  LJFIX_ERR_LEVEL_OUT_OF_RANGE = 3, /* crossing level outside (-eps, 0) */
  LJFIX_ERR_DEGENERATE_LEVEL = 4,   /* crossing level at the well bottom */
  LJFIX_ERR_NULL_POINTER = 5,
  LJFIX_ERR_INDEX = 6,
  LJFIX_ERR_INTERNAL = 7
} ljfix_status;

typedef enum ljfix_mode { LJFIX_MODE_EXACT = 0, LJFIX_MODE_LINEARIZED = 1 } ljfix_mode;

typedef enum ljfix_format { LJFIX_FORMAT_CSV = 0, LJFIX_FORMAT_JSON = 1 } ljfix_format;

typedef enum ljfix_stability {
  LJFIX_CONTRACTING = 0,
  LJFIX_MARGINAL = 1,
  LJFIX_EXPANDING = 2
} ljfix_stability;

typedef struct ljfix_trajectory ljfix_trajectory;
typedef struct ljfix_cascade ljfix_cascade;
typedef struct ljfix_table ljfix_table;

typedef struct ljfix_crossing_pair {
  double u_c;
  double q_left;
  double q_right;
} ljfix_crossing_pair;

typedef struct ljfix_step {
  int index;
  double delta;
  double f_value;
} ljfix_step;

typedef struct ljfix_stability_report {
  double chi;
  double slope;
  double s;
  ljfix_stability classification;
} ljfix_stability_report;

typedef struct ljfix_point {
  double chi;
  double f;
} ljfix_point;

typedef struct ljfix_bifurcation_constants {
  double chi_plus;
  double chi_minus;
  double u_c_star;
  ljfix_point deep_point;
  double qiee;
} ljfix_bifurcation_constants;

/* gap_prev and lindemann are meaningful only when has_prev != 0 (order > 1). */
typedef struct ljfix_cascade_level {
  int order;
  double sigma;
  double epsilon;
  double q_left;
  double q_right;
  int has_prev;
  double gap_prev;
  double lindemann;
} ljfix_cascade_level;

typedef struct ljfix_energy_ledger {
  double u_c_star;
  double qiee;
  double deep_attractive;
  double e_c;
  double k_t_c;
} ljfix_energy_ledger;

LJFIX_API unsigned ljfix_abi_version(void);
LJFIX_API const char* ljfix_status_string(ljfix_status status);
/* Message of the last failed call on this thread; "" if none. */
LJFIX_API const char* ljfix_last_error(void);

/* potential */
LJFIX_API ljfix_status ljfix_evaluate(double sigma, double epsilon, double q, double* out);
LJFIX_API ljfix_status ljfix_chi_of(double sigma, double q, double* out);
LJFIX_API ljfix_status ljfix_q_of_chi(double sigma, double chi, double* out);
LJFIX_API double ljfix_f_reduced(double chi);
LJFIX_API ljfix_status ljfix_crossings(double sigma, double epsilon, double u_c,
                                       ljfix_crossing_pair* out);

/* recursion */
LJFIX_API double ljfix_step_exact(double chi, double delta);
LJFIX_API double ljfix_step_linear(double chi, double delta);
LJFIX_API ljfix_status ljfix_iterate(double chi, double delta0, int n_steps, ljfix_mode mode,
                                     ljfix_trajectory** out);
LJFIX_API size_t ljfix_trajectory_size(const ljfix_trajectory* trajectory);
LJFIX_API ljfix_status ljfix_trajectory_step(const ljfix_trajectory* trajectory, size_t i,
                                             ljfix_step* out);
LJFIX_API int ljfix_trajectory_diverged(const ljfix_trajectory* trajectory);
LJFIX_API void ljfix_trajectory_free(ljfix_trajectory* trajectory);
LJFIX_API ljfix_status ljfix_stability_at(double chi, ljfix_stability_report* out);
LJFIX_API ljfix_status ljfix_bifurcation_constants_get(ljfix_bifurcation_constants* out);
/* out[0] is the negative shifted root, out[1] the positive one. */
LJFIX_API ljfix_status ljfix_self_similar_points(ljfix_point out[2]);
LJFIX_API ljfix_status ljfix_tangent_intersection(ljfix_point* out);

/* cascade */
LJFIX_API ljfix_status ljfix_cascade_build(double sigma1, double eps1, int max_orders,
                                           ljfix_cascade** out);
LJFIX_API size_t ljfix_cascade_size(const ljfix_cascade* cascade);
LJFIX_API ljfix_status ljfix_cascade_level_at(const ljfix_cascade* cascade, size_t i,
                                              ljfix_cascade_level* out);
LJFIX_API void ljfix_cascade_free(ljfix_cascade* cascade);
LJFIX_API double ljfix_lindemann_ratio(void);
LJFIX_API ljfix_status ljfix_order_count(double sigma1, int* out);
/* flags must hold ljfix_cascade_size(cascade) entries. */
LJFIX_API ljfix_status ljfix_vacancy_check(const ljfix_cascade* cascade, double sigma1, int* flags,
                                           size_t n_flags);
LJFIX_API ljfix_status ljfix_energy_ledger_for(double eps1, ljfix_energy_ledger* out);

/* tables */
LJFIX_API ljfix_status ljfix_table_cascade(const ljfix_cascade* cascade, int with_vacancy,
                                           ljfix_table** out);
LJFIX_API ljfix_status ljfix_table_family(const ljfix_cascade* cascade, double q_min, double q_max,
                                          int n_samples, ljfix_table** out);
LJFIX_API ljfix_status ljfix_table_path(const ljfix_cascade* cascade, ljfix_table** out);
LJFIX_API ljfix_status ljfix_table_recursion_figure(double delta0, int n_samples,
                                                    ljfix_table** out);
LJFIX_API ljfix_status ljfix_table_trajectory(const ljfix_trajectory* trajectory,
                                              ljfix_table** out);
LJFIX_API ljfix_status ljfix_table_crossings(double sigma, double epsilon, double u_c,
                                             ljfix_table** out);
LJFIX_API ljfix_status ljfix_table_stability(double chi, ljfix_table** out);
/* Columns q, chi, u, f for one radius. */
LJFIX_API ljfix_status ljfix_table_potential(double sigma, double epsilon, double q,
                                             ljfix_table** out);
LJFIX_API ljfix_status ljfix_table_ledger(double sigma1, double eps1, ljfix_table** out);
/* Runs every verification check; *all_passed is 1 iff each check passed. */
LJFIX_API ljfix_status ljfix_table_verify(ljfix_table** out, int* all_passed);

LJFIX_API size_t ljfix_table_rows(const ljfix_table* table);
LJFIX_API size_t ljfix_table_columns(const ljfix_table* table);
LJFIX_API const char* ljfix_table_column_name(const ljfix_table* table, size_t column);
/* CSV rendering of one cell; valid until the table is freed. NULL on bad index. */
LJFIX_API const char* ljfix_table_text(const ljfix_table* table, size_t row, size_t column);
/* LJFIX_ERR_ARGUMENT if the cell is empty or not numeric. */
LJFIX_API ljfix_status ljfix_table_number(const ljfix_table* table, size_t row, size_t column,
                                          double* out);
/* *out is NUL terminated and released with ljfix_string_free; *length excludes the NUL. */
LJFIX_API ljfix_status ljfix_table_serialize(const ljfix_table* table, ljfix_format format,
                                             char** out, size_t* length);
LJFIX_API void ljfix_table_free(ljfix_table* table);
LJFIX_API void ljfix_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* LJFIX_LJFIX_H */
