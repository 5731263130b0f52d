#ifndef CSKEW_CSKEW_H
#define CSKEW_CSKEW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CSKEW_BUILDING)
#define CSKEW_API __declspec(dllexport)
#else
#define CSKEW_API __declspec(dllimport)
#endif
#else
#define CSKEW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returning cskew_status leaves a message in cskew_last_error() on failure.
   The message is per thread and valid until the next failing call on that thread. */
typedef enum cskew_status {
  CSKEW_OK = 0,
  CSKEW_E_INVALID_ARGUMENT = 1,
  CSKEW_E_DOMAIN_ESCAPE = 2,
  CSKEW_E_EMPTY_INTERVAL = 3,
  CSKEW_E_RESOURCE_LIMIT = 4,
  CSKEW_E_NON_TERMINATING = 5,
  CSKEW_E_DEGENERATE_DENOMINATOR = 6,
  CSKEW_E_NOT_PARABOLIC = 7,
  CSKEW_E_NO_FIXED_POINT = 8,
  CSKEW_E_NOT_HYPERBOLIC_PAIR = 9,
  CSKEW_E_COUPLING_HYPOTHESIS = 10,
  CSKEW_E_NOT_DISJOINT = 11,
  CSKEW_E_CONTAINS_ZERO_SEQUENCE = 12,
  CSKEW_E_CROSSING_VIOLATED = 13,
  CSKEW_E_NO_CONTRACTION = 14,
  CSKEW_E_NO_EXIT_CASE = 15,
  CSKEW_E_NO_SIGN_CHANGE = 16,
  CSKEW_E_CONFIG = 17,
  CSKEW_E_INTERNAL = 99
} cskew_status;

typedef struct cskew_config cskew_config;
typedef struct cskew_pair cskew_pair;
typedef struct cskew_family cskew_family;
typedef struct cskew_options cskew_options;
typedef struct cskew_result cskew_result;

CSKEW_API const char* cskew_version(void);
CSKEW_API const char* cskew_last_error(void);
/* symbol index of the last DomainEscape, -1 otherwise */
CSKEW_API int cskew_last_error_step(void);
CSKEW_API const char* cskew_status_name(cskew_status status);

/* run configuration */
CSKEW_API cskew_status cskew_config_default(cskew_config** out);
CSKEW_API cskew_status cskew_config_parse(const char* text, cskew_config** out);
CSKEW_API cskew_status cskew_config_load(const char* path, cskew_config** out);
CSKEW_API void cskew_config_free(cskew_config* cfg);
CSKEW_API cskew_status cskew_config_set_workers(cskew_config* cfg, int workers);
CSKEW_API int cskew_config_workers(const cskew_config* cfg);
CSKEW_API cskew_status cskew_config_set_seed(cskew_config* cfg, uint64_t seed);
CSKEW_API uint64_t cskew_config_seed(const cskew_config* cfg);
CSKEW_API uint64_t cskew_config_hash(const cskew_config* cfg);
/* default output path from the config, "" if none */
CSKEW_API const char* cskew_config_out_path(const cskew_config* cfg);

/* fiber pairs; map declarations use the config syntax, e.g. "moebius(A=2, B=1, d=0.4)" */
CSKEW_API cskew_status cskew_pair_create(const char* f0, const char* f1, double modulus, cskew_pair** out);
CSKEW_API cskew_status cskew_pair_from_config(const cskew_config* cfg, cskew_pair** out);
CSKEW_API void cskew_pair_free(cskew_pair* pair);
CSKEW_API double cskew_pair_d(const cskew_pair* pair);

CSKEW_API cskew_status cskew_eval_word(const cskew_pair* pair, const char* word, double x, double* out);
CSKEW_API cskew_status cskew_deriv_word(const cskew_pair* pair, const char* word, double x, double* out);
CSKEW_API cskew_status cskew_invert_word(const cskew_pair* pair, const char* word, double y, double* out);

typedef struct cskew_hypothesis_report {
  int h1_ok;
  int h2_ok;
  int h2plus_ok;
  double modulus_estimate;
  double worst_location;
  double worst_magnitude;
} cskew_hypothesis_report;

CSKEW_API cskew_status cskew_check_hypotheses(const cskew_pair* pair, int grid_n, cskew_hypothesis_report* out);

CSKEW_API cskew_status cskew_admissible_at(const cskew_pair* pair, const char* word, double x, int* out);
CSKEW_API cskew_status cskew_forward_endpoint(const cskew_pair* pair, const char* word, double* a);
CSKEW_API cskew_status cskew_count_admissible(const cskew_pair* pair, int n, uint64_t node_cap, int workers,
                                              uint64_t* count, double* entropy_upper);
CSKEW_API cskew_status cskew_max_consecutive_ones(const cskew_pair* pair, int cap, int* k0);

enum { CSKEW_FP_NONE = 0, CSKEW_FP_PARABOLIC = 1, CSKEW_FP_PAIR = 2 };

typedef struct cskew_fixed_point_info {
  int variant;
  double p_plus, p_minus;
  double mult_plus, mult_minus;
  double chi_plus, chi_minus;
} cskew_fixed_point_info;

CSKEW_API cskew_status cskew_fixed_points(const cskew_pair* pair, const char* word, cskew_fixed_point_info* out);
CSKEW_API cskew_status cskew_distortion_ratio(const cskew_pair* pair, const char* word, double x, double y,
                                              double* out);
CSKEW_API cskew_status cskew_kappa(double D, double M, double* kappa1, double* kappa2);

typedef struct cskew_twin_info {
  double D;
  double chi_plus, chi_minus;
  double kappa1, kappa2;
  int bounds_ok;
} cskew_twin_info;

CSKEW_API cskew_status cskew_twin_measures(const cskew_pair* pair, const char* word, cskew_twin_info* out);
CSKEW_API cskew_status cskew_wasserstein_twins(const cskew_pair* pair, const char* word, double* formula,
                                               double* oracle);
CSKEW_API cskew_status cskew_frequency_bound(const cskew_pair* pair, const char* word, double* lhs, int* ok);

/* shift families f1 + t */
enum { CSKEW_CASE_IA = 0, CSKEW_CASE_IB = 1, CSKEW_CASE_II = 2 };

typedef struct cskew_family_info {
  double t_h, t_c;
  double a_exit;
  int exit_case;
} cskew_family_info;

CSKEW_API cskew_status cskew_family_create(const char* f0, const char* f1_base, double modulus, cskew_family** out);
CSKEW_API cskew_status cskew_family_from_config(const cskew_config* cfg, cskew_family** out);
CSKEW_API void cskew_family_free(cskew_family* fam);
CSKEW_API cskew_status cskew_family_info_get(const cskew_family* fam, cskew_family_info* out);
CSKEW_API cskew_status cskew_family_pair_at(const cskew_family* fam, double t, cskew_pair** out);
CSKEW_API cskew_status cskew_jump_constant(const cskew_family* fam, double t, double* out);
CSKEW_API cskew_status cskew_entropy_bound(const cskew_family* fam, double t, double* p, double* H);
CSKEW_API cskew_status cskew_full_cylinder_threshold(const cskew_family* fam, int n, double* t);
CSKEW_API cskew_status cskew_find_saddle_node(const cskew_family* fam, const char* word, double* t, double* point);

/* commands as exposed by the command-line tool */
CSKEW_API size_t cskew_command_count(void);
CSKEW_API const char* cskew_command_name(size_t i);

CSKEW_API cskew_status cskew_options_create(cskew_options** out);
CSKEW_API cskew_status cskew_options_set(cskew_options* opts, const char* key, const char* value);
CSKEW_API void cskew_options_free(cskew_options* opts);

CSKEW_API cskew_status cskew_run(const char* command, const cskew_config* cfg, const cskew_options* opts,
                                 cskew_result** out);
CSKEW_API const char* cskew_result_body(const cskew_result* res);
/* companion words file of horseshoe and join, "" otherwise */
CSKEW_API const char* cskew_result_aux(const cskew_result* res);
CSKEW_API size_t cskew_result_rows(const cskew_result* res);
CSKEW_API int cskew_result_failed(const cskew_result* res);
CSKEW_API size_t cskew_result_warning_count(const cskew_result* res);
CSKEW_API const char* cskew_result_warning(const cskew_result* res, size_t i);
CSKEW_API void cskew_result_free(cskew_result* res);

#ifdef __cplusplus
}
#endif

#endif
