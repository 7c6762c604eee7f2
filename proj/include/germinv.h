/* C interface to the germinv engine. All strings are UTF-8 and NUL
 * terminated. Strings returned by accessors belong to the handle they came
 * from and stay valid until that handle is freed. */
#ifndef GERMINV_H
#define GERMINV_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define GI_API __attribute__((visibility("default")))
#else
#define GI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gi_status {
  GI_OK = 0,
  GI_TABLE_MISMATCH = 1,
  GI_NOT_FINITELY_DETERMINED = 2,
  GI_PARSE_ERROR = 3,
  GI_RESOURCE_CAP = 4,
  GI_INTEGRITY_ERROR = 5,
  GI_GENERICITY_UNRESOLVED = 6,
  GI_INVALID_ARGUMENT = 7,
  GI_INTERNAL_ERROR = 8
} gi_status;

typedef enum gi_verdict { GI_YES = 0, GI_NO = 1, GI_UNDETERMINED = 2 } gi_verdict;

typedef enum gi_format { GI_TEXT = 0, GI_JSON = 1 } gi_format;

typedef struct gi_options {
  uint64_t seed;
  unsigned plane_samples;
  /* Zero means unlimited. Caps apply per germ for invariants and family
   * samples, and per row for the table. */
  size_t max_spairs;
  size_t max_terms;
  double time_budget_seconds;
} gi_options;

typedef struct gi_report gi_report;
typedef struct gi_family gi_family;
typedef struct gi_table gi_table;

/* seed 1, 5 planes, no caps. */
GI_API void gi_options_default(gi_options* options);

GI_API const char* gi_status_name(gi_status status);
/* Message of the last failing call on this thread, "" if none. */
GI_API const char* gi_last_error(void);

/* Invariant report of a germ "(f1, f2, f3)" in x, y. options may be NULL. */
GI_API gi_status gi_invariants(const char* germ, const gi_options* options, gi_report** out);
/* Looks up one of mu_D, C, T, mu_D2, mu_D2_mod_S2, mu_fD, m0_image,
 * m1_image, mu_Ytilde, mu1, m0_fD, J. */
GI_API gi_status gi_report_field(const gi_report* report, const char* name, long* value);
GI_API const char* gi_report_lambda(const gi_report* report);
GI_API const char* gi_report_image(const gi_report* report);
GI_API const char* gi_report_render(gi_report* report, gi_format format);
GI_API void gi_report_free(gi_report* report);

/* Family analysis of an unfolding "(F1, F2, F3)" in x, y, t. t_samples is a
 * comma separated list of rationals ("0,1,-1,1/2,3"); NULL selects the
 * default, and t = 0 is added when missing. On success *out is set even if
 * a sample failed; gi_family_status then reports the first failure, or
 * GI_GENERICITY_UNRESOLVED when a sample is a special parameter value (an
 * invariant larger than at t = 0). */
GI_API gi_status gi_family_analyze(const char* unfolding, const char* t_samples, const gi_options* options,
                                   gi_family** out);
GI_API gi_status gi_family_status(const gi_family* family);
GI_API gi_verdict gi_family_topologically_trivial(const gi_family* family);
GI_API gi_verdict gi_family_whitney(const gi_family* family);
GI_API int gi_family_counterexample(const gi_family* family);
GI_API size_t gi_family_sample_count(const gi_family* family);
/* Field of sample i (sample 0 is t = 0); fails for samples without a report. */
GI_API gi_status gi_family_sample_field(const gi_family* family, size_t i, const char* name, long* value);
GI_API const char* gi_family_render(gi_family* family, gi_format format);
GI_API void gi_family_free(gi_family* family);

/* Counterexample table at the nonzero samples (NULL: "1,-1,1/2,3"; a 0 in
 * the list is ignored). *out is set whenever the rows could be attempted.
 * Returns the status of the first row whose computation failed, else
 * GI_TABLE_MISMATCH if some row differs from its expected values, else GI_OK. */
GI_API gi_status gi_table1(const char* t_samples, const gi_options* options, gi_table** out);
GI_API size_t gi_table_row_count(const gi_table* table);
GI_API const char* gi_table_row_family(const gi_table* table, size_t i);
/* 1 when the row matches; otherwise 0 and *status says why (GI_OK for a
 * plain mismatch). status may be NULL. */
GI_API int gi_table_row_matched(const gi_table* table, size_t i, gi_status* status);
GI_API const char* gi_table_render(gi_table* table, gi_format format);
GI_API void gi_table_free(gi_table* table);

#ifdef __cplusplus
}
#endif

#endif
