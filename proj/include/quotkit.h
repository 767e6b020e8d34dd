#ifndef QUOTKIT_H
#define QUOTKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QK_API __declspec(dllexport)
#else
#define QK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every function returning qk_status leaves a message for
   qk_last_error() on failure. */
typedef enum qk_status {
  QK_OK = 0,
  QK_NON_EXPANDABLE = 1,
  QK_RANK_MISMATCH = 2,
  QK_NOT_DIVISIBLE = 3,
  QK_OUT_OF_RANGE = 4,
  QK_DEGENERATE_WEIGHTS = 5,
  QK_NON_COLLAPSE = 6,
  QK_BAD_CONFIG = 7,
  QK_UNKNOWN_CHECK = 8,
  QK_PARSE_ERROR = 9,
  QK_INVALID_ARGUMENT = 10,
  QK_INTERNAL = 100
} qk_status;

typedef struct qk_config qk_config;
typedef struct qk_results qk_results;

QK_API const char* qk_version(void);
QK_API const char* qk_status_name(qk_status status);
/* Message of the last failure on the calling thread; empty if none. */
QK_API const char* qk_last_error(void);

QK_API size_t qk_suite_count(void);
QK_API const char* qk_suite_name(size_t index);

/* Suite configuration. Unset ranges take the suite defaults. */
QK_API qk_status qk_config_new(const char* suite, qk_config** out);
QK_API void qk_config_free(qk_config* config);
/* range is "n" or "lo..hi". */
QK_API qk_status qk_config_set_range(qk_config* config, const char* key, const char* range);
QK_API qk_status qk_config_set_threads(qk_config* config, int threads);
QK_API qk_status qk_config_set_seed(qk_config* config, uint64_t seed);

QK_API qk_status qk_run_suite(const qk_config* config, qk_results** out);
QK_API qk_status qk_run_counts(const qk_config* config, qk_results** out);
/* splitting may be NULL with splitting_len 0 for the trivial bundle. */
QK_API qk_status qk_chi(int r, int d, const int* splitting, size_t splitting_len, const char* spec,
                        qk_results** out);
/* json is a list of {"r", "d", "splitting", "spec"} objects. */
QK_API qk_status qk_run_batch(const char* json, int threads, qk_results** out);

QK_API void qk_results_free(qk_results* results);
QK_API size_t qk_results_count(const qk_results* results);
QK_API int qk_results_all_pass(const qk_results* results);
QK_API int qk_result_pass(const qk_results* results, size_t index);
QK_API const char* qk_result_check(const qk_results* results, size_t index);
QK_API const char* qk_result_expected(const qk_results* results, size_t index);
QK_API const char* qk_result_computed(const qk_results* results, size_t index);
/* Strings below are owned by the results handle. */
QK_API const char* qk_result_json(const qk_results* results, size_t index, int include_timing);
QK_API const char* qk_result_csv(const qk_results* results, size_t index);
QK_API const char* qk_result_plain(const qk_results* results, size_t index);
QK_API const char* qk_csv_header(void);

/* Strings returned through char** are released with qk_string_free. */
QK_API qk_status qk_explain(const char* name, char** out);
/* Normal form of an expression such as "(1-q)*e[1]*f[0] + (2)*m[1]" in the
   rank r loop algebra. */
QK_API qk_status qk_normal_form(int r, const char* expression, char** out);
QK_API void qk_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif
