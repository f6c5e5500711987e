/* C interface to the fflv library. All handles are opaque; every call returns
 * an fflv_status and leaves a message in fflv_last_error() on failure. */
#ifndef FFLV_FFLV_H
#define FFLV_FFLV_H

#include <stddef.h>
#include <stdint.h>

#if defined(FFLV_BUILDING_LIBRARY)
#define FFLV_API __attribute__((visibility("default")))
#else
#define FFLV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fflv_status {
  FFLV_OK = 0,
  FFLV_INVALID_ARGUMENT = 1,
  FFLV_INVALID_RANK = 2,
  FFLV_DOMAIN = 3,
  FFLV_SIZE_CAP = 4,
  FFLV_CONTRACT = 5,
  FFLV_INTERNAL = 6,
  FFLV_NULL_ARGUMENT = 7
} fflv_status;

typedef enum fflv_format { FFLV_FORMAT_JSON = 0, FFLV_FORMAT_CSV = 1, FFLV_FORMAT_TEXT = 2 } fflv_format;

typedef struct fflv_perm fflv_perm;
typedef struct fflv_subset fflv_subset;
typedef struct fflv_job fflv_job;
typedef struct fflv_report fflv_report;

/* Message for the last failing call on this thread ("" if none). */
FFLV_API const char* fflv_last_error(void);
FFLV_API const char* fflv_version(void);
/* Frees strings returned by the library. */
FFLV_API void fflv_string_free(char* s);

/* Permutations in S_{n+1}. */
FFLV_API fflv_status fflv_perm_from_oneline(const char* text, fflv_perm** out);
FFLV_API fflv_status fflv_perm_from_word(int rank, const char* word, fflv_perm** out);
FFLV_API void fflv_perm_free(fflv_perm* p);
FFLV_API fflv_status fflv_perm_rank(const fflv_perm* p, int* out);
FFLV_API fflv_status fflv_perm_length(const fflv_perm* p, int* out);
FFLV_API fflv_status fflv_perm_is_triangular(const fflv_perm* p, int* out);
FFLV_API fflv_status fflv_perm_is_kempf(const fflv_perm* p, int* out);
/* One-line notation, e.g. "3 1 4 2". */
FFLV_API fflv_status fflv_perm_oneline(const fflv_perm* p, char** out);
/* Reduced word, e.g. "s2 s3 s1". */
FFLV_API fflv_status fflv_perm_reduced_word(const fflv_perm* p, char** out);
/* Inversion roots as a new subset handle. */
FFLV_API fflv_status fflv_perm_inversions(const fflv_perm* p, fflv_subset** out);

/* Subsets of positive roots. */
FFLV_API fflv_status fflv_subset_parse(int rank, const char* text, fflv_subset** out);
FFLV_API void fflv_subset_free(fflv_subset* s);
FFLV_API fflv_status fflv_subset_size(const fflv_subset* s, int* out);
FFLV_API fflv_status fflv_subset_contains(const fflv_subset* s, int i, int j, int* out);
FFLV_API fflv_status fflv_subset_is_triangular(const fflv_subset* s, int* out);
FFLV_API fflv_status fflv_subset_to_string(const fflv_subset* s, char** out);

/* Counting helpers. */
FFLV_API fflv_status fflv_count_points(const fflv_subset* a, const char* lambda, uint64_t* out);
FFLV_API fflv_status fflv_weyl_dimension(const char* lambda, uint64_t* out);

/* Jobs: set inputs, then run a command to obtain a report. */
FFLV_API fflv_status fflv_job_new(fflv_job** out);
FFLV_API void fflv_job_free(fflv_job* job);
FFLV_API fflv_status fflv_job_set_lambda(fflv_job* job, const char* lambda);
FFLV_API fflv_status fflv_job_set_w_word(fflv_job* job, const char* word);
FFLV_API fflv_status fflv_job_set_w_oneline(fflv_job* job, const char* oneline);
FFLV_API fflv_status fflv_job_set_subset(fflv_job* job, const char* subset);
FFLV_API fflv_status fflv_job_set_max_dim(fflv_job* job, size_t max_dim);
FFLV_API fflv_status fflv_job_set_max_rank(fflv_job* job, int max_rank);
/* Comma-separated dilation factors for the normality check, e.g. "2,3". */
FFLV_API fflv_status fflv_job_set_dilations(fflv_job* job, const char* dilations);
FFLV_API fflv_status fflv_job_set_check_rep(fflv_job* job, int enabled);
FFLV_API fflv_status fflv_job_set_sweep(fflv_job* job, int enabled);

FFLV_API fflv_status fflv_run_weyl_scan(int rank, int max_rank, fflv_report** out);
FFLV_API fflv_status fflv_run_points(const fflv_job* job, fflv_report** out);
FFLV_API fflv_status fflv_run_char_compare(const fflv_job* job, fflv_report** out);
FFLV_API fflv_status fflv_run_verify(const fflv_job* job, fflv_report** out);
FFLV_API fflv_status fflv_run_poset(const fflv_job* job, int max_t, fflv_report** out);

FFLV_API void fflv_report_free(fflv_report* r);
FFLV_API fflv_status fflv_report_passed(const fflv_report* r, int* out);
/* 0 = pass, 1 = a check failed, 3 = deficit mode of char-compare. */
FFLV_API fflv_status fflv_report_exit_code(const fflv_report* r, int* out);
FFLV_API fflv_status fflv_report_render(const fflv_report* r, fflv_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
