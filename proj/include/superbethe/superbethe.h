#ifndef SUPERBETHE_H
#define SUPERBETHE_H

/* C interface to the verification engine. Every call returns a status code;
 * on failure sb_last_error() describes the most recent error of the calling
 * thread. */

#include <stddef.h>

#if defined(_WIN32)
#define SB_API __declspec(dllexport)
#else
#define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_INVALID_ARGUMENT = 1,
  SB_POLE_AT_EVALUATION_POINT = 2,
  SB_INEXACT_FIELD = 3,
  SB_HIGHER_ORDER_POLE = 4,
  SB_DIVERGENT_LIMIT = 5,
  SB_NOT_COVARIANT_DOMINANT = 6,
  SB_UNKNOWN_LABEL = 7,
  SB_VANISHING_NORMALIZER = 8,
  SB_MATRIX_TOO_LARGE = 9,
  SB_EQUAL_RANK = 10,
  SB_DEGENERATE_DENOMINATOR = 11,
  SB_NO_FINITE_ROOT = 12,
  SB_DIMENSION_TOO_LARGE = 13,
  SB_DIAGONALIZATION_FAILURE = 14,
  SB_ARITHMETIC_OVERFLOW = 15,
  SB_CONFIG_ERROR = 16,
  SB_NULL_HANDLE = 100,
  SB_INTERNAL = 101
} sb_status;

typedef struct sb_campaign sb_campaign;

SB_API const char* sb_version(void);
SB_API const char* sb_status_string(sb_status status);
SB_API const char* sb_last_error(void);

SB_API sb_status sb_campaign_create(sb_campaign** out);
SB_API void sb_campaign_destroy(sb_campaign* campaign);

/* Replaces the configuration with the parsed key = value text. */
SB_API sb_status sb_campaign_load(sb_campaign* campaign, const char* text);
SB_API sb_status sb_campaign_load_file(sb_campaign* campaign, const char* path);
/* Sets one configuration field, same keys as the file format. */
SB_API sb_status sb_campaign_set(sb_campaign* campaign, const char* key, const char* value);
/* Reads back a field as set ("checks", "out", "seed", ...); the string lives
 * until the next call on this handle. */
SB_API sb_status sb_campaign_get(sb_campaign* campaign, const char* key, const char** value);

/* Runs the selected checks. *passed is 1 when no entry failed. */
SB_API sb_status sb_campaign_run(sb_campaign* campaign, int* passed);
/* Report of the last run; valid until the next run or destroy. */
SB_API const char* sb_campaign_report(const sb_campaign* campaign);
SB_API size_t sb_campaign_entry_count(const sb_campaign* campaign);
/* Counts of PASS, FAIL and SKIP entries of the last run. */
SB_API sb_status sb_campaign_counts(const sb_campaign* campaign, size_t* pass, size_t* fail, size_t* skip);

#ifdef __cplusplus
}
#endif

#endif
