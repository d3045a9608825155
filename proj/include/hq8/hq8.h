#ifndef HQ8_HQ8_H
#define HQ8_HQ8_H

/* C interface to the hq8 library.  Codes are opaque handles; every call
 * returns an hq8_status and records a message retrievable with
 * hq8_last_error() on the calling thread.  Strings returned through `char**`
 * are owned by the caller and released with hq8_string_free(). */

#include <stddef.h>

#if defined(HQ8_BUILDING_LIBRARY)
#define HQ8_API __attribute__((visibility("default")))
#else
#define HQ8_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hq8_status {
  HQ8_OK = 0,
  HQ8_ERR_PARSE = 1,
  HQ8_ERR_NOT_ALLOWABLE = 2,
  HQ8_ERR_INFEASIBLE = 3,
  HQ8_ERR_NOT_HADAMARD = 4,
  HQ8_ERR_INVALID_ARG = 5,
  HQ8_ERR_SIZE_CAP = 6,
  HQ8_ERR_UNCLASSIFIABLE = 7,
  HQ8_ERR_CASE_MISMATCH = 8,
  HQ8_ERR_IO = 9,
  HQ8_ERR_INTERNAL = 10
} hq8_status;

typedef struct hq8_code hq8_code;

HQ8_API const char* hq8_last_error(void);
HQ8_API const char* hq8_status_name(hq8_status status);
HQ8_API void hq8_string_free(char* s);

/* Construction and loading.  `out` receives a new handle on success. */
HQ8_API hq8_status hq8_code_from_text(const char* generator_text, hq8_code** out);
HQ8_API hq8_status hq8_code_from_file(const char* path, hq8_code** out);
HQ8_API hq8_status hq8_construct(int m, int k, int r, hq8_code** out);
/* Builds from plan-file text.  With check_target != 0 the measured (k, r)
 * must equal the plan's k and r. */
HQ8_API hq8_status hq8_construct_plan(const char* plan_text, int check_target, hq8_code** out);
HQ8_API void hq8_code_free(hq8_code* code);

/* Plan text for (m, shape, tau, k, r); shape is "1", "1*", "2", "3", "5". */
HQ8_API hq8_status hq8_plan_for(int m, const char* shape, int tau, int k, int r, char** plan_text);
/* Plan text of a constructed code; HQ8_ERR_INVALID_ARG for loaded codes. */
HQ8_API hq8_status hq8_code_plan(const hq8_code* code, char** plan_text);

/* Group order and binary length. */
HQ8_API hq8_status hq8_code_size(const hq8_code* code, size_t* elements, int* length);

/* A handle caches its structure report; calls on one handle must not run
 * concurrently.  Distinct handles are independent. */
HQ8_API hq8_status hq8_classify(hq8_code* code, char** line);
HQ8_API hq8_status hq8_measure(hq8_code* code, int* k, int* r, char** case_tag);
/* key=value report: profile, then k, r, case. */
HQ8_API hq8_status hq8_report(hq8_code* code, char** text);
/* Runs every structural check.  `passed` is 1 when all pass; the text lists
 * one `name=pass` or `name=fail: why` line per check. */
HQ8_API hq8_status hq8_verify(hq8_code* code, int* passed, char** text);

HQ8_API hq8_status hq8_export_generators(const hq8_code* code, char** text);
HQ8_API hq8_status hq8_export_binary(const hq8_code* code, char** text);

/* Allowable (k, r) pairs for every existing shape and tau at length 2^m. */
HQ8_API hq8_status hq8_pairs_table(int m, char** text);
/* Writes the example fixture generator files into `directory`; `listing`
 * receives one written file name per line. */
HQ8_API hq8_status hq8_seed_corpus(const char* directory, char** listing);

#ifdef __cplusplus
}
#endif

#endif /* HQ8_HQ8_H */
