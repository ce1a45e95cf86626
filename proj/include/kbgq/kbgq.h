#ifndef KBGQ_KBGQ_H
#define KBGQ_KBGQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KBGQ_API __declspec(dllexport)
#else
#define KBGQ_API __attribute__((visibility("default")))
#endif

typedef enum kbgq_status {
  KBGQ_OK = 0,
  KBGQ_ERR_VALIDATION = 1,
  KBGQ_ERR_PARSE = 2,
  KBGQ_ERR_RESOURCE = 3,
  KBGQ_ERR_MEMBERSHIP = 4,
  KBGQ_ERR_INTERNAL = 5,
  KBGQ_ERR_ARGUMENT = 6
} kbgq_status;

typedef enum kbgq_outcome {
  KBGQ_OUTCOME_PASS = 0,
  KBGQ_OUTCOME_FAIL = 2,
  KBGQ_OUTCOME_INCONCLUSIVE = 3
} kbgq_outcome;

typedef struct kbgq_spec kbgq_spec;
typedef struct kbgq_result kbgq_result;

typedef struct kbgq_selfcheck_options {
  uint64_t max_order;  /* 0: 24 */
  uint32_t depth;      /* 0: 6 */
  uint64_t seed;       /* 0: built-in default */
  uint32_t threads;    /* 0: hardware concurrency */
  int corrupt_constant;
} kbgq_selfcheck_options;

KBGQ_API const char* kbgq_version(void);
KBGQ_API const char* kbgq_status_name(kbgq_status s);

/* Message and JSON pointer of the last failure on this thread; "" when none. */
KBGQ_API const char* kbgq_last_error(void);
KBGQ_API const char* kbgq_last_error_path(void);

/* enumeration_cap 0 selects the default cap. */
KBGQ_API kbgq_status kbgq_spec_parse(const char* json, size_t length, uint64_t enumeration_cap, kbgq_spec** out);
KBGQ_API void kbgq_spec_free(kbgq_spec* spec);
/* "finite_perm", "crystallographic", "fuchsian", "one_relator" or "direct". */
KBGQ_API const char* kbgq_spec_family(const kbgq_spec* spec);

KBGQ_API kbgq_status kbgq_compute(const kbgq_spec* spec, kbgq_result** out);
KBGQ_API void kbgq_result_free(kbgq_result* result);
/* The full compute document; release with kbgq_string_free. */
KBGQ_API kbgq_status kbgq_result_json(const kbgq_result* result, char** out);
/* K^n for any integer n; only the parity matters. */
KBGQ_API kbgq_status kbgq_result_rational_rank(const kbgq_result* result, int64_t n, uint64_t* out);
KBGQ_API kbgq_status kbgq_result_padic_rank(const kbgq_result* result, int64_t n, uint64_t p, uint64_t* out);
KBGQ_API kbgq_status kbgq_result_has_torsion(const kbgq_result* result, int* out);
KBGQ_API size_t kbgq_result_note_count(const kbgq_result* result);
/* Code of note i, or NULL when out of range. */
KBGQ_API const char* kbgq_result_note_code(const kbgq_result* result, size_t i);

/* Exact character table of a finite_perm spec as JSON. */
KBGQ_API kbgq_status kbgq_chartab_json(const kbgq_spec* spec, char** out);

/* options may be NULL. outcome receives a kbgq_outcome value. */
KBGQ_API kbgq_status kbgq_selfcheck(const kbgq_selfcheck_options* options, char** report_json, int* outcome);

KBGQ_API kbgq_status kbgq_padic_root_check(uint64_t l, uint64_t p, uint32_t precision, int* exists);

KBGQ_API void kbgq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
