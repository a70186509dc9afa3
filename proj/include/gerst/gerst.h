#ifndef GERST_H
#define GERST_H

#include <stddef.h>
#include <stdint.h>

#if defined(GERST_BUILDING_LIBRARY)
#define GERST_API __attribute__((visibility("default")))
#else
#define GERST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gerst_status {
  GERST_OK = 0,
  GERST_ERR_PARSE = 1,         /* malformed input document */
  GERST_ERR_USAGE = 2,         /* bad arguments or a command that does not apply */
  GERST_ERR_INVALID = 3,       /* input violates the algebra/category/Hopf axioms */
  GERST_ERR_VERIFICATION = 4,  /* an internal consistency check failed */
  GERST_ERR_UNSUPPORTED = 5,
  GERST_ERR_RESOURCE = 6,      /* predicted memory above the limit; pass force */
  GERST_ERR_INTERNAL = 7
} gerst_status;

typedef struct gerst_problem gerst_problem;

typedef struct gerst_options {
  unsigned max_degree; /* 0: 5 when the total hom dimension is <= 3, else 4 */
  unsigned trials;     /* sampled identities */
  uint64_t seed;
  int has_seed;        /* sampled suites refuse to run without a seed */
  const char* suite;   /* "complex", "e2", "ext" or "all"; NULL means "all" */
  int force;           /* skip the memory estimate */
  unsigned threads;    /* 0: GERST_THREADS or the hardware count */
} gerst_options;

GERST_API void gerst_options_init(gerst_options* opts);

GERST_API const char* gerst_version(void);
/* Message of the last failed call on this thread. */
GERST_API const char* gerst_last_error(void);

GERST_API gerst_status gerst_problem_load(const char* path, gerst_problem** out);
GERST_API gerst_status gerst_problem_parse(const char* json, gerst_problem** out);
GERST_API gerst_status gerst_problem_bundled(const char* name, gerst_problem** out);
GERST_API void gerst_problem_free(gerst_problem* p);
GERST_API int gerst_problem_is_hopf(const gerst_problem* p);

GERST_API size_t gerst_bundled_count(void);
GERST_API const char* gerst_bundled_name(size_t i);

/* Commands write a JSON report into *report (release with gerst_string_free).
 * They return GERST_OK when the computation ran; *ok is then 1 iff nothing
 * mathematical failed. validate also returns GERST_OK for invalid input. */
GERST_API gerst_status gerst_validate(const gerst_problem* p, char** report, int* ok);
GERST_API gerst_status gerst_hh(const gerst_problem* p, const gerst_options* opts, char** report);
GERST_API gerst_status gerst_verify(const gerst_problem* p, const gerst_options* opts, char** report, int* ok);
GERST_API gerst_status gerst_ext(const gerst_problem* p, const gerst_options* opts, char** report, int* ok);
GERST_API gerst_status gerst_compare(const gerst_problem* p, const gerst_options* opts, char** report, int* ok);

/* Predicted peak bytes for cochains and differentials up to max_degree. */
GERST_API gerst_status gerst_estimate_bytes(const gerst_problem* p, unsigned max_degree, int with_ext, uint64_t* bytes);
GERST_API uint64_t gerst_memory_limit(void);

/* Structure-constant JSON of the problem (the fixture format). */
GERST_API gerst_status gerst_problem_export(const gerst_problem* p, char** json);

GERST_API void gerst_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
