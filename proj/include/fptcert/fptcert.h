#ifndef FPTCERT_FPTCERT_H
#define FPTCERT_FPTCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(FPTCERT_BUILDING)
#define FPTCERT_API __attribute__((visibility("default")))
#else
#define FPTCERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fptcert_status {
  FPTCERT_OK = 0,
  FPTCERT_INTERNAL = 1,
  FPTCERT_INVALID_INPUT = 2, /* parse or validation failure */
  FPTCERT_HYPOTHESIS = 3,    /* e.g. no unique maximal point */
  FPTCERT_BUDGET = 4,        /* enumeration budget exceeded */
  FPTCERT_BAD_HANDLE = 5
} fptcert_status;

typedef enum fptcert_budget {
  FPTCERT_BUDGET_MAX_MULTISETS = 0,
  FPTCERT_BUDGET_MAX_TERMS = 1,
  FPTCERT_BUDGET_MAX_DIMENSION = 2
} fptcert_budget;

typedef struct fptcert_context fptcert_context;
typedef struct fptcert_result fptcert_result;

FPTCERT_API const char* fptcert_version(void);
FPTCERT_API const char* fptcert_status_name(fptcert_status status);

FPTCERT_API fptcert_context* fptcert_context_create(void);
FPTCERT_API void fptcert_context_destroy(fptcert_context* ctx);
FPTCERT_API fptcert_status fptcert_context_set_budget(fptcert_context* ctx, fptcert_budget which,
                                                      uint64_t value);
FPTCERT_API fptcert_status fptcert_context_get_budget(const fptcert_context* ctx, fptcert_budget which,
                                                      uint64_t* value);

/* Runs `command` on a JSON job. On return *out holds a result handle even
   when the status is an error; it carries the error JSON in that case.
   Release it with fptcert_result_destroy. */
FPTCERT_API fptcert_status fptcert_run(fptcert_context* ctx, const char* command, const char* input_json,
                                       fptcert_result** out);

FPTCERT_API fptcert_status fptcert_result_status(const fptcert_result* result);
/* Borrowed pointers, valid until the result is destroyed. */
FPTCERT_API const char* fptcert_result_json(const fptcert_result* result);
FPTCERT_API const char* fptcert_result_error_kind(const fptcert_result* result);
FPTCERT_API const char* fptcert_result_error_message(const fptcert_result* result);
FPTCERT_API void fptcert_result_destroy(fptcert_result* result);

FPTCERT_API size_t fptcert_command_count(void);
FPTCERT_API const char* fptcert_command_name(size_t index);

#ifdef __cplusplus
}
#endif

#endif
