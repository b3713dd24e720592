/* C interface to the fincat engine. The engine lives behind an opaque
 * session handle; commands return JSON documents and a status code. */
#ifndef FINCAT_H
#define FINCAT_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef FINCAT_BUILD
#    define FINCAT_API __declspec(dllexport)
#  else
#    define FINCAT_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define FINCAT_API __attribute__((visibility("default")))
#else
#  define FINCAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fincat_session fincat_session;

typedef enum {
  FINCAT_OK = 0,             /* command ran, all checks passed */
  FINCAT_CHECK_FAILED = 1,   /* command ran, a mathematical check failed */
  FINCAT_PARSE_ERROR = 2,    /* spec text did not parse/load */
  FINCAT_USAGE_ERROR = 3,    /* bad command, arguments, or names */
  FINCAT_LIMIT_EXCEEDED = 4, /* enumeration or size limit hit */
  FINCAT_INTERNAL_ERROR = 5
} fincat_status;

FINCAT_API fincat_status fincat_session_new(fincat_session** out);
FINCAT_API void fincat_session_free(fincat_session* s);

/* Parses and loads a spec. On FINCAT_PARSE_ERROR the diagnostics JSON is
 * available through fincat_last_result. */
FINCAT_API fincat_status fincat_load_spec(fincat_session* s, const char* text, size_t len,
                                          const char* source_name);

/* Runs a command ("check", "localise", "spectrify", "stabilise", "orbit",
 * "compare", "verify", "adjoint") with a JSON argument object (may be NULL).
 * On success *result_json is a malloc'd string owned by the caller; release
 * it with fincat_string_free. */
FINCAT_API fincat_status fincat_run(fincat_session* s, const char* command,
                                    const char* args_json, char** result_json);

/* Most recent error message and result document for this session. The
 * returned pointers stay valid until the next call on the session. */
FINCAT_API const char* fincat_last_error(const fincat_session* s);
FINCAT_API const char* fincat_last_result(const fincat_session* s);

FINCAT_API void fincat_string_free(char* s);
FINCAT_API const char* fincat_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FINCAT_H */
