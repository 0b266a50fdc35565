#ifndef CYCHOM_H
#define CYCHOM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CYCHOM_BUILDING)
#define CYCHOM_API __attribute__((visibility("default")))
#else
#define CYCHOM_API
#endif

typedef struct cychom_session cychom_session;

typedef enum {
  CYCHOM_OK = 0,
  CYCHOM_CERT_FAILED = 1, /* ran to completion, some certificate failed */
  CYCHOM_BAD_INPUT = 2,   /* malformed input; see cychom_last_error */
  CYCHOM_INTERNAL = 3
} cychom_status;

/* config_json may be NULL: {"field": "Q" | {"Fp": p}, "max_degree": D, "seed": s} */
CYCHOM_API cychom_status cychom_session_new(const char* config_json, cychom_session** out);
CYCHOM_API void cychom_session_free(cychom_session* s);

/* Runs a command: check, homology, cotraces, strong-connection, es-coring,
   chern, chern-weil, verify, diagram. args_json holds "input" (problem file
   text) and the command's options. On OK or CERT_FAILED *report_json receives
   a JSON report owned by the caller; free it with cychom_string_free. */
CYCHOM_API cychom_status cychom_run(cychom_session* s, const char* command, const char* args_json,
                                    char** report_json);

/* Human-readable summary of a report produced by cychom_run. */
CYCHOM_API cychom_status cychom_summarize(const char* report_json, char** text);

CYCHOM_API void cychom_string_free(char* p);

/* Message of the last failed call on this session; never NULL. */
CYCHOM_API const char* cychom_last_error(const cychom_session* s);

CYCHOM_API const char* cychom_version(void);

#ifdef __cplusplus
}
#endif

#endif
