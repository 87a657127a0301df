/* C interface to the algebraic lambda-calculus toolkit.
 *
 * Handles are opaque. Functions return an alc_status; on failure the session
 * keeps a message, a hint and, for parse errors, a source position. Strings
 * handed out by the library are released with alc_string_free. */
#ifndef ALC_H
#define ALC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ALC_API __declspec(dllexport)
#else
#define ALC_API __attribute__((visibility("default")))
#endif

typedef enum {
    ALC_OK = 0,
    ALC_ERR_PARSE = 1,
    ALC_ERR_TYPE = 2,
    ALC_ERR_FUEL = 3,
    ALC_NOT_EQUAL = 4,
    ALC_UNKNOWN = 5,
    ALC_NOT_JOINED = 6,
    ALC_CHECK_FAILED = 7,
    ALC_ERR_ARGUMENT = 8,
    ALC_ERR_IO = 9,
    ALC_ERR_INTERNAL = 10
} alc_status;

typedef enum { ALC_MODE_WEAK = 0, ALC_MODE_STRICT = 1 } alc_mode;
typedef enum { ALC_MODEL_STRONG = 0, ALC_MODEL_WEAK = 1 } alc_model;
typedef enum { ALC_CBV = 0, ALC_FULL = 1 } alc_congruence;
typedef enum { ALC_RING_AUTO = 0, ALC_RING_RAT = 1, ALC_RING_QUAD = 2 } alc_ring;

typedef struct alc_session alc_session;
typedef struct alc_term alc_term;
typedef struct alc_document alc_document;

ALC_API const char* alc_version(void);
ALC_API const char* alc_status_name(alc_status s);
ALC_API void alc_string_free(char* s);

/* Session: settings applied to terms parsed through it, plus the last error. */
ALC_API alc_status alc_session_new(alc_session** out);
ALC_API void alc_session_free(alc_session* s);
ALC_API alc_status alc_session_set_mode(alc_session* s, alc_mode m);
ALC_API alc_status alc_session_set_model(alc_session* s, alc_model m);
ALC_API alc_status alc_session_set_congruence(alc_session* s, alc_congruence c);
ALC_API alc_status alc_session_set_fuel(alc_session* s, size_t fuel);
/* Rational-only scalars are enforced under ALC_RING_RAT. */
ALC_API alc_status alc_session_set_ring(alc_session* s, alc_ring r);
ALC_API alc_status alc_session_use_prelude(alc_session* s, int on);
/* Comma separated query points for denotations, e.g. "0,1,*". */
ALC_API alc_status alc_session_set_points(alc_session* s, const char* points);
/* Add x : type to the typing context. */
ALC_API alc_status alc_session_declare(alc_session* s, const char* name, const char* type_src);
/* Bind name to a closed term for later parses. */
ALC_API alc_status alc_session_let(alc_session* s, const char* name, const char* term_src);
ALC_API alc_status alc_session_clear(alc_session* s);
/* Multi-line description of the current settings and bindings. */
ALC_API alc_status alc_session_describe(alc_session* s, char** out);

ALC_API const char* alc_last_error(const alc_session* s);
ALC_API const char* alc_last_hint(const alc_session* s);
/* 1-based; 0 when unknown. */
ALC_API size_t alc_last_line(const alc_session* s);
ALC_API size_t alc_last_column(const alc_session* s);

/* Terms remember the session settings in force when they were made. */
ALC_API alc_status alc_parse(alc_session* s, const char* src, alc_term** out);
ALC_API void alc_term_free(alc_term* t);
ALC_API alc_status alc_term_str(alc_session* s, const alc_term* t, char** out);
ALC_API int alc_term_has_fix(const alc_term* t);
ALC_API int alc_term_is_strict(const alc_term* t);
/* Source line in its document, 0 for inline terms. */
ALC_API size_t alc_term_line(const alc_term* t);

ALC_API alc_status alc_typecheck(alc_session* s, const alc_term* t, char** type_out);
/* result gets the last term reached; trace (optional) the numbered steps.
 * Returns ALC_ERR_FUEL when the fuel ran out first. */
ALC_API alc_status alc_normalize(alc_session* s, const alc_term* t, char** result, char** trace, size_t* steps);
/* Axiomatic equivalence at the type of a. Returns ALC_OK, ALC_NOT_EQUAL or
 * ALC_UNKNOWN; detail explains the verdict. */
ALC_API alc_status alc_equiv(alc_session* s, const alc_term* a, const alc_term* b, char** detail);
/* Explorer search for a common reduct. ALC_OK or ALC_NOT_JOINED. */
ALC_API alc_status alc_join(alc_session* s, const alc_term* a, const alc_term* b, char** detail);
/* Denotation in the term's model; approximate is set when a limit was cut. */
ALC_API alc_status alc_denote(alc_session* s, const alc_term* t, char** out, int* approximate);

/* "broken", "quantum" or "pow". broken returns ALC_NOT_JOINED when the two
 * branches cannot be reconciled. */
ALC_API alc_status alc_demo(alc_session* s, const char* name, char** out);

/* .alc documents; settings start from the session's. */
ALC_API alc_status alc_document_load(alc_session* s, const char* path, alc_document** out);
ALC_API alc_status alc_document_parse(alc_session* s, const char* text, const char* name, alc_document** out);
ALC_API void alc_document_free(alc_document* d);
ALC_API size_t alc_document_size(const alc_document* d);
/* Copy of item i; free with alc_term_free. */
ALC_API alc_status alc_document_item(alc_session* s, const alc_document* d, size_t i, alc_term** out);
/* Run every expectation. report gets one "PASS|FAIL\tfile:line\twhat\tdetail"
 * line per check. ALC_OK or ALC_CHECK_FAILED. */
ALC_API alc_status alc_document_check(alc_session* s, const alc_document* d, char** report, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif
