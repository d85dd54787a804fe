#ifndef SKEWCAT_H
#define SKEWCAT_H

#include <stddef.h>

#if defined(SKEWCAT_BUILDING)
#define SKEWCAT_API __attribute__((visibility("default")))
#else
#define SKEWCAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct skewcat_structure skewcat_structure;

typedef enum {
    SKEWCAT_OK = 0,
    SKEWCAT_FAILED = 1,       /* a law or property does not hold; details in the JSON output */
    SKEWCAT_INPUT_ERROR = 2,  /* malformed JSON, unknown keys, dangling ids, wrong schema for the call */
    SKEWCAT_BAD_ARGUMENT = 3,
    SKEWCAT_INTERNAL_ERROR = 4
} skewcat_status;

typedef enum { SKEWCAT_CATEGORY = 0, SKEWCAT_SKEW_MONOIDAL = 1, SKEWCAT_MULTICATEGORY = 2 } skewcat_kind;

SKEWCAT_API const char* skewcat_version(void);
/* Message for the last non-OK status on this thread; empty when there is none. */
SKEWCAT_API const char* skewcat_last_error(void);
SKEWCAT_API void skewcat_string_free(char* s);

SKEWCAT_API skewcat_status skewcat_parse(const char* json, skewcat_structure** out);
SKEWCAT_API void skewcat_free(skewcat_structure* h);
SKEWCAT_API skewcat_kind skewcat_kind_of(const skewcat_structure* h);
/* Truncation arity of a multicategory, -1 for the other kinds. */
SKEWCAT_API int skewcat_max_arity(const skewcat_structure* h);
SKEWCAT_API skewcat_status skewcat_to_json(const skewcat_structure* h, char** out);

/* Runs the checker matching the kind. The report is written for OK and FAILED. */
SKEWCAT_API skewcat_status skewcat_check(const skewcat_structure* h, char** report);
/* Representability analysis; skew monoidal input is converted at max_arity first. */
SKEWCAT_API skewcat_status skewcat_analyze(const skewcat_structure* h, int max_arity, char** report);
/* On FAILED, *failure explains why (for --to monoidal it carries the missing classifier) and *out is NULL. */
SKEWCAT_API skewcat_status skewcat_convert(const skewcat_structure* h, skewcat_kind to, int max_arity,
                                           skewcat_structure** out, char** failure);
/* Converts there and back and searches for an isomorphism; OK iff one is found. */
SKEWCAT_API skewcat_status skewcat_roundtrip(const skewcat_structure* h, int max_arity, char** verdict);
/* Flags of both sides of the correspondence; FAILED when they disagree. */
SKEWCAT_API skewcat_status skewcat_classify(const skewcat_structure* h, int max_arity, char** report);

/* Every skew monoidal structure on a category, in canonical order. threads <= 0 picks a default. */
SKEWCAT_API skewcat_status skewcat_search(const skewcat_structure* category, int threads, skewcat_structure*** out,
                                          size_t* count);
SKEWCAT_API void skewcat_free_array(skewcat_structure** arr, size_t count);

#ifdef __cplusplus
}
#endif

#endif
