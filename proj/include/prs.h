/* C API for the projective Reed-Solomon deep-hole library.
 *
 * All functions return a prs_status; results are delivered through out
 * parameters. Strings returned via char** are owned by the caller and must
 * be released with prs_string_free(). Handles are opaque and must be
 * destroyed with their matching destroy function. On failure,
 * prs_last_error() returns a thread-local description of the problem.
 */
#ifndef PRS_H
#define PRS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prs_status {
    PRS_OK = 0,
    PRS_ERR_USAGE = 1,  /* invalid arguments */
    PRS_ERR_CHECK = 2,  /* assertion or classification failure */
    PRS_ERR_BOUND = 3   /* resource bound exceeded */
} prs_status;

typedef enum prs_format {
    PRS_FORMAT_TEXT = 0,
    PRS_FORMAT_JSON = 1,
    PRS_FORMAT_CSV = 2
} prs_format;

typedef struct prs_field prs_field;
typedef struct prs_code prs_code;

typedef struct prs_options {
    unsigned long long max_points; /* enumeration bound; 0 selects the default */
    unsigned threads;              /* worker cap; 0 selects one worker */
} prs_options;

const char* prs_version(void);
const char* prs_last_error(void);
void prs_string_free(char* s);

/* ---- fields ---- */
prs_status prs_field_create(long p, int m, prs_field** out);
void prs_field_destroy(prs_field* f);
long prs_field_order(const prs_field* f);
prs_status prs_field_info(const prs_field* f, prs_format fmt, char** report);

/* ---- codes ---- */
prs_status prs_code_create(const prs_field* f, int k, prs_code** out);
void prs_code_destroy(prs_code* c);
prs_status prs_code_info(const prs_code* c, prs_format fmt, char** report);

/* Syndrome of a received word of length q+1 (element encodings); the
 * syndrome buffer must have room for q+1-k entries. */
prs_status prs_code_syndrome(const prs_code* c, const long* word, size_t word_len,
                             long* syndrome, size_t syndrome_len);
prs_status prs_code_error_distance(const prs_code* c, const long* word, size_t word_len,
                                   int* distance);

/* ---- analyses ---- */
prs_status prs_covering_radius(const prs_field* f, int k, const prs_options* opts,
                               prs_format fmt, int* rho, char** report);

/* mode: "enumerate", "families", "classify", or "orbits". A classification
 * whose checks fail still produces a report and returns PRS_ERR_CHECK. */
prs_status prs_deep_holes(const prs_field* f, int k, const char* mode,
                          const prs_options* opts, prs_format fmt, char** report);

/* Orbit of a projective point under the degree-m representation; point may
 * be NULL (length m is then implied) for the default point (0:..:0:1:0). */
prs_status prs_orbit(const prs_field* f, int m, const long* point, size_t point_len,
                     prs_format fmt, char** report);

#ifdef __cplusplus
}
#endif

#endif /* PRS_H */
