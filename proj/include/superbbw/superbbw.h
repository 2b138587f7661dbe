/* superbbw: weight combinatorics and cohomology characters for the
 * supergroups Q(n) and GL(n|n) with a lower-triangular Borel.
 *
 * Every entry point reports through an sbw_status; on failure a
 * human-readable message is kept on the context (sbw_last_error). Output
 * strings are allocated by the library and must be released with
 * sbw_string_free. Weights are passed as int64 arrays in the epsilon basis:
 * n entries for type "q", 2n entries (e-block then d-block) for type "gl".
 */
#ifndef SUPERBBW_H
#define SUPERBBW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SBW_API __declspec(dllexport)
#else
#define SBW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbw_status {
  SBW_OK = 0,
  SBW_ERR_INVALID_ARGUMENT = 1,
  SBW_ERR_UNSUPPORTED = 2,
  SBW_ERR_DOMAIN = 3,
  SBW_ERR_INTERNAL = 4
} sbw_status;

typedef enum sbw_format { SBW_FORMAT_TEXT = 0, SBW_FORMAT_JSON = 1 } sbw_format;

/* A context pins one supergroup: type "q" (rank 1..6) or "gl" (rank 1..5,
 * meaning GL(n|n)) and caches the derived combinatorial data. */
typedef struct sbw_context sbw_context;

SBW_API sbw_status sbw_context_create(const char* type, int rank, sbw_context** out);
SBW_API void sbw_context_destroy(sbw_context* ctx);

/* Message for the most recent failure on this context; empty if none.
 * The pointer stays valid until the next call on the same context. */
SBW_API const char* sbw_last_error(const sbw_context* ctx);
/* Static name of a status code, e.g. "domain". */
SBW_API const char* sbw_status_message(sbw_status s);
SBW_API void sbw_string_free(char* s);

/* Root datum summary: roots, rho, Weyl group order. */
SBW_API sbw_status sbw_datum(sbw_context* ctx, sbw_format fmt, char** out);

/* Generating function of the generic cohomology degrees. */
SBW_API sbw_status sbw_poincare(sbw_context* ctx, sbw_format fmt, char** out);

/* Lower bounds cutting out the generic chamber of w (type q only).
 * word is a composition of simple reflections like "s1.s2", or "e". */
SBW_API sbw_status sbw_region_omega(sbw_context* ctx, const char* word, sbw_format fmt,
                                    char** out);

/* Lower bounds cutting out the very dominant region. */
SBW_API sbw_status sbw_region_very_dominant(sbw_context* ctx, sbw_format fmt, char** out);

/* Membership of one weight: dominant, very dominant, generic (with witness). */
SBW_API sbw_status sbw_region_classify(sbw_context* ctx, const int64_t* lam, size_t len,
                                       sbw_format fmt, char** out);

/* Cohomology of the weight lam: exact degrees when a regime applies
 * (zero weight, very dominant, generic), always the Euler characteristic. */
SBW_API sbw_status sbw_character_profile(sbw_context* ctx, const int64_t* lam, size_t len,
                                         sbw_format fmt, char** out);

/* Euler characteristic alone, for any weight. */
SBW_API sbw_status sbw_euler(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                             char** out);

/* Exact Q(2) results; Unsupported on any other context. */
SBW_API sbw_status sbw_q2_simple(sbw_context* ctx, const int64_t* lam, size_t len,
                                 sbw_format fmt, char** out);
SBW_API sbw_status sbw_q2_h0(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                             char** out);
SBW_API sbw_status sbw_q2_h1(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                             char** out);

/* Socle of the degree-one cohomology (type q only). */
SBW_API sbw_status sbw_h1_socle(sbw_context* ctx, const int64_t* lam, size_t len,
                                sbw_format fmt, char** out);

/* SVG map of the generic region over a rank-3 q slice; box in [1, 40]. */
SBW_API sbw_status sbw_svg_generic(sbw_context* ctx, int box, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SUPERBBW_H */
