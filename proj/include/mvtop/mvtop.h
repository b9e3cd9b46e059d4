#ifndef MVTOP_MVTOP_H
#define MVTOP_MVTOP_H

/*
 * C interface to the mvtop library.
 *
 * Documents cross the boundary as UTF-8 JSON text. Functions that produce
 * text return it through a char** out-parameter; release it with
 * mvt_string_free. Spaces are opaque handles released with mvt_space_free.
 *
 * Every function returns an mvt_status. Predicates and searches report
 * their verdict as MVT_OK (true / found) or MVT_FALSE (false / none) and
 * still write a report. On any error status the out-parameters are left
 * untouched and mvt_last_error() describes the failure on this thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MVT_API
#else
#define MVT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvt_status {
  MVT_OK = 0,
  MVT_FALSE = 1,
  MVT_E_INPUT = 2,
  MVT_E_RESOURCE = 3,
  MVT_E_PRECONDITION = 4,
  MVT_E_INTERNAL = 5
} mvt_status;

typedef struct mvt_options {
  size_t max_opens;     /* cap on generated opens; a document's max_opens wins */
  size_t max_nodes;     /* branch-and-bound node cap for the cover solvers */
  int oracle;           /* check: brute-force compactness */
  int subbase_only;     /* product, metric: emit the subbase instead of opens */
  int inject_noncover;  /* verify lemma1: feed non-covers */
} mvt_options;

typedef struct mvt_space mvt_space;

MVT_API mvt_options mvt_default_options(void);

MVT_API const char* mvt_version(void);
MVT_API const char* mvt_status_name(mvt_status status);
/* Message for the last error status returned on the calling thread. */
MVT_API const char* mvt_last_error(void);
MVT_API void mvt_string_free(char* text);

/* Parses a space document (subbase, opens or bare family). */
MVT_API mvt_status mvt_space_parse(const char* json, mvt_space** out);
MVT_API void mvt_space_free(mvt_space* space);
MVT_API mvt_status mvt_space_to_json(const mvt_space* space, char** out);
MVT_API mvt_status mvt_space_points(const mvt_space* space, size_t* out);
MVT_API mvt_status mvt_space_chain(const mvt_space* space, int* out);
/* Number of sets in the document's family. */
MVT_API mvt_status mvt_space_family_size(const mvt_space* space, size_t* out);

/* The topology described by the document, as a new opens document. */
MVT_API mvt_status mvt_generate(const mvt_space* space, const mvt_options* options,
                                mvt_space** out);

/*
 * kind: "topology", "compact", "strong-compact", "hausdorff", "zerodim",
 * "stone" or "large-subbase". Returns MVT_OK or MVT_FALSE with a report.
 */
MVT_API mvt_status mvt_check(const mvt_space* space, const char* kind,
                             const mvt_options* options, char** report);

/* Product of `count` spaces over one chain, as a space document. */
MVT_API mvt_status mvt_product(const mvt_space* const* factors, size_t count,
                               const mvt_options* options, char** out);

/* Minimum-total additive cover / minimum-size subcover of the document's
 * family. MVT_FALSE with an "infeasible" report when none exists. */
MVT_API mvt_status mvt_mincover(const mvt_space* family, const mvt_options* options,
                                char** out);
MVT_API mvt_status mvt_subcover(const mvt_space* family, const mvt_options* options,
                                char** out);

/* Metric document in, space document out. */
MVT_API mvt_status mvt_metric(const char* metric_json, const mvt_options* options,
                              char** out);

/* Map document (spaces inline) in; MVT_OK when the map is continuous. */
MVT_API mvt_status mvt_continuity(const char* map_json, const mvt_options* options,
                                  char** report);

/* Runs a randomized suite; MVT_OK when every case passes. */
MVT_API mvt_status mvt_verify(const char* suite, uint64_t seed, uint64_t cases,
                              const mvt_options* options, char** report);

#ifdef __cplusplus
}
#endif

#endif /* MVTOP_MVTOP_H */
