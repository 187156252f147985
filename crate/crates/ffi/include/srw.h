#ifndef SRW_H
#define SRW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Domain and resource errors use the same numbers as the
 * command-line exit codes.
 */
typedef enum SrwStatus {
  SRW_STATUS_OK = 0,
  /**
   * Null pointer or non-UTF-8 text.
   */
  SRW_STATUS_INVALID_ARGUMENT = 1,
  SRW_STATUS_DOMAIN = 2,
  SRW_STATUS_RESOURCE = 3,
  /**
   * A Rust panic was caught at the boundary.
   */
  SRW_STATUS_INTERNAL = 5,
} SrwStatus;

/**
 * Opaque simplicial complex.
 */
typedef struct SrwComplex SrwComplex;

/**
 * Opaque monomial ideal.
 */
typedef struct SrwIdeal SrwIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next `srw_*` call on the same thread.
 */
const char *srw_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void srw_string_free(char *s);

/**
 * # Safety
 * `out` must be a valid pointer to write a handle to.
 */
enum SrwStatus srw_complex_bipyramid(size_t n, struct SrwComplex **out);

/**
 * # Safety
 * `out` must be a valid pointer to write a handle to.
 */
enum SrwStatus srw_complex_bipyramidal_graph(size_t n, struct SrwComplex **out);

/**
 * Parses `{"vertices": N, "facets": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` a valid pointer.
 */
enum SrwStatus srw_complex_from_json(const char *json, struct SrwComplex **out);

/**
 * # Safety
 * `c` must be a live handle.
 */
size_t srw_complex_num_vertices(const struct SrwComplex *c);

/**
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void srw_complex_free(struct SrwComplex *c);

/**
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_ideal_stanley_reisner(const struct SrwComplex *c, struct SrwIdeal **out);

/**
 * Parses a comma-separated generator list such as `x0*x5, x1*x3`.
 *
 * # Safety
 * `generators` must be a NUL-terminated string; `out` a valid pointer.
 */
enum SrwStatus srw_ideal_parse(const char *generators, size_t num_variables, struct SrwIdeal **out);

/**
 * # Safety
 * `i` must be null or a handle not yet freed.
 */
void srw_ideal_free(struct SrwIdeal *i);

/**
 * # Safety
 * `i` must be a live handle.
 */
size_t srw_ideal_num_generators(const struct SrwIdeal *i);

/**
 * Canonical generator list, e.g. `x0*x5, x1*x3, x2*x4`.
 *
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_ideal_to_string(const struct SrwIdeal *i, char **out);

/**
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_ideal_symbolic_power(const struct SrwIdeal *i,
                                        uint32_t m,
                                        size_t max_generators,
                                        struct SrwIdeal **out);

/**
 * Minimal primes as text, one `<x0,x1,x2>` per line.
 *
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_primary_decomposition(const struct SrwIdeal *i, char **out);

/**
 * `α(I^(m))`; the witness monomial is written to `witness` when non-null.
 *
 * # Safety
 * `i` must be a live handle, `value` a valid pointer, `witness` null or valid.
 */
enum SrwStatus srw_alpha_symbolic(const struct SrwIdeal *i,
                                  uint32_t m,
                                  uint64_t *value,
                                  char **witness);

/**
 * Exact Waldschmidt constant as `p/q` text.
 *
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_waldschmidt(const struct SrwIdeal *i, char **out);

/**
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_big_height(const struct SrwIdeal *i, size_t *out);

/**
 * Whether `I^(m) ⊆ I^r`.
 *
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_containment_check(const struct SrwIdeal *i,
                                     uint32_t m,
                                     uint32_t r,
                                     size_t max_generators,
                                     bool *out);

/**
 * Whether `I^(h·r) ⊆ I^r` for `h` the big height.
 *
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum SrwStatus srw_verify_els_hh(const struct SrwIdeal *i,
                                 uint32_t r,
                                 size_t max_generators,
                                 bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SRW_H */
