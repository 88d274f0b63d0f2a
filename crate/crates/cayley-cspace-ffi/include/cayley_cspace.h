#ifndef CAYLEY_CSPACE_H
#define CAYLEY_CSPACE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum CayleyStatus {
  /**
   * Success.
   */
  CayleyStatus_Ok = 0,
  /**
   * A pointer argument was null.
   */
  CayleyStatus_NullPointer = 1,
  /**
   * Input was not valid UTF-8.
   */
  CayleyStatus_InvalidUtf8 = 2,
  /**
   * The linkage description failed validation.
   */
  CayleyStatus_InvalidInput = 3,
  /**
   * The substrate is not buildable from its base non-edge.
   */
  CayleyStatus_NotBuildable = 4,
  /**
   * The computation panicked; this indicates a library bug.
   */
  CayleyStatus_Internal = 5,
} CayleyStatus;

/**
 * Opaque handle to a validated linkage.
 */
typedef struct CayleyLinkage CayleyLinkage;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a linkage from its JSON file representation and returns an
 * owned handle through `out`.
 *
 * # Safety
 * `json` must be a valid NUL-terminated C string; `out` must be a valid
 * pointer. On `Ok` the handle must be released with
 * [`cayley_linkage_free`].
 */
enum CayleyStatus cayley_linkage_from_json(const char *json, struct CayleyLinkage **out);

/**
 * Releases a handle returned by [`cayley_linkage_from_json`].
 *
 * # Safety
 * `l` must be a handle from this library, released at most once; null is
 * ignored.
 */
void cayley_linkage_free(struct CayleyLinkage *l);

/**
 * Computes the configuration space and writes a freshly allocated flat
 * buffer `[lo0, hi0, lo1, hi1, …]` to `intervals` with the number of
 * intervals in `count`. Free the buffer with [`cayley_intervals_free`].
 *
 * # Safety
 * `l` must be a live handle; `intervals` and `count` must be valid
 * pointers.
 */
enum CayleyStatus cayley_config_space(const struct CayleyLinkage *l,
                                      double abs_tol,
                                      double **intervals,
                                      uintptr_t *count);

/**
 * Releases a buffer returned by [`cayley_config_space`].
 *
 * # Safety
 * `ptr`/`count` must come from a single successful
 * [`cayley_config_space`] call and be released at most once; null is
 * ignored.
 */
void cayley_intervals_free(double *ptr, uintptr_t count);

/**
 * Decides whether some orientation realizes the linkage with the base
 * non-edge at length `dstar`, writing the verdict to `out`.
 *
 * # Safety
 * `l` must be a live handle and `out` a valid pointer.
 */
enum CayleyStatus cayley_realizable_at(const struct CayleyLinkage *l, double dstar, bool *out);

/**
 * Decides low sampling complexity of the substrate, writing the verdict
 * to `out`.
 *
 * # Safety
 * `l` must be a live handle and `out` a valid pointer.
 */
enum CayleyStatus cayley_low_sampling(const struct CayleyLinkage *l, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CAYLEY_CSPACE_H */
