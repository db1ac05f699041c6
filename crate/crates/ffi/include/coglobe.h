#ifndef COGLOBE_H
#define COGLOBE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call.
 */
typedef enum CgStatus {
  CG_STATUS_OK = 0,
  /**
   * A check ran and found violations; the report is still produced.
   */
  CG_STATUS_VALIDATION_FAILED = 1,
  /**
   * Malformed input: bad JSON, unknown names, null pointers.
   */
  CG_STATUS_INVALID_INPUT = 2,
  /**
   * A closure bound was exceeded.
   */
  CG_STATUS_BOUND_EXCEEDED = 3,
  /**
   * The input violates a precondition of the operation.
   */
  CG_STATUS_PRECONDITION = 4,
  /**
   * A bug in the library; the message carries the panic payload.
   */
  CG_STATUS_INTERNAL = 5,
} CgStatus;

/**
 * Coefficient ring selector.
 */
typedef enum CgRing {
  CG_RING_INTEGERS = 0,
  CG_RING_F2 = 1,
} CgRing;

/**
 * An ordered simplicial complex with its cup-i coalgebra.
 */
typedef struct CgComplex CgComplex;

/**
 * A finite reflexive globular set.
 */
typedef struct CgGlobular CgGlobular;

/**
 * A generated ω-category over the integers, with the complex naming its cells.
 */
typedef struct CgOmega CgOmega;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Owned by the
 * library; valid until the next call.
 */
const char *cg_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void cg_string_free(char *s);

/**
 * Parses a globular set from its JSON form. The relations are not checked;
 * see [`cg_globular_validate`].
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CgStatus cg_globular_from_json(const char *json, struct CgGlobular **out);

/**
 * # Safety
 * `h` must come from [`cg_globular_from_json`] and not have been freed.
 */
void cg_globular_free(struct CgGlobular *h);

/**
 * Checks the globular relations; writes the JSON report to `report`.
 *
 * # Safety
 * `h` must be a live handle and `report` a valid pointer.
 */
enum CgStatus cg_globular_validate(const struct CgGlobular *h, char **report);

/**
 * Checks the cosymmetry relation and counit of the globular coalgebra up
 * to `kmax`; writes the JSON report to `report`.
 *
 * # Safety
 * `h` must be a live handle and `report` a valid pointer.
 */
enum CgStatus cg_globular_validate_coalgebra(const struct CgGlobular *h,
                                             enum CgRing ring,
                                             size_t kmax,
                                             char **report);

/**
 * Parses `{ "maximal_simplices": [[0, 1, 2], ...] }`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CgStatus cg_complex_from_json(const char *json, struct CgComplex **out);

/**
 * The standard `n`-simplex.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CgStatus cg_complex_simplex(size_t n, struct CgComplex **out);

/**
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void cg_complex_free(struct CgComplex *h);

/**
 * Checks the cosymmetry relation of the cup-i coalgebra up to `kmax`.
 *
 * # Safety
 * `h` must be a live handle and `report` a valid pointer.
 */
enum CgStatus cg_complex_validate_coalgebra(const struct CgComplex *h, size_t kmax, char **report);

/**
 * Checks that the integral chains form a strong augmented directed complex.
 *
 * # Safety
 * `h` must be a live handle and `report` a valid pointer.
 */
enum CgStatus cg_complex_validate_sadc(const struct CgComplex *h, char **report);

/**
 * Writes up to `cap` mod 2 Betti numbers to `ranks` and their count to
 * `len`. When `len > cap` the call succeeds with a truncated array.
 *
 * # Safety
 * `h` must be a live handle, `ranks` valid for `cap` writes, `len` valid.
 */
enum CgStatus cg_complex_cohomology(const struct CgComplex *h,
                                    size_t *ranks,
                                    size_t cap,
                                    size_t *len);

/**
 * Sets `nonzero` to whether `Sq^k` is non-zero on the `index`-th generator
 * of `H^degree`.
 *
 * # Safety
 * `h` must be a live handle and `nonzero` a valid pointer.
 */
enum CgStatus cg_complex_sq_nonzero(const struct CgComplex *h,
                                    size_t k,
                                    size_t degree,
                                    size_t index,
                                    bool *nonzero);

/**
 * Generates the oriental of the `n`-simplex within the given bounds.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CgStatus cg_oriental(size_t n, size_t max_elements, uint64_t max_coeff, struct CgOmega **out);

/**
 * Number of elements; 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t cg_omega_len(const struct CgOmega *h);

/**
 * Writes the JSON document of the ω-category to `json`.
 *
 * # Safety
 * `h` must be a live handle and `json` a valid pointer.
 */
enum CgStatus cg_omega_to_json(const struct CgOmega *h, char **json);

/**
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void cg_omega_free(struct CgOmega *h);

/**
 * Runs the command line with `argc` arguments (without the program name).
 * Standard output is written to `out`; the return value is the exit code,
 * or -1 when the arguments themselves are unusable.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; `out` must be valid.
 */
int32_t cg_cli_run(size_t argc, const char *const *argv, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COGLOBE_H */
