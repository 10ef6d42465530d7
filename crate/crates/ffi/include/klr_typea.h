#ifndef KLR_TYPEA_H
#define KLR_TYPEA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KlrStatus {
  KlrStatus_Ok = 0,
  /**
   * Malformed or out-of-range input.
   */
  KlrStatus_Invalid = 1,
  /**
   * The computation rejected its input or an internal check failed.
   */
  KlrStatus_Computation = 2,
  KlrStatus_NullPointer = 3,
  /**
   * A Rust panic was caught at the boundary.
   */
  KlrStatus_Panic = 4,
} KlrStatus;

/**
 * Opaque q-character.
 */
typedef struct KlrQChar KlrQChar;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Free with `klr_string_free`.
 */
char *klr_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void klr_string_free(char *s);

/**
 * Combinatorial R-matrix of `first ⊗ second`; writes the JSON response
 * `{"first","second","bits_in","bits_out"}` to `*out_json`.
 *
 * # Safety
 * The arrays must hold `*_len` readable elements; `out_json` must be writable.
 */
enum KlrStatus klr_sigma_json(uintptr_t n,
                              const uint32_t *first,
                              uintptr_t first_len,
                              const uint32_t *second,
                              uintptr_t second_len,
                              char **out_json);

/**
 * q-character of the module attached to one column.
 *
 * # Safety
 * `entries` must hold `len` readable elements; `out` must be writable.
 */
enum KlrStatus klr_qchar_sp(uintptr_t n,
                            const uint32_t *entries,
                            uintptr_t len,
                            struct KlrQChar **out);

/**
 * Quantum shuffle `left ⧢ right`, multiplied by `q^shift`.
 *
 * # Safety
 * `left` and `right` must be live handles; `out` must be writable.
 */
enum KlrStatus klr_qchar_shuffle(const struct KlrQChar *left,
                                 const struct KlrQChar *right,
                                 int64_t shift,
                                 struct KlrQChar **out);

/**
 * Text rendering, e.g. `(1,3,2)+(3,1,2)`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum KlrStatus klr_qchar_render(const struct KlrQChar *h, char **out);

/**
 * JSON rendering `{"n","terms":[{"word","coeff"}]}`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum KlrStatus klr_qchar_json(const struct KlrQChar *h, char **out);

/**
 * Writes 1 to `*out` when every coefficient is invariant under `q -> q^-1`, else 0.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum KlrStatus klr_qchar_is_bar_invariant(const struct KlrQChar *h, int32_t *out);

/**
 * # Safety
 * `h` must be null or a live handle from this library.
 */
void klr_qchar_free(struct KlrQChar *h);

/**
 * Graded decomposition of the convolution product for the column list
 * `"T_r|...|T_1"`, as the JSON map `{"L(rows)": "laurent"}`.
 *
 * # Safety
 * `columns` must be a nul-terminated string; `out_json` must be writable.
 */
enum KlrStatus klr_decompose_json(uintptr_t n, const char *columns, char **out_json);

/**
 * Runs the golden suite; writes 1 to `*out_passed` when every case passes.
 *
 * # Safety
 * `out_passed` must be writable.
 */
enum KlrStatus klr_selftest(int32_t *out_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KLR_TYPEA_H */
