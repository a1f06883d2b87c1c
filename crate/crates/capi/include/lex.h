#ifndef LEX_H
#define LEX_H

/* Generated from the lex-capi crate; regenerate with a build, do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result discipline for every fallible entry point.
 */
typedef enum LexStatus {
  /**
   * The call succeeded and all out-pointers are filled.
   */
  LexOk = 0,
  /**
   * A parameter was malformed (bad word text, zero alphabet, …).
   */
  LexInvalidArgument = 1,
  /**
   * A required pointer was NULL.
   */
  LexNullPointer = 2,
  /**
   * The operation exceeded its enumeration budget.
   */
  LexBudgetExceeded = 3,
  /**
   * The model/method pairing (or repair on this family) is not defined.
   */
  LexUnsupported = 4,
  /**
   * An internal invariant failed; this is a bug in the library.
   */
  LexInternal = 5,
} LexStatus;

/**
 * Counting strategies accepted by [`lex_model_count`].
 */
typedef enum LexCountMethod {
  /**
   * Budgeted prefix-tree enumeration.
   */
  LexCountBrute = 0,
  /**
   * The model's exact run-structure recurrence.
   */
  LexCountDp = 1,
  /**
   * The closed-form parametrization (run-family model only).
   */
  LexCountFormula = 2,
} LexCountMethod;

/**
 * Code families accepted by [`lex_code_build`].
 */
typedef enum LexCodeFamily {
  /**
   * Parity-anchored 1-spanning family.
   */
  LexFamilyT = 0,
  /**
   * Product-of-halves 2-spanning family.
   */
  LexFamilyU = 1,
  /**
   * Fixed-prefix 2-spanning family.
   */
  LexFamilyV = 2,
} LexCodeFamily;

/**
 * Opaque covering-code handle.
 */
typedef struct LexCode LexCode;

/**
 * Opaque subshift-model handle.
 */
typedef struct LexModel LexModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a pointer previously returned through one of this
 * library's string out-parameters, not yet freed.
 */
void lex_string_free(char *s);

/**
 * A static, never-freed description of a status code.
 */
const char *lex_status_message(enum LexStatus status);

/**
 * Builds the full shift over `{-N,…,N}` (zero included only on request).
 *
 * # Safety
 * `out_model` must be a valid pointer; on `LexOk` it receives a handle the
 * caller must release with [`lex_model_free`].
 */
enum LexStatus lex_model_full(uint32_t max_magnitude,
                              bool include_zero,
                              struct LexModel **out_model);

/**
 * Builds the zero-gap model over `{-N,…,N}`.
 *
 * # Safety
 * `out_model` must be a valid pointer; on `LexOk` it receives a handle the
 * caller must release with [`lex_model_free`].
 */
enum LexStatus lex_model_aws(uint32_t max_magnitude, struct LexModel **out_model);

/**
 * Builds the run-family model over `{-N,…,-1,1,…,N}` with threshold `ell`.
 *
 * # Safety
 * `out_model` must be a valid pointer; on `LexOk` it receives a handle the
 * caller must release with [`lex_model_free`].
 */
enum LexStatus lex_model_aspec(uint32_t max_magnitude, uint32_t ell, struct LexModel **out_model);

/**
 * Wraps a model into its `k`-th higher power (`k = 1` copies the model).
 * The base handle stays valid and still owned by the caller.
 *
 * # Safety
 * `base` must be a live handle from this library; `out_model` must be a
 * valid pointer and receives a new handle to free with [`lex_model_free`].
 */
enum LexStatus lex_model_power(const struct LexModel *base, size_t k, struct LexModel **out_model);

/**
 * Releases a model handle. NULL is ignored.
 *
 * # Safety
 * `model` must be NULL or a handle from this library, not yet freed.
 */
void lex_model_free(struct LexModel *model);

/**
 * Writes the model's parameter summary (e.g. `aspec{N=2,ell=3}`).
 *
 * # Safety
 * `model` must be a live handle; `out_text` must be valid and, on `LexOk`,
 * receives a string to free with [`lex_string_free`].
 */
enum LexStatus lex_model_describe(const struct LexModel *model, char **out_text);

/**
 * Decides membership of `word` in the model's language.
 *
 * # Safety
 * `model` must be a live handle; `word` must be a NUL-terminated string;
 * `out_member` must be valid.
 */
enum LexStatus lex_model_is_member(const struct LexModel *model,
                                   const char *word,
                                   bool *out_member);

/**
 * Counts the length-`n` words of the language by the requested method
 * (`LexCountMethod` value) and writes the count as a decimal string.
 *
 * # Safety
 * `model` must be a live handle; `out_decimal` must be valid and, on
 * `LexOk`, receives a string to free with [`lex_string_free`].
 */
enum LexStatus lex_model_count(const struct LexModel *model,
                               size_t n,
                               uint32_t method,
                               uint64_t budget,
                               char **out_decimal);

/**
 * Writes the `n,count,method,log_rate` CSV of exact counts and per-level
 * entropy upper bounds for `n = 1..=n_max`.
 *
 * # Safety
 * `model` must be a live handle; `out_csv` must be valid and, on `LexOk`,
 * receives a string to free with [`lex_string_free`].
 */
enum LexStatus lex_model_entropy_csv(const struct LexModel *model,
                                     size_t n_max,
                                     uint32_t method,
                                     uint64_t budget,
                                     char **out_csv);

/**
 * The zero-gap gluing gap `2 + ⌈log₃ n⌉` (0 is treated as 1).
 */
uint64_t lex_gap_length(uint64_t n);

/**
 * Glues member words of the zero-gap model with the given zero-run gaps
 * (`gap_count` must be `word_count - 1`, every gap at least the value of
 * [`lex_gap_length`] for the preceding word's length).
 *
 * # Safety
 * `words` must point to `word_count` NUL-terminated strings; `gaps` must
 * point to `gap_count` integers; `out_word` must be valid and, on `LexOk`,
 * receives a string to free with [`lex_string_free`].
 */
enum LexStatus lex_glue_zero_gap(uint32_t max_magnitude,
                                 const char *const *words,
                                 size_t word_count,
                                 const uint64_t *gaps,
                                 size_t gap_count,
                                 char **out_word);

/**
 * Repairs the concatenation of run-family member words into the language,
 * writing the repaired concatenation and the largest per-word letter
 * distance (always at most 4).
 *
 * # Safety
 * `words` must point to `word_count` NUL-terminated strings; `out_word`
 * and `out_max_distance` must be valid; on `LexOk` the string must be
 * freed with [`lex_string_free`].
 */
enum LexStatus lex_repair_concatenation(uint32_t max_magnitude,
                                        uint32_t ell,
                                        const char *const *words,
                                        size_t word_count,
                                        char **out_word,
                                        size_t *out_max_distance);

/**
 * Hamming distance between two equal-length words.
 *
 * # Safety
 * `left` and `right` must be NUL-terminated strings; `out_distance` must
 * be valid.
 */
enum LexStatus lex_hamming(const char *left, const char *right, size_t *out_distance);

/**
 * Builds a covering code of the given family (`LexCodeFamily` value) over
 * the alphabet `{0,…,alphabet_size-1}` at word length `n`.
 *
 * # Safety
 * `out_code` must be a valid pointer; on `LexOk` it receives a handle the
 * caller must release with [`lex_code_free`].
 */
enum LexStatus lex_code_build(uint32_t family,
                              uint32_t alphabet_size,
                              size_t n,
                              struct LexCode **out_code);

/**
 * Releases a code handle. NULL is ignored.
 *
 * # Safety
 * `code` must be NULL or a handle from this library, not yet freed.
 */
void lex_code_free(struct LexCode *code);

/**
 * Writes the code's exact cardinality as a decimal string.
 *
 * # Safety
 * `code` must be a live handle; `out_decimal` must be valid and, on
 * `LexOk`, receives a string to free with [`lex_string_free`].
 */
enum LexStatus lex_code_cardinality(const struct LexCode *code, char **out_decimal);

/**
 * Decides whether `word` belongs to the code.
 *
 * # Safety
 * `code` must be a live handle; `word` must be a NUL-terminated string;
 * `out_member` must be valid.
 */
enum LexStatus lex_code_contains(const struct LexCode *code, const char *word, bool *out_member);

/**
 * Moves `word` into the code within the family's spanning radius and
 * writes the repaired word.
 *
 * # Safety
 * `code` must be a live handle; `word` must be a NUL-terminated string;
 * `out_word` must be valid and, on `LexOk`, receives a string to free
 * with [`lex_string_free`].
 */
enum LexStatus lex_code_repair(const struct LexCode *code, const char *word, char **out_word);

/**
 * Exhaustively verifies that every cube word lies within `radius` letter
 * changes of the code.
 *
 * # Safety
 * `code` must be a live handle; `out_ok` must be valid.
 */
enum LexStatus lex_code_verify_spanning(const struct LexCode *code,
                                        size_t radius,
                                        uint64_t budget,
                                        bool *out_ok);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEX_H */
