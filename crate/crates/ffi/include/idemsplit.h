#ifndef IDEMSPLIT_H
#define IDEMSPLIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IdemsplitStatus {
  IDEMSPLIT_STATUS_OK = 0,
  /**
   * A bounded search finished without an answer.
   */
  IDEMSPLIT_STATUS_NOT_FOUND = 1,
  /**
   * A definitive negative answer (for example, not inner).
   */
  IDEMSPLIT_STATUS_NEGATIVE = 2,
  IDEMSPLIT_STATUS_NULL_POINTER = 3,
  IDEMSPLIT_STATUS_INVALID_UTF8 = 4,
  IDEMSPLIT_STATUS_PARSE = 5,
  /**
   * Arguments are well-formed but violate a precondition.
   */
  IDEMSPLIT_STATUS_PRECONDITION = 6,
  IDEMSPLIT_STATUS_PANIC = 7,
} IdemsplitStatus;

/**
 * An endomorphism of a free group, optionally with its `x0`.
 */
typedef struct IdemsplitEndo IdemsplitEndo;

/**
 * A finite graph with a base subtree.
 */
typedef struct IdemsplitGraph IdemsplitGraph;

/**
 * An element of Thompson's group `F`, as a word in `a0, a1, …`.
 */
typedef struct IdemsplitWord IdemsplitWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *idemsplit_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void idemsplit_string_free(char *s);

/**
 * Parses an `F`-word such as `"a0 a1^-1"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_word_parse(const char *text, struct IdemsplitWord **out);

/**
 * # Safety
 * `w` must be null or a handle from this library, not yet freed.
 */
void idemsplit_word_free(struct IdemsplitWord *w);

/**
 * Renders `w`; the identity renders as the empty string.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_word_render(const struct IdemsplitWord *w, char **out);

/**
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_word_normal_form(const struct IdemsplitWord *w,
                                                struct IdemsplitWord **out);

/**
 * # Safety
 * `u`, `v` must be live handles; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_word_multiply(const struct IdemsplitWord *u,
                                             const struct IdemsplitWord *v,
                                             struct IdemsplitWord **out);

/**
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_word_inverse(const struct IdemsplitWord *w,
                                            struct IdemsplitWord **out);

/**
 * Equality in `F`.
 *
 * # Safety
 * `u`, `v` must be live handles; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_word_equal(const struct IdemsplitWord *u,
                                          const struct IdemsplitWord *v,
                                          bool *out);

/**
 * Breakpoints of the PL map of `w`, one `x -> y` line each.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_word_pl_render(const struct IdemsplitWord *w, char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum IdemsplitStatus idemsplit_verify_presentation(uint64_t depth, bool *out);

/**
 * Parses an endomorphism file (`rank r`, `x<s> -> word` lines, optional
 * `x0 = word`).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_endo_parse(const char *text, struct IdemsplitEndo **out);

/**
 * # Safety
 * `e` must be null or a handle from this library, not yet freed.
 */
void idemsplit_endo_free(struct IdemsplitEndo *e);

/**
 * Renders `e` in the file format accepted by [`idemsplit_endo_parse`].
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_endo_render(const struct IdemsplitEndo *e, char **out);

/**
 * Whether `f^2(x) = x0^-1 f(x) x0` holds; needs `x0`.
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_endo_check(const struct IdemsplitEndo *e, bool *out);

/**
 * Looks for `a` with `f(x) = a^-1 x a`. Returns `OK` and writes `a` to
 * `out_conjugator`, `NEGATIVE` when some `f(x_s)` is not conjugate to
 * `x_s`, or `NOT_FOUND` when the exponent bound was exhausted.
 *
 * # Safety
 * `e` must be a live handle; `out_conjugator` must be writable.
 */
enum IdemsplitStatus idemsplit_endo_is_inner(const struct IdemsplitEndo *e,
                                             uint32_t exp_bound,
                                             char **out_conjugator);

/**
 * Splits a power of `f` from a kernel element of `e` in standard form.
 * Writes `n`, the conjugator `y`, and the idempotent `g(x) = y f^n(x) y^-1`.
 *
 * # Safety
 * `e` and `kernel` must be live handles; all out-pointers must be writable.
 */
enum IdemsplitStatus idemsplit_endo_split_from_kernel(const struct IdemsplitEndo *e,
                                                      const struct IdemsplitWord *kernel,
                                                      uint32_t *out_power,
                                                      char **out_conjugator,
                                                      struct IdemsplitEndo **out_idempotent);

/**
 * Parses a graph file (`vertices n`, `edge id tail head`, `base ids…`,
 * optional `basevertex v`).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_graph_parse(const char *text, struct IdemsplitGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, not yet freed.
 */
void idemsplit_graph_free(struct IdemsplitGraph *g);

/**
 * Connectivity of the graph and the subtree condition on the base.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_graph_validate(const struct IdemsplitGraph *g, bool *out);

/**
 * Canonical representative of the class of a path such as `"e1 e2^-1"`;
 * the identity class renders as the empty string.
 *
 * # Safety
 * `g` must be a live handle, `path` a NUL-terminated string, `out` writable.
 */
enum IdemsplitStatus idemsplit_graph_class(const struct IdemsplitGraph *g,
                                           const char *path,
                                           char **out);

/**
 * Number of classes with canonical length at most `max_len`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_graph_enumerate_count(const struct IdemsplitGraph *g,
                                                     size_t max_len,
                                                     size_t *out);

/**
 * Whether loops at `x0` map isomorphically onto the relative group on the
 * window of length `max_len`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_graph_iso_check(const struct IdemsplitGraph *g,
                                               size_t x0,
                                               size_t max_len,
                                               bool *out);

/**
 * Runs acceptance criterion `id` (1 to 9) at `profile` (`"small"` or
 * `"standard"`) and writes whether it passed.
 *
 * # Safety
 * `profile` must be a NUL-terminated string; `out` must be writable.
 */
enum IdemsplitStatus idemsplit_verify_criterion(uint8_t id,
                                                const char *profile,
                                                uint64_t seed,
                                                bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IDEMSPLIT_H */
