/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef AUT_FFI_H
#define AUT_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a call.
 */
typedef enum AutStatus {
  AUT_STATUS_OK = 0,
  /**
   * A law check found a violation; the result is still written.
   */
  AUT_STATUS_LAW_FAILURE = 1,
  AUT_STATUS_PARSE = 2,
  AUT_STATUS_SIZE_GUARD = 3,
  /**
   * The input is well formed but unsuitable for the operation.
   */
  AUT_STATUS_CONTRACT = 4,
  AUT_STATUS_NULL_POINTER = 5,
  AUT_STATUS_UTF8 = 6,
  /**
   * A bug in the library; the handle arguments are left untouched.
   */
  AUT_STATUS_INTERNAL = 7,
} AutStatus;

/**
 * Which sort of automaton a handle holds.
 */
typedef enum AutKind {
  AUT_KIND_DFA = 0,
  AUT_KIND_CONGRUENCE = 1,
  AUT_KIND_LASSO = 2,
} AutKind;

/**
 * A parsed automaton or congruence with its state names.
 */
typedef struct AutAutomaton AutAutomaton;

/**
 * The transition Wilke algebra of a lasso automaton.
 */
typedef struct AutWilke AutWilke;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. Valid
 * until the next failing call on the same thread.
 */
const char *aut_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void aut_string_free(char *s);

/**
 * Parses the line-oriented text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum AutStatus aut_automaton_parse(const char *text, struct AutAutomaton **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void aut_automaton_free(struct AutAutomaton *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum AutStatus aut_automaton_kind(const struct AutAutomaton *h, enum AutKind *out);

/**
 * State counts: for a lasso automaton the spoke and loop sorts, otherwise
 * the states (or classes) and zero.
 *
 * # Safety
 * `h` must be a live handle; `first` and `second` must be writable.
 */
enum AutStatus aut_automaton_state_counts(const struct AutAutomaton *h,
                                          size_t *first,
                                          size_t *second);

/**
 * Renders the handle in the text format; free with [`aut_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum AutStatus aut_automaton_to_string(const struct AutAutomaton *h, char **out);

/**
 * Membership: a word for a DFA, a lasso `SPOKE:LOOP` for a lasso automaton.
 *
 * # Safety
 * `h` must be a live handle, `input` a NUL-terminated string and `out`
 * writable.
 */
enum AutStatus aut_accepts(const struct AutAutomaton *h, const char *input, bool *out);

/**
 * νC: the machine of the transition congruence of the reachable part,
 * with states named by class representatives.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum AutStatus aut_nuc(const struct AutAutomaton *h, struct AutAutomaton **out);

/**
 * Whether the accepting set of a lasso automaton respects γ-equivalence.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum AutStatus aut_is_saturated(const struct AutAutomaton *h, bool *out);

/**
 * Whether `u v^ω = u' v'^ω`. `alphabet` lists the symbols separated by
 * spaces; lassos are written `SPOKE:LOOP`.
 *
 * # Safety
 * All strings must be NUL-terminated; `out` must be writable.
 */
enum AutStatus aut_gamma_equivalent(const char *alphabet,
                                    const char *l1,
                                    const char *l2,
                                    bool *out);

/**
 * Builds the transition Wilke algebra of a lasso automaton, checking its
 * laws. A law violation returns `LawFailure` and no handle.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum AutStatus aut_wilke(const struct AutAutomaton *h, struct AutWilke **out);

/**
 * # Safety
 * `w` must come from [`aut_wilke`] and not have been freed. Null is ignored.
 */
void aut_wilke_free(struct AutWilke *w);

/**
 * Number of finite-word and infinite-word classes.
 *
 * # Safety
 * `w` must be a live handle; `plus` and `up` must be writable.
 */
enum AutStatus aut_wilke_counts(const struct AutWilke *w, size_t *plus, size_t *up);

/**
 * Runs every applicable law and writes a JSON array of reports. Returns
 * `LawFailure` (with the report written) when some law fails.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum AutStatus aut_check_laws(const struct AutAutomaton *h, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AUT_FFI_H */
