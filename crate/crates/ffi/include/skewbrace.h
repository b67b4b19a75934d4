#ifndef SKEWBRACE_H
#define SKEWBRACE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes; `BRACE_STATUS_OK` is zero.
typedef enum BraceStatus {
  BRACE_STATUS_OK = 0,
  BRACE_STATUS_NULL_POINTER = 1,
  BRACE_STATUS_PARSE = 2,
  BRACE_STATUS_VALIDATION = 3,
  BRACE_STATUS_RESOURCE = 4,
  BRACE_STATUS_OUT_OF_RANGE = 5,
  BRACE_STATUS_PANIC = 6,
} BraceStatus;

// Opaque brace handle.
typedef struct BraceHandle BraceHandle;

// Nilpotency classes; `-1` means the corresponding series never terminates.
typedef struct BraceProfile {
  int64_t left;
  int64_t right;
  int64_t socle;
  int64_t annihilator;
  int64_t add_group;
  int64_t mult_group;
} BraceProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a brace from a NUL-terminated JSON description.
//
// # Safety
// `json` must be a valid C string and `out` a valid pointer to write to.
enum BraceStatus brace_from_json(const char *json, uint64_t seed, struct BraceHandle **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `h` must come from [`brace_from_json`] and not have been freed.
void brace_free(struct BraceHandle *h);

// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum BraceStatus brace_order(const struct BraceHandle *h, size_t *out);

// `a · b`.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum BraceStatus brace_dot(const struct BraceHandle *h, size_t a, size_t b, size_t *out);

// `a ∘ b`.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum BraceStatus brace_circ(const struct BraceHandle *h, size_t a, size_t b, size_t *out);

// `a * b = λ_a(b) · b^{-1}`.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum BraceStatus brace_star(const struct BraceHandle *h, size_t a, size_t b, size_t *out);

// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum BraceStatus brace_profile(const struct BraceHandle *h, struct BraceProfile *out);

// Full analysis report as a JSON string; free with [`brace_string_free`].
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum BraceStatus brace_analyze_json(const struct BraceHandle *h, uint64_t seed, char **out);

// One series as JSON. `kind` is one of `left`, `right`, `smoktunowicz`,
// `socle`, `annihilator`, `gamma`, `gamma_prime`, `add_group_lower`,
// `mult_group_lower`.
//
// # Safety
// `h` must be a live handle, `kind` a valid C string and `out` a valid pointer.
enum BraceStatus brace_series_json(const struct BraceHandle *h, const char *kind, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void brace_string_free(char *s);

// Message of the last failure on this thread (empty if none). The pointer
// stays valid until the next failing call on the same thread.
const char *brace_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SKEWBRACE_H */
