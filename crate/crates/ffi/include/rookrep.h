#ifndef ROOKREP_H
#define ROOKREP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call.
typedef enum RookrepStatus {
  ROOKREP_STATUS_OK = 0,
  ROOKREP_STATUS_NULL_POINTER = 1,
  ROOKREP_STATUS_INVALID_UTF8 = 2,
  ROOKREP_STATUS_INVALID_ARGUMENT = 3,
  ROOKREP_STATUS_PARSE = 4,
  ROOKREP_STATUS_TOO_LARGE = 5,
  // A verification suite ran and at least one check failed.
  ROOKREP_STATUS_VERIFICATION_FAILED = 6,
  ROOKREP_STATUS_INTERNAL = 7,
} RookrepStatus;

// Graph serialization for [`rookrep_bratteli`].
typedef enum RookrepFormat {
  ROOKREP_FORMAT_JSON = 0,
  ROOKREP_FORMAT_DOT = 1,
} RookrepFormat;

// Opaque handle to a seminormal irreducible representation.
typedef struct RookrepIrrep RookrepIrrep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next library call on the same thread.
const char *rookrep_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void rookrep_string_free(char *s);

// All elements of `C_r ≀ R_n` as JSON.
//
// # Safety
// `out` must be a valid pointer.
enum RookrepStatus rookrep_enumerate(size_t n, size_t r, char **out);

// Builds `V_λ^n`; `lambda` is a multipartition in JSON, e.g. `[[2,1],[]]`.
//
// # Safety
// `lambda` must be a nul-terminated string and `out` a valid pointer.
enum RookrepStatus rookrep_irrep_new(const char *lambda, size_t n, struct RookrepIrrep **out);

// Releases a handle from [`rookrep_irrep_new`]. Null is ignored.
//
// # Safety
// `h` must come from [`rookrep_irrep_new`] and not have been freed.
void rookrep_irrep_free(struct RookrepIrrep *h);

// Dimension of the representation.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum RookrepStatus rookrep_irrep_dim(const struct RookrepIrrep *h, size_t *out);

// Label, basis and generator matrices as JSON.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum RookrepStatus rookrep_irrep_json(const struct RookrepIrrep *h, char **out);

// Jucys-Murphy eigenvalues on the basis, as JSON.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum RookrepStatus rookrep_irrep_jm_spectrum(const struct RookrepIrrep *h, char **out);

// Bratteli diagram for `r` up to level `nmax`.
//
// # Safety
// `out` must be a valid pointer.
enum RookrepStatus rookrep_bratteli(size_t r, size_t nmax, enum RookrepFormat format, char **out);

// Applies a word such as `"f0 f1 B"` (rightmost first) to the class `start`,
// written `LAMBDA:M` as in `"[2,1]:0"`, and returns the result as JSON.
//
// # Safety
// `word` and `start` must be nul-terminated strings and `out` a valid pointer.
enum RookrepStatus rookrep_groth_apply(uint64_t p, const char *word, const char *start, char **out);

// Littlewood-Richardson coefficient `c^λ_{μν}`; partitions are JSON arrays.
//
// # Safety
// The partitions must be nul-terminated strings and `out` a valid pointer.
enum RookrepStatus rookrep_lr_coefficient(const char *lambda,
                                          const char *mu,
                                          const char *nu,
                                          uint64_t *out);

// Runs a verification suite (`"all"`, `"jm"`, ...). Zero for `n`, `r`, `p`
// or `degree` selects the default. The JSON report is written to `out` even
// when the status is [`RookrepStatus::VerificationFailed`].
//
// # Safety
// `suite` must be a nul-terminated string and `out` a valid pointer.
enum RookrepStatus rookrep_verify(const char *suite,
                                  size_t n,
                                  size_t r,
                                  uint64_t p,
                                  size_t degree,
                                  char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROOKREP_H */
