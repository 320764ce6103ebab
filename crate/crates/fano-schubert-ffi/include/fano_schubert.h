/* C interface to the fano-schubert exact Schubert-calculus library. */

#ifndef FANO_SCHUBERT_H
#define FANO_SCHUBERT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every FFI call.
typedef enum FsStatus {
  // Success.
  FS_STATUS_OK = 0,
  // A required pointer argument was null.
  FS_STATUS_NULL_POINTER = 1,
  // Arguments failed validation (bad partition, bad dimensions, ...).
  FS_STATUS_INVALID_ARGUMENT = 2,
  // A domain precondition failed (box violation, rank too large, ...).
  FS_STATUS_DOMAIN_ERROR = 3,
  // Internal inconsistency; indicates a bug, not a caller error.
  FS_STATUS_INTERNAL_ERROR = 4,
} FsStatus;

// Opaque ambient-Grassmannian handle.
typedef struct FsGrassmannian FsGrassmannian;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *fs_version(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be a pointer previously returned through a `char**` out
// parameter of this library, not yet freed; null is ignored.
void fs_string_free(char *s);

// Creates a Gr(k,n) handle; requires 0 < k < n.
//
// # Safety
// `out` must be a valid pointer to writable memory.
enum FsStatus fs_grassmannian_new(uint32_t k, uint32_t n, struct FsGrassmannian **out);

// Releases a Grassmannian handle.
//
// # Safety
// `gr` must come from `fs_grassmannian_new` and not be freed twice; null
// is ignored.
void fs_grassmannian_free(struct FsGrassmannian *gr);

// Littlewood-Richardson expansion of σ_λ·σ_μ as JSON:
// {"terms":[{"partition":[...],"coeff":N},...]} sorted descending.
//
// # Safety
// `lambda`/`mu` must point to `lambda_len`/`mu_len` readable u32 values
// (null allowed only when the length is 0); `out_json` must be writable.
enum FsStatus fs_lr_expand(const uint32_t *lambda,
                           size_t lambda_len,
                           const uint32_t *mu,
                           size_t mu_len,
                           char **out_json);

// Dimension of the Schur functor Γ^λ of an r-dimensional space.
//
// # Safety
// `parts` must point to `len` readable u32 values (null allowed when
// `len` is 0); `out` must be writable.
enum FsStatus fs_weyl_dim(const uint32_t *parts, size_t len, uint32_t rank, uint64_t *out);

// Degree of the locus of k-planes on a complete intersection with the
// given form degrees: the integral of `[F]`·σ₁^expdim.
//
// # Safety
// `gr` must be a live handle; `degrees` must point to `degrees_len`
// readable u32 values; `out` must be writable.
enum FsStatus fs_fano_degree(const struct FsGrassmannian *gr,
                             const uint32_t *degrees,
                             size_t degrees_len,
                             int64_t *out);

// Bott cohomology of Γ^a S as JSON: either {"result":"zero"} or
// {"result":{"degree":j,"ambient_weight":[...],"dimension":d}}.
//
// # Safety
// `gr` must be a live handle; `weight` must point to `weight_len`
// readable u32 values; `out_json` must be writable.
enum FsStatus fs_bott_cohomology(const struct FsGrassmannian *gr,
                                 const uint32_t *weight,
                                 size_t weight_len,
                                 char **out_json);

// Euler characteristic of the m-th Plücker twist of the threefold of
// planes by Riemann-Roch; requires expected dimension three.
//
// # Safety
// `gr` must be a live handle; `degrees` must point to `degrees_len`
// readable u32 values; `out` must be writable.
enum FsStatus fs_hrr_chi(const struct FsGrassmannian *gr,
                         const uint32_t *degrees,
                         size_t degrees_len,
                         int64_t m,
                         int64_t *out);

// Alternating sum of the hypercohomology first page for the standard
// threefold (Gr(3,10), degrees 2,2,2), cross-checked against
// Riemann-Roch.
//
// # Safety
// `out` must be writable.
enum FsStatus fs_koszul_euler_check(int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FANO_SCHUBERT_H */
