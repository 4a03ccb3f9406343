#ifndef BICOMPLEX_SBT_H
#define BICOMPLEX_SBT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum BcStatus {
  BC_STATUS_OK = 0,
  BC_STATUS_NULL_POINTER = 1,
  BC_STATUS_INVALID_PARAMETER = 2,
  BC_STATUS_NULL_CONE = 3,
  BC_STATUS_BRANCH_CUT = 4,
  BC_STATUS_EXCLUDED_PARAMETER = 5,
  BC_STATUS_NON_FINITE = 6,
  BC_STATUS_CONVERGENCE = 7,
  BC_STATUS_DOMAIN = 8,
  BC_STATUS_DIMENSION_MISMATCH = 9,
  BC_STATUS_INDEX_OUT_OF_RANGE = 10,
  BC_STATUS_PANIC = 99,
} BcStatus;

/**
 * Coefficients in the Hermite basis of `L²(ℝ, e^{−σx²})`. Opaque.
 */
typedef struct BcHermite BcHermite;

/**
 * Coefficients in the monomial basis of the bicomplex Bargmann space. Opaque.
 */
typedef struct BcMonomial BcMonomial;

/**
 * Gauss-Hermite rule. Opaque.
 */
typedef struct BcQuadrature BcQuadrature;

/**
 * `(x1 + i y1) + j (x2 + i y2)`.
 */
typedef struct BcNumber {
  double x1;
  double y1;
  double x2;
  double y2;
} BcNumber;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *bc_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bc_version(void);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_mul(struct BcNumber a, struct BcNumber b, struct BcNumber *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_exp(struct BcNumber a, struct BcNumber *out);

/**
 * Fails with `NullCone` for zero divisors.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_inverse(struct BcNumber a, struct BcNumber *out);

/**
 * `e^{(ν/2) Z W*}`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_kernel(double nu, struct BcNumber z, struct BcNumber w, struct BcNumber *out);

/**
 * Closed-form Mehler kernel `Σ θⁿ ψ_n(x) ψ_n(y)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_mehler(double sigma,
                        struct BcNumber theta,
                        double x,
                        double y,
                        struct BcNumber *out);

/**
 * Rule for `∫ f(t) e^{−γt²} dt` with `order` nodes.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_quadrature_create(size_t order, double gamma, struct BcQuadrature **out);

/**
 * # Safety
 * `rule` must come from [`bc_quadrature_create`] and not be used afterwards.
 */
void bc_quadrature_free(struct BcQuadrature *rule);

/**
 * # Safety
 * `rule` must be a live handle or null.
 */
size_t bc_quadrature_order(const struct BcQuadrature *rule);

/**
 * Node and weight `k`.
 *
 * # Safety
 * `rule` must be a live handle; `node` and `weight` valid for writes.
 */
enum BcStatus bc_quadrature_point(const struct BcQuadrature *rule,
                                  size_t k,
                                  double *node,
                                  double *weight);

/**
 * Copies `len` coefficients into a new Hermite vector.
 *
 * # Safety
 * `coeffs` must point to `len` values; `out` valid for writes.
 */
enum BcStatus bc_hermite_create(double sigma,
                                const struct BcNumber *coeffs,
                                size_t len,
                                struct BcHermite **out);

/**
 * # Safety
 * `v` must come from this library and not be used afterwards.
 */
void bc_hermite_free(struct BcHermite *v);

/**
 * # Safety
 * `v` must be a live handle or null.
 */
size_t bc_hermite_len(const struct BcHermite *v);

/**
 * Copies up to `cap` coefficients into `buf` and stores the full length in
 * `len`.
 *
 * # Safety
 * `v` live; `buf` valid for `cap` writes (may be null when `cap` is 0).
 */
enum BcStatus bc_hermite_coeffs(const struct BcHermite *v,
                                struct BcNumber *buf,
                                size_t cap,
                                size_t *len);

/**
 * `Σ a_n ψ_n(x)`.
 *
 * # Safety
 * `v` live; `out` valid for writes.
 */
enum BcStatus bc_hermite_eval(const struct BcHermite *v, double x, struct BcNumber *out);

/**
 * # Safety
 * `coeffs` must point to `len` values; `out` valid for writes.
 */
enum BcStatus bc_monomial_create(double nu,
                                 const struct BcNumber *coeffs,
                                 size_t len,
                                 struct BcMonomial **out);

/**
 * # Safety
 * `v` must come from this library and not be used afterwards.
 */
void bc_monomial_free(struct BcMonomial *v);

/**
 * # Safety
 * `v` must be a live handle or null.
 */
size_t bc_monomial_len(const struct BcMonomial *v);

/**
 * # Safety
 * Same contract as [`bc_hermite_coeffs`].
 */
enum BcStatus bc_monomial_coeffs(const struct BcMonomial *v,
                                 struct BcNumber *buf,
                                 size_t cap,
                                 size_t *len);

/**
 * `Σ b_n Zⁿ`.
 *
 * # Safety
 * `v` live; `out` valid for writes.
 */
enum BcStatus bc_monomial_eval(const struct BcMonomial *v, struct BcNumber z, struct BcNumber *out);

/**
 * Forward Segal-Bargmann transform into the Bargmann space of weight `nu`.
 *
 * # Safety
 * `v` live; `out` valid for writes. The new handle is owned by the caller.
 */
enum BcStatus bc_sbt_forward(const struct BcHermite *v, double nu, struct BcMonomial **out);

/**
 * Inverse transform back to Hermite coefficients with weight `sigma`.
 *
 * # Safety
 * `v` live; `out` valid for writes. The new handle is owned by the caller.
 */
enum BcStatus bc_sbt_inverse(const struct BcMonomial *v, double sigma, struct BcHermite **out);

/**
 * Fractional Fourier transform with `θ` on the unit torus; `inverse != 0`
 * applies `F_θ*`. Fails with `ExcludedParameter` when a component of `θ` is
 * ±1 and `Domain` when `θ` is off the torus.
 *
 * # Safety
 * `v` live; `out` valid for writes. The new handle is owned by the caller.
 */
enum BcStatus bc_frft(const struct BcHermite *v,
                      struct BcNumber theta,
                      bool inverse,
                      struct BcHermite **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BICOMPLEX_SBT_H */
