#ifndef LIEBRANCH_H
#define LIEBRANCH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes shared by all functions.
 */
typedef enum LbStatus {
  LB_STATUS_OK = 0,
  LB_STATUS_NULL_POINTER = 1,
  /**
   * Malformed type string, wrong vector length, non-dominant weight,
   * bad embedding or generator set.
   */
  LB_STATUS_INVALID_ARGUMENT = 2,
  LB_STATUS_OVERFLOW = 3,
  /**
   * An m-value was not found within the given cap.
   */
  LB_STATUS_NOT_FOUND = 4,
  /**
   * A semigroup complement could not be certified within the box.
   */
  LB_STATUS_NOT_CERTIFIED = 5,
  /**
   * Any other computational failure (caps, certificates).
   */
  LB_STATUS_COMPUTATION = 6,
  LB_STATUS_PANIC = 7,
} LbStatus;

/**
 * Opaque generator-set handle for subsemigroups of ℕ^r.
 */
typedef struct LbGeneratorSet LbGeneratorSet;

/**
 * Opaque root-system handle. Characters computed through a handle are
 * memoized for its lifetime; a handle may be shared between threads.
 */
typedef struct LbRootSystem LbRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *lb_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lb_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void lb_string_free(char *s);

/**
 * Builds a root system from a type string such as `"G2"` or `"A1xB2"`.
 *
 * # Safety
 * `type_name` must be a NUL-terminated string; `out` must be writable.
 */
enum LbStatus lb_root_system_new(const char *type_name, struct LbRootSystem **out);

/**
 * # Safety
 * `rs` must come from [`lb_root_system_new`] or be NULL.
 */
void lb_root_system_free(struct LbRootSystem *rs);

/**
 * Rank of the root system, 0 for NULL.
 *
 * # Safety
 * `rs` must be a live handle or NULL.
 */
size_t lb_root_system_rank(const struct LbRootSystem *rs);

/**
 * dim L(λ) by the Weyl dimension formula.
 *
 * # Safety
 * `lambda` must point to `len` values; `out` must be writable.
 */
enum LbStatus lb_weyl_dimension(const struct LbRootSystem *rs,
                                const int64_t *lambda,
                                size_t len,
                                uint64_t *out);

/**
 * Dominant character of L(λ) as JSON:
 * `{"lambda":[..],"mults":[[[weight],mult],..]}`. Free with [`lb_string_free`].
 *
 * # Safety
 * `lambda` must point to `len` values; `out` must be writable.
 */
enum LbStatus lb_character_json(const struct LbRootSystem *rs,
                                const int64_t *lambda,
                                size_t len,
                                char **out);

/**
 * Dimension of the sl2-invariants of L(λ).
 *
 * # Safety
 * Pointer arguments must be valid as documented at the crate level.
 */
enum LbStatus lb_invariant_dim(const struct LbRootSystem *rs,
                               const int64_t *lambda,
                               size_t len,
                               const char *embedding,
                               uint64_t *out);

/**
 * Dimension of the largest sl2-isotypic summand of L(λ).
 *
 * # Safety
 * Pointer arguments must be valid as documented at the crate level.
 */
enum LbStatus lb_g0(const struct LbRootSystem *rs,
                    const int64_t *lambda,
                    size_t len,
                    const char *embedding,
                    uint64_t *out);

/**
 * Least n ≥ 1 with invariants in L(n ω_node), node 1-based; searched up to
 * `cap`. Returns `NotFound` if there is none.
 *
 * # Safety
 * Pointer arguments must be valid as documented at the crate level.
 */
enum LbStatus lb_m_value(const struct LbRootSystem *rs,
                         const char *embedding,
                         size_t node,
                         uint64_t cap,
                         uint64_t *out);

/**
 * The bound b: one more than the largest g₀ over the box of m-values.
 *
 * # Safety
 * Pointer arguments must be valid as documented at the crate level.
 */
enum LbStatus lb_b_bound(const struct LbRootSystem *rs,
                         const char *embedding,
                         uint64_t cap,
                         uint64_t *out);

/**
 * Builds a generator set from `count` generators of dimension `dim`, stored
 * row-major in `flat`.
 *
 * # Safety
 * `flat` must point to `count * dim` values; `out` must be writable.
 */
enum LbStatus lb_generators_new(const uint32_t *flat,
                                size_t count,
                                size_t dim,
                                struct LbGeneratorSet **out);

/**
 * # Safety
 * `gs` must come from [`lb_generators_new`] or be NULL.
 */
void lb_generators_free(struct LbGeneratorSet *gs);

/**
 * Whether `v` lies in the subsemigroup (0 is always a member).
 *
 * # Safety
 * `v` must point to `len` values; `out` must be writable.
 */
enum LbStatus lb_generators_member(const struct LbGeneratorSet *gs,
                                   const uint32_t *v,
                                   size_t len,
                                   bool *out);

/**
 * Complement of the subsemigroup as a JSON array of points in lexicographic
 * order. Fails with `NotCertified` when `box_bound` is too small to prove
 * the list complete.
 *
 * # Safety
 * `out` must be writable.
 */
enum LbStatus lb_generators_complement_json(const struct LbGeneratorSet *gs,
                                            uint32_t box_bound,
                                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEBRANCH_H */
