/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef OMEGA_ENTROPY_H
#define OMEGA_ENTROPY_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum {
  OE_STATUS_OK = 0,
  OE_STATUS_NULL_POINTER = 1,
  // Malformed input: bad probabilities, counts, sizes, indices or ranges.
  OE_STATUS_INVALID_ARGUMENT = 2,
  // A sample size below the operation's minimum.
  OE_STATUS_INVALID_N = 3,
  // Argument outside the mathematical domain of the function.
  OE_STATUS_DOMAIN = 4,
  // An outcome or group with zero probability where one is not allowed.
  OE_STATUS_ZERO_PROBABILITY = 5,
  // Beans-per-bean requested for an alphabet smaller than 2.
  OE_STATUS_INVALID_UNIT = 6,
  // Enumeration would exceed the composition guard.
  OE_STATUS_TOO_LARGE = 7,
  // Caller buffer shorter than the data to be written.
  OE_STATUS_BUFFER_TOO_SMALL = 8,
  OE_STATUS_PANIC = 9,
} OeStatus;

// Entropy unit selector.
typedef enum {
  OE_UNIT_KIND_NATS = 0,
  OE_UNIT_KIND_BITS = 1,
  // Divide by `ln m`; `m` comes from [`OeUnit::m`].
  OE_UNIT_KIND_BEANS_PER_BEAN = 2,
} OeUnitKind;

// Length-prefix sizing for naive framing.
typedef enum {
  // `log2 N` as a real number.
  OE_PREFIX_EXACT = 0,
  // `ceil(log2 N)` whole bits.
  OE_PREFIX_WHOLE_BITS = 1,
} OePrefix;

typedef struct OeCoarseGrained OeCoarseGrained;

typedef struct OeCompositions OeCompositions;

typedef struct OeCountVector OeCountVector;

typedef struct OePartition OePartition;

typedef struct OeProbDist OeProbDist;

typedef struct {
  OeUnitKind kind;
  // Alphabet size for `OE_UNIT_KIND_BEANS_PER_BEAN`; ignored otherwise.
  size_t m;
} OeUnit;

// One within-group term of a coarse-grained decomposition, in nats.
typedef struct {
  double mass;
  double sample_size;
  size_t outcomes;
  double entropy;
} OeGroupTerm;

// Utilization and overhead bounds; see `oe_channel_report`.
typedef struct {
  uint64_t message_bits;
  size_t alphabet;
  double max_utilization;
  double min_overhead;
  double naive_payload_fraction;
  double shannon_utilization;
  bool beats_naive;
  bool negative_overhead;
} OeChannelReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code.
const char *oe_status_message(OeStatus status);

// Message for the most recent failed call on this thread, or NULL after a
// successful one. Valid until the next library call on the same thread.
const char *oe_last_error_message(void);

// Library version as a NUL-terminated string.
const char *oe_version(void);

double oe_euler_gamma(void);

// # Safety
// `out` must be a valid pointer to a `double`.
OeStatus oe_log_gamma(double x, double *out);

// Validates `probs[0..len]` (non-negative, summing to 1 within 1e-9) and
// copies it into a new handle.
//
// # Safety
// `probs` must point to `len` doubles; `out` must be valid.
OeStatus oe_prob_dist_new(const double *probs, size_t len, OeProbDist **out);

// Rescales non-negative `weights[0..len]` to sum to 1.
//
// # Safety
// `weights` must point to `len` doubles; `out` must be valid.
OeStatus oe_prob_dist_normalize(const double *weights, size_t len, OeProbDist **out);

// # Safety
// `out` must be valid.
OeStatus oe_prob_dist_uniform(size_t m, OeProbDist **out);

// Number of outcomes, 0 for NULL.
//
// # Safety
// `p` must be NULL or a live handle.
size_t oe_prob_dist_len(const OeProbDist *p);

// Pointer to the `oe_prob_dist_len(p)` probabilities, owned by the handle.
//
// # Safety
// `p` must be NULL or a live handle.
const double *oe_prob_dist_data(const OeProbDist *p);

// # Safety
// `p` must be NULL or a handle not yet freed.
void oe_prob_dist_free(OeProbDist *p);

// # Safety
// `counts` must point to `len` values; `out` must be valid.
OeStatus oe_count_vector_new(const uint64_t *counts, size_t len, OeCountVector **out);

// Histogram of `bytes[0..len]`: 256 byte slots, or `[zeros, ones]` over
// individual bits when `bits` is true.
//
// # Safety
// `bytes` must point to `len` bytes; `out` must be valid.
OeStatus oe_count_vector_from_bytes(const uint8_t *bytes,
                                    size_t len,
                                    bool bits,
                                    OeCountVector **out);

// # Safety
// `c` must be NULL or a live handle.
size_t oe_count_vector_len(const OeCountVector *c);

// Total number of events `N`, 0 for NULL.
//
// # Safety
// `c` must be NULL or a live handle.
uint64_t oe_count_vector_total(const OeCountVector *c);

// # Safety
// `c` must be NULL or a live handle.
const uint64_t *oe_count_vector_data(const OeCountVector *c);

// Empirical distribution `n_i / N`.
//
// # Safety
// `c` must be a live handle; `out` must be valid.
OeStatus oe_count_vector_to_prob_dist(const OeCountVector *c, OeProbDist **out);

// # Safety
// `c` must be NULL or a handle not yet freed.
void oe_count_vector_free(OeCountVector *c);

// # Safety
// `p` must be a live handle; `out` must be valid.
OeStatus oe_shannon_entropy(const OeProbDist *p, OeUnit unit, double *out);

// `H_Ω` of an observed count vector.
//
// # Safety
// `c` must be a live handle; `out` must be valid.
OeStatus oe_omega_entropy_counts(const OeCountVector *c, OeUnit unit, double *out);

// `H_Ω` at the equilibrium `n_i = N p_i`.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
OeStatus oe_omega_entropy_equilibrium(const OeProbDist *p, uint64_t n, OeUnit unit, double *out);

// Equilibrium `H_Ω` of the uniform distribution over `m` outcomes,
// evaluated in O(1).
//
// # Safety
// `out` must be valid.
OeStatus oe_omega_entropy_uniform(uint64_t m, uint64_t n, OeUnit unit, double *out);

// Large-`N` estimate of `H_S - H_Ω`, in nats.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
OeStatus oe_entropy_gap_asymptotic(const OeProbDist *p, uint64_t n, double *out);

// `γ + ln Γ(N+1)/N`, in nats.
//
// # Safety
// `out` must be valid.
OeStatus oe_omega_entropy_sparse_limit(uint64_t n, double *out);

// Entropy of the renormalized first `m` entries of `head`, in beans per
// bean.
//
// # Safety
// `head` must point to `len` doubles; `out` must be valid.
OeStatus oe_normalized_truncated_entropy(const double *head, size_t len, size_t m, double *out);

// Re-expresses `value` from one unit in another.
//
// # Safety
// `out` must be valid.
OeStatus oe_convert(double value, OeUnit from, OeUnit to, double *out);

// `ln Ω = ln N! - Σ ln n_i!`.
//
// # Safety
// `c` must be a live handle; `out` must be valid.
OeStatus oe_log_statistical_weight(const OeCountVector *c, double *out);

// Log-probability of `c` under `Multinomial(N, p)`; `-INFINITY` for
// impossible vectors.
//
// # Safety
// `c` and `p` must be live handles; `out` must be valid.
OeStatus oe_multinomial_log_pmf(const OeCountVector *c, const OeProbDist *p, double *out);

// Number of weak compositions of `n` into `m` parts. Exact up to the 10^7
// enumeration guard; beyond it, some value larger than the guard.
uint64_t oe_composition_count(uint64_t n, size_t m);

// Most probable count vector, by exhaustive enumeration.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
OeStatus oe_brute_force_mode(uint64_t n, const OeProbDist *p, OeCountVector **out);

// Iterator over all compositions of `n` into `m` parts, in
// lexicographically descending order.
//
// # Safety
// `out` must be valid.
OeStatus oe_compositions_new(uint64_t n, size_t m, OeCompositions **out);

// Copies the next composition into `buf[0..len]` and sets `*has_next`;
// when the walk is exhausted `*has_next` is false and `buf` is untouched.
//
// # Safety
// `it` must be a live handle, `buf` must hold `len` values, `has_next`
// must be valid.
OeStatus oe_compositions_next(OeCompositions *it, uint64_t *buf, size_t len, bool *has_next);

// # Safety
// `it` must be NULL or a handle not yet freed.
void oe_compositions_free(OeCompositions *it);

// Replaces outcome `index` by `p_index (1 - lambda)` in place and appends
// `p_index lambda`.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
OeStatus oe_split_outcome(const OeProbDist *p, size_t index, double lambda, OeProbDist **out);

// Residual of the split-outcome recursion identity, in nats.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
OeStatus oe_recursion_residual(const OeProbDist *p,
                               size_t index,
                               double lambda,
                               uint64_t n,
                               double *out);

// Partition from one group label per outcome; labels must cover
// `0..K` without gaps.
//
// # Safety
// `labels` must point to `len` values; `out` must be valid.
OeStatus oe_partition_from_labels(const size_t *labels, size_t len, OePartition **out);

// Number of groups, 0 for NULL.
//
// # Safety
// `part` must be NULL or a live handle.
size_t oe_partition_len(const OePartition *part);

// # Safety
// `part` must be NULL or a handle not yet freed.
void oe_partition_free(OePartition *part);

// # Safety
// `p` and `part` must be live handles; `out` must be valid.
OeStatus oe_coarse_grain(const OeProbDist *p,
                         const OePartition *part,
                         uint64_t n,
                         OeCoarseGrained **out);

// Between-group entropy in nats, NaN for NULL.
//
// # Safety
// `cg` must be NULL or a live handle.
double oe_coarse_grained_coarse(const OeCoarseGrained *cg);

// Reassembled total entropy in nats, NaN for NULL.
//
// # Safety
// `cg` must be NULL or a live handle.
double oe_coarse_grained_total(const OeCoarseGrained *cg);

// # Safety
// `cg` must be NULL or a live handle.
size_t oe_coarse_grained_groups(const OeCoarseGrained *cg);

// # Safety
// `cg` must be a live handle; `out` must be valid.
OeStatus oe_coarse_grained_group(const OeCoarseGrained *cg, size_t k, OeGroupTerm *out);

// # Safety
// `cg` must be NULL or a handle not yet freed.
void oe_coarse_grained_free(OeCoarseGrained *cg);

// `total - H_Ω(p; N)` for the decomposition over `part`.
//
// # Safety
// `p` and `part` must be live handles; `out` must be valid.
OeStatus oe_coarse_grain_residual(const OeProbDist *p,
                                  const OePartition *part,
                                  uint64_t n,
                                  double *out);

// # Safety
// `out` must be valid.
OeStatus oe_max_payload_binary(uint64_t n, double *out);

// # Safety
// `out` must be valid.
OeStatus oe_min_overhead_binary(uint64_t n, double *out);

// # Safety
// `out` must be valid.
OeStatus oe_naive_framing_payload(uint64_t n, OePrefix prefix, double *out);

// # Safety
// `p` must be a live handle; `out` must be valid.
OeStatus oe_channel_report(const OeProbDist *p, uint64_t n, OePrefix prefix, OeChannelReport *out);

// `header_bits / (header_bits + n)`.
double oe_real_overhead(uint64_t header_bits, uint64_t n);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OMEGA_ENTROPY_H */
