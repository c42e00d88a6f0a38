//! C ABI over `omega-entropy`.
//!
//! Conventions:
//!
//! * Every fallible function returns an [`OeStatus`] and writes its result
//!   through an out-pointer. On failure the out-pointer is left untouched and
//!   [`oe_last_error_message`] describes the problem.
//! * Handles (`OeProbDist`, `OeCountVector`, ...) are opaque, created by an
//!   `oe_*_new`-style function and released with the matching `oe_*_free`.
//!   Passing `NULL` to a free function is a no-op.
//! * Outcome indices are 0-based.
//! * Panics never cross the boundary; they surface as `OE_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use omega_entropy::channel::{
    channel_report_with, max_payload_binary, min_overhead_binary, naive_framing_payload_with,
    real_overhead, LengthPrefix,
};
use omega_entropy::decomposition::{coarse_grain, coarse_grain_residual, CoarseGrained};
use omega_entropy::dist::empirical_bits_from_bytes;
use omega_entropy::entropy::{omega_entropy_uniform, EntropyUnit, EntropyValue};
use omega_entropy::multinomial::{composition_count, Compositions};
use omega_entropy::{
    brute_force_mode, convert, empirical_from_bytes, entropy_gap_asymptotic, euler_gamma,
    log_gamma, log_statistical_weight, multinomial_log_pmf, normalized_truncated_entropy,
    omega_entropy_counts, omega_entropy_equilibrium, omega_entropy_sparse_limit,
    recursion_residual, shannon_entropy, split_outcome, CountVector, Error, Partition, ProbDist,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed input: bad probabilities, counts, sizes, indices or ranges.
    InvalidArgument = 2,
    /// A sample size below the operation's minimum.
    InvalidN = 3,
    /// Argument outside the mathematical domain of the function.
    Domain = 4,
    /// An outcome or group with zero probability where one is not allowed.
    ZeroProbability = 5,
    /// Beans-per-bean requested for an alphabet smaller than 2.
    InvalidUnit = 6,
    /// Enumeration would exceed the composition guard.
    TooLarge = 7,
    /// Caller buffer shorter than the data to be written.
    BufferTooSmall = 8,
    Panic = 9,
}

/// Entropy unit selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeUnitKind {
    Nats = 0,
    Bits = 1,
    /// Divide by `ln m`; `m` comes from [`OeUnit::m`].
    BeansPerBean = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct OeUnit {
    pub kind: OeUnitKind,
    /// Alphabet size for `OE_UNIT_KIND_BEANS_PER_BEAN`; ignored otherwise.
    pub m: usize,
}

impl From<OeUnit> for EntropyUnit {
    fn from(u: OeUnit) -> Self {
        match u.kind {
            OeUnitKind::Nats => EntropyUnit::Nats,
            OeUnitKind::Bits => EntropyUnit::Bits,
            OeUnitKind::BeansPerBean => EntropyUnit::BeansPerBean { m: u.m },
        }
    }
}

/// Length-prefix sizing for naive framing.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OePrefix {
    /// `log2 N` as a real number.
    Exact = 0,
    /// `ceil(log2 N)` whole bits.
    WholeBits = 1,
}

impl From<OePrefix> for LengthPrefix {
    fn from(p: OePrefix) -> Self {
        match p {
            OePrefix::Exact => LengthPrefix::Exact,
            OePrefix::WholeBits => LengthPrefix::WholeBits,
        }
    }
}

/// Utilization and overhead bounds; see `oe_channel_report`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct OeChannelReport {
    pub message_bits: u64,
    pub alphabet: usize,
    pub max_utilization: f64,
    pub min_overhead: f64,
    pub naive_payload_fraction: f64,
    pub shannon_utilization: f64,
    pub beats_naive: bool,
    pub negative_overhead: bool,
}

/// One within-group term of a coarse-grained decomposition, in nats.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct OeGroupTerm {
    pub mass: f64,
    pub sample_size: f64,
    pub outcomes: usize,
    pub entropy: f64,
}

pub struct OeProbDist(ProbDist);
pub struct OeCountVector(CountVector);
pub struct OePartition(Partition);
pub struct OeCoarseGrained(CoarseGrained);
pub struct OeCompositions(Compositions);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|e| {
        let mut bytes = e.into_vec();
        bytes.retain(|&b| b != 0);
        CString::new(bytes).expect("interior NULs removed")
    });
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OeStatus {
    match e {
        Error::Domain(_) => OeStatus::Domain,
        Error::InvalidN { .. } => OeStatus::InvalidN,
        Error::InvalidUnit(_) => OeStatus::InvalidUnit,
        Error::ZeroProbability(_) | Error::ZeroProbabilityAtIndex(_) | Error::ZeroGroupMass(_) => {
            OeStatus::ZeroProbability
        }
        Error::TooLarge(_) => OeStatus::TooLarge,
        _ => OeStatus::InvalidArgument,
    }
}

struct Fail(OeStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type FfiResult = Result<(), Fail>;

/// Runs `f`, converting errors and panics into a status code.
fn guard<F: FnOnce() -> FfiResult>(f: F) -> OeStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OeStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_owned());
            set_last_error(format!("panic: {msg}"));
            OeStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(OeStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn as_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

/// `len` elements at `data`; `data` may be NULL only when `len == 0`.
unsafe fn as_slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(data, len))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult {
    *as_mut(out, "out")? = value;
    Ok(())
}

/// Boxes `value` into `*out` only once `out` is known to be writable.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> FfiResult {
    *as_mut(out, "out")? = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

fn in_unit(v: EntropyValue, unit: OeUnit) -> Result<f64, Fail> {
    Ok(convert(v, unit.into())?.value)
}

// ---------------------------------------------------------------------------
// Errors and metadata

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn oe_status_message(status: OeStatus) -> *const c_char {
    let s: &'static CStr = match status {
        OeStatus::Ok => c"ok",
        OeStatus::NullPointer => c"null pointer argument",
        OeStatus::InvalidArgument => c"invalid argument",
        OeStatus::InvalidN => c"sample size below minimum",
        OeStatus::Domain => c"argument outside function domain",
        OeStatus::ZeroProbability => c"zero probability where a positive one is required",
        OeStatus::InvalidUnit => c"beans-per-bean unit needs at least 2 outcomes",
        OeStatus::TooLarge => c"enumeration too large",
        OeStatus::BufferTooSmall => c"output buffer too small",
        OeStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message for the most recent failed call on this thread, or NULL after a
/// successful one. Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn oe_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a NUL-terminated string.
#[no_mangle]
pub extern "C" fn oe_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

// ---------------------------------------------------------------------------
// Special functions

#[no_mangle]
pub extern "C" fn oe_euler_gamma() -> f64 {
    euler_gamma()
}

/// # Safety
/// `out` must be a valid pointer to a `double`.
#[no_mangle]
pub unsafe extern "C" fn oe_log_gamma(x: f64, out: *mut f64) -> OeStatus {
    guard(|| write(out, log_gamma(x)?))
}

// ---------------------------------------------------------------------------
// Probability distributions

/// Validates `probs[0..len]` (non-negative, summing to 1 within 1e-9) and
/// copies it into a new handle.
///
/// # Safety
/// `probs` must point to `len` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_prob_dist_new(
    probs: *const f64,
    len: usize,
    out: *mut *mut OeProbDist,
) -> OeStatus {
    guard(|| {
        let v = as_slice(probs, len, "probs")?.to_vec();
        write_handle(out, OeProbDist(ProbDist::new(v)?))
    })
}

/// Rescales non-negative `weights[0..len]` to sum to 1.
///
/// # Safety
/// `weights` must point to `len` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_prob_dist_normalize(
    weights: *const f64,
    len: usize,
    out: *mut *mut OeProbDist,
) -> OeStatus {
    guard(|| {
        let w = as_slice(weights, len, "weights")?;
        write_handle(out, OeProbDist(ProbDist::normalize(w)?))
    })
}

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_prob_dist_uniform(m: usize, out: *mut *mut OeProbDist) -> OeStatus {
    guard(|| write_handle(out, OeProbDist(ProbDist::uniform(m)?)))
}

/// Number of outcomes, 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_prob_dist_len(p: *const OeProbDist) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Pointer to the `oe_prob_dist_len(p)` probabilities, owned by the handle.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_prob_dist_data(p: *const OeProbDist) -> *const f64 {
    p.as_ref().map_or(ptr::null(), |p| p.0.probs().as_ptr())
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oe_prob_dist_free(p: *mut OeProbDist) {
    free(p)
}

// ---------------------------------------------------------------------------
// Count vectors

/// # Safety
/// `counts` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_count_vector_new(
    counts: *const u64,
    len: usize,
    out: *mut *mut OeCountVector,
) -> OeStatus {
    guard(|| {
        let v = as_slice(counts, len, "counts")?.to_vec();
        write_handle(out, OeCountVector(CountVector::new(v)?))
    })
}

/// Histogram of `bytes[0..len]`: 256 byte slots, or `[zeros, ones]` over
/// individual bits when `bits` is true.
///
/// # Safety
/// `bytes` must point to `len` bytes; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_count_vector_from_bytes(
    bytes: *const u8,
    len: usize,
    bits: bool,
    out: *mut *mut OeCountVector,
) -> OeStatus {
    guard(|| {
        let data = as_slice(bytes, len, "bytes")?;
        let (counts, _) = if bits {
            empirical_bits_from_bytes(data)?
        } else {
            empirical_from_bytes(data)?
        };
        write_handle(out, OeCountVector(counts))
    })
}

/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_count_vector_len(c: *const OeCountVector) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Total number of events `N`, 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_count_vector_total(c: *const OeCountVector) -> u64 {
    c.as_ref().map_or(0, |c| c.0.total())
}

/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_count_vector_data(c: *const OeCountVector) -> *const u64 {
    c.as_ref().map_or(ptr::null(), |c| c.0.counts().as_ptr())
}

/// Empirical distribution `n_i / N`.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_count_vector_to_prob_dist(
    c: *const OeCountVector,
    out: *mut *mut OeProbDist,
) -> OeStatus {
    guard(|| {
        let c = as_ref(c, "counts")?;
        write_handle(out, OeProbDist(c.0.to_prob_dist()))
    })
}

/// # Safety
/// `c` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oe_count_vector_free(c: *mut OeCountVector) {
    free(c)
}

// ---------------------------------------------------------------------------
// Entropies

/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_shannon_entropy(
    p: *const OeProbDist,
    unit: OeUnit,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let p = as_ref(p, "p")?;
        write(out, in_unit(shannon_entropy(&p.0), unit)?)
    })
}

/// `H_Ω` of an observed count vector.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_omega_entropy_counts(
    c: *const OeCountVector,
    unit: OeUnit,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let c = as_ref(c, "counts")?;
        write(out, in_unit(omega_entropy_counts(&c.0), unit)?)
    })
}

/// `H_Ω` at the equilibrium `n_i = N p_i`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_omega_entropy_equilibrium(
    p: *const OeProbDist,
    n: u64,
    unit: OeUnit,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let p = as_ref(p, "p")?;
        write(out, in_unit(omega_entropy_equilibrium(&p.0, n)?, unit)?)
    })
}

/// Equilibrium `H_Ω` of the uniform distribution over `m` outcomes,
/// evaluated in O(1).
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_omega_entropy_uniform(
    m: u64,
    n: u64,
    unit: OeUnit,
    out: *mut f64,
) -> OeStatus {
    guard(|| write(out, in_unit(omega_entropy_uniform(m, n)?, unit)?))
}

/// Large-`N` estimate of `H_S - H_Ω`, in nats.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_entropy_gap_asymptotic(
    p: *const OeProbDist,
    n: u64,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let p = as_ref(p, "p")?;
        write(out, entropy_gap_asymptotic(&p.0, n)?)
    })
}

/// `γ + ln Γ(N+1)/N`, in nats.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_omega_entropy_sparse_limit(n: u64, out: *mut f64) -> OeStatus {
    guard(|| write(out, omega_entropy_sparse_limit(n)?))
}

/// Entropy of the renormalized first `m` entries of `head`, in beans per
/// bean.
///
/// # Safety
/// `head` must point to `len` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_normalized_truncated_entropy(
    head: *const f64,
    len: usize,
    m: usize,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let head = as_slice(head, len, "head")?;
        write(out, normalized_truncated_entropy(head, m)?.value)
    })
}

/// Re-expresses `value` from one unit in another.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_convert(
    value: f64,
    from: OeUnit,
    to: OeUnit,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let v = EntropyValue {
            value,
            unit: from.into(),
        };
        write(out, in_unit(v, to)?)
    })
}

// ---------------------------------------------------------------------------
// Multinomial

/// `ln Ω = ln N! - Σ ln n_i!`.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_log_statistical_weight(
    c: *const OeCountVector,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let c = as_ref(c, "counts")?;
        write(out, log_statistical_weight(&c.0).log_omega())
    })
}

/// Log-probability of `c` under `Multinomial(N, p)`; `-INFINITY` for
/// impossible vectors.
///
/// # Safety
/// `c` and `p` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_multinomial_log_pmf(
    c: *const OeCountVector,
    p: *const OeProbDist,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let (c, p) = (as_ref(c, "counts")?, as_ref(p, "p")?);
        write(out, multinomial_log_pmf(&c.0, &p.0)?)
    })
}

/// Number of weak compositions of `n` into `m` parts. Exact up to the 10^7
/// enumeration guard; beyond it, some value larger than the guard.
#[no_mangle]
pub extern "C" fn oe_composition_count(n: u64, m: usize) -> u64 {
    u64::try_from(composition_count(n, m)).unwrap_or(u64::MAX)
}

/// Most probable count vector, by exhaustive enumeration.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_brute_force_mode(
    n: u64,
    p: *const OeProbDist,
    out: *mut *mut OeCountVector,
) -> OeStatus {
    guard(|| {
        let p = as_ref(p, "p")?;
        write_handle(out, OeCountVector(brute_force_mode(n, &p.0)?))
    })
}

/// Iterator over all compositions of `n` into `m` parts, in
/// lexicographically descending order.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_compositions_new(
    n: u64,
    m: usize,
    out: *mut *mut OeCompositions,
) -> OeStatus {
    guard(|| write_handle(out, OeCompositions(Compositions::new(n, m)?)))
}

/// Copies the next composition into `buf[0..len]` and sets `*has_next`;
/// when the walk is exhausted `*has_next` is false and `buf` is untouched.
///
/// # Safety
/// `it` must be a live handle, `buf` must hold `len` values, `has_next`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_compositions_next(
    it: *mut OeCompositions,
    buf: *mut u64,
    len: usize,
    has_next: *mut bool,
) -> OeStatus {
    guard(|| {
        let it = as_mut(it, "iterator")?;
        let has_next = as_mut(has_next, "has_next")?;
        let Some(c) = it.0.peek() else {
            *has_next = false;
            return Ok(());
        };
        if len < c.len() {
            return Err(Fail(
                OeStatus::BufferTooSmall,
                format!("buffer holds {len} values, composition has {}", c.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        slice::from_raw_parts_mut(buf, c.len()).copy_from_slice(c);
        it.0.advance();
        *has_next = true;
        Ok(())
    })
}

/// # Safety
/// `it` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oe_compositions_free(it: *mut OeCompositions) {
    free(it)
}

// ---------------------------------------------------------------------------
// Decomposition

/// Replaces outcome `index` by `p_index (1 - lambda)` in place and appends
/// `p_index lambda`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_split_outcome(
    p: *const OeProbDist,
    index: usize,
    lambda: f64,
    out: *mut *mut OeProbDist,
) -> OeStatus {
    guard(|| {
        let p = as_ref(p, "p")?;
        write_handle(out, OeProbDist(split_outcome(&p.0, index, lambda)?))
    })
}

/// Residual of the split-outcome recursion identity, in nats.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_recursion_residual(
    p: *const OeProbDist,
    index: usize,
    lambda: f64,
    n: u64,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let p = as_ref(p, "p")?;
        write(out, recursion_residual(&p.0, index, lambda, n)?)
    })
}

/// Partition from one group label per outcome; labels must cover
/// `0..K` without gaps.
///
/// # Safety
/// `labels` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_partition_from_labels(
    labels: *const usize,
    len: usize,
    out: *mut *mut OePartition,
) -> OeStatus {
    guard(|| {
        let labels = as_slice(labels, len, "labels")?;
        write_handle(out, OePartition(Partition::from_labels(labels)?))
    })
}

/// Number of groups, 0 for NULL.
///
/// # Safety
/// `part` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_partition_len(part: *const OePartition) -> usize {
    part.as_ref().map_or(0, |p| p.0.len())
}

/// # Safety
/// `part` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oe_partition_free(part: *mut OePartition) {
    free(part)
}

/// # Safety
/// `p` and `part` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_coarse_grain(
    p: *const OeProbDist,
    part: *const OePartition,
    n: u64,
    out: *mut *mut OeCoarseGrained,
) -> OeStatus {
    guard(|| {
        let (p, part) = (as_ref(p, "p")?, as_ref(part, "partition")?);
        write_handle(out, OeCoarseGrained(coarse_grain(&p.0, &part.0, n)?))
    })
}

/// Between-group entropy in nats, NaN for NULL.
///
/// # Safety
/// `cg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_coarse_grained_coarse(cg: *const OeCoarseGrained) -> f64 {
    cg.as_ref().map_or(f64::NAN, |c| c.0.coarse.value)
}

/// Reassembled total entropy in nats, NaN for NULL.
///
/// # Safety
/// `cg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_coarse_grained_total(cg: *const OeCoarseGrained) -> f64 {
    cg.as_ref().map_or(f64::NAN, |c| c.0.total.value)
}

/// # Safety
/// `cg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oe_coarse_grained_groups(cg: *const OeCoarseGrained) -> usize {
    cg.as_ref().map_or(0, |c| c.0.group_terms.len())
}

/// # Safety
/// `cg` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_coarse_grained_group(
    cg: *const OeCoarseGrained,
    k: usize,
    out: *mut OeGroupTerm,
) -> OeStatus {
    guard(|| {
        let cg = as_ref(cg, "coarse-grained")?;
        let len = cg.0.group_terms.len();
        let t =
            cg.0.group_terms
                .get(k)
                .ok_or(Error::IndexOutOfRange { index: k, len })?;
        write(
            out,
            OeGroupTerm {
                mass: t.mass,
                sample_size: t.sample_size,
                outcomes: t.outcomes,
                entropy: t.entropy.value,
            },
        )
    })
}

/// # Safety
/// `cg` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oe_coarse_grained_free(cg: *mut OeCoarseGrained) {
    free(cg)
}

/// `total - H_Ω(p; N)` for the decomposition over `part`.
///
/// # Safety
/// `p` and `part` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_coarse_grain_residual(
    p: *const OeProbDist,
    part: *const OePartition,
    n: u64,
    out: *mut f64,
) -> OeStatus {
    guard(|| {
        let (p, part) = (as_ref(p, "p")?, as_ref(part, "partition")?);
        write(out, coarse_grain_residual(&p.0, &part.0, n)?)
    })
}

// ---------------------------------------------------------------------------
// Channel

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_max_payload_binary(n: u64, out: *mut f64) -> OeStatus {
    guard(|| write(out, max_payload_binary(n)?))
}

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_min_overhead_binary(n: u64, out: *mut f64) -> OeStatus {
    guard(|| write(out, min_overhead_binary(n)?))
}

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_naive_framing_payload(
    n: u64,
    prefix: OePrefix,
    out: *mut f64,
) -> OeStatus {
    guard(|| write(out, naive_framing_payload_with(n, prefix.into())?))
}

/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oe_channel_report(
    p: *const OeProbDist,
    n: u64,
    prefix: OePrefix,
    out: *mut OeChannelReport,
) -> OeStatus {
    guard(|| {
        let p = as_ref(p, "p")?;
        let r = channel_report_with(&p.0, n, prefix.into())?;
        write(
            out,
            OeChannelReport {
                message_bits: r.message_bits,
                alphabet: r.alphabet,
                max_utilization: r.max_utilization,
                min_overhead: r.min_overhead,
                naive_payload_fraction: r.naive_payload_fraction,
                shannon_utilization: r.shannon_utilization,
                beats_naive: r.beats_naive,
                negative_overhead: r.negative_overhead,
            },
        )
    })
}

/// `header_bits / (header_bits + n)`.
#[no_mangle]
pub extern "C" fn oe_real_overhead(header_bits: u64, n: u64) -> f64 {
    real_overhead(header_bits, n)
}
