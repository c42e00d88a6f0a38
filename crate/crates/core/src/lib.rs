//! Finite-sample entropy of independent events.
//!
//! For `N` events over `M` outcomes the per-event statistical-weight
//! entropy
//!
//! ```text
//! H_Ω = (1/N) [ln Γ(N + 1) - Σ ln Γ(n_i + 1)]
//! ```
//!
//! counts the orderings consistent with the observed frequencies. At the
//! equilibrium `n_i = N p_i` it approaches the Shannon entropy
//! `H_S = -Σ p_i ln p_i` as `N → ∞` and stays strictly below it for finite
//! `N`. The difference is the minimum overhead of transmitting an
//! `N`-symbol message, which the [`channel`] module reports.
//!
//! ```
//! use omega_entropy::{channel, dist::ProbDist, entropy};
//!
//! let fair = ProbDist::new(vec![0.5, 0.5]).unwrap();
//! let h = entropy::omega_entropy_equilibrium(&fair, 256).unwrap();
//! let bits = entropy::convert(h, entropy::EntropyUnit::Bits).unwrap();
//! assert!((bits.value - 0.9831).abs() < 5e-5);
//! assert!((channel::max_payload_binary(256).unwrap() - bits.value).abs() < 1e-15);
//! ```

pub mod channel;
pub mod cli;
pub mod decomposition;
pub mod dist;
pub mod entropy;
pub mod error;
pub mod multinomial;
pub mod report;
pub mod special;

pub use channel::{
    channel_report, max_payload_binary, min_overhead_binary, naive_framing_payload, ChannelReport,
};
pub use decomposition::{
    coarse_grain, recursion_residual, split_outcome, CoarseGrained, Partition,
};
pub use dist::{empirical_from_bytes, CountVector, ProbDist};
pub use entropy::{
    convert, entropy_gap_asymptotic, normalized_truncated_entropy, omega_entropy_counts,
    omega_entropy_equilibrium, omega_entropy_sparse_limit, omega_entropy_uniform, shannon_entropy,
    EntropyUnit, EntropyValue,
};
pub use error::{Error, Result};
pub use multinomial::{
    brute_force_mode, enumerate_compositions, log_statistical_weight, multinomial_log_pmf,
    LogWeight, Multinomial,
};
pub use special::{euler_gamma, log_gamma};
