//! Channel-utilization and protocol-overhead bounds for finite messages.
//!
//! For a message of `N` symbols drawn from `p`, `H_Ω(p; N)` in beans per
//! bean bounds the achievable utilization and `H_S - H_Ω` bounds the
//! overhead from below. Binary sources are reported in bits per bit.

use std::f64::consts::LN_2;

use serde::Serialize;

use crate::dist::ProbDist;
use crate::entropy::{omega_nats, shannon_nats, EntropyUnit};
use crate::error::{Error, Result};
use crate::special::ln_gamma;

/// How the length prefix of a naively framed message is sized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthPrefix {
    /// `log2 N` as a real number.
    #[default]
    Exact,
    /// `ceil(log2 N)` whole bits.
    WholeBits,
}

impl LengthPrefix {
    pub fn bits(self, n: u64) -> f64 {
        let l = (n as f64).log2();
        match self {
            LengthPrefix::Exact => l,
            LengthPrefix::WholeBits => l.ceil(),
        }
    }
}

fn check_message_bits(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidN {
            min: 2,
            got: n as f64,
        });
    }
    Ok(())
}

/// `H_Ω` of a fair binary source over an `N`-bit message, in bits per bit.
pub fn max_payload_binary(n: u64) -> Result<f64> {
    check_message_bits(n)?;
    let nf = n as f64;
    Ok((ln_gamma(nf + 1.0) - 2.0 * ln_gamma(nf / 2.0 + 1.0)) / (nf * LN_2))
}

/// `1 - max_payload_binary(N)`: the overhead floor for an ideally
/// compressed (`H_S = 1`) binary source.
pub fn min_overhead_binary(n: u64) -> Result<f64> {
    Ok(1.0 - max_payload_binary(n)?)
}

/// Payload fraction `N / (N + log2 N)` when the length is sent up front.
pub fn naive_framing_payload(n: u64) -> Result<f64> {
    naive_framing_payload_with(n, LengthPrefix::Exact)
}

pub fn naive_framing_payload_with(n: u64, prefix: LengthPrefix) -> Result<f64> {
    check_message_bits(n)?;
    let nf = n as f64;
    Ok(nf / (nf + prefix.bits(n)))
}

/// Utilization and overhead bounds for `N`-symbol messages from `p`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelReport {
    pub message_bits: u64,
    /// Number of source symbols `M`; sets the beans-per-bean unit.
    pub alphabet: usize,
    /// `H_Ω(p; N)`.
    pub max_utilization: f64,
    /// `H_S(p) - H_Ω(p; N)`; may be negative, see `negative_overhead`.
    pub min_overhead: f64,
    pub naive_payload_fraction: f64,
    /// `H_S(p)`.
    pub shannon_utilization: f64,
    /// `max_utilization > naive_payload_fraction`.
    pub beats_naive: bool,
    /// Set when `H_Ω > H_S`; the overhead is reported as computed.
    pub negative_overhead: bool,
}

impl ChannelReport {
    /// Unit of the utilization fields: bits per bit for a binary source,
    /// beans per bean otherwise. `None` for a single-symbol source.
    pub fn unit(&self) -> Option<EntropyUnit> {
        match self.alphabet {
            0 | 1 => None,
            m => Some(EntropyUnit::BeansPerBean { m }),
        }
    }
}

pub fn channel_report(p: &ProbDist, n: u64) -> Result<ChannelReport> {
    channel_report_with(p, n, LengthPrefix::Exact)
}

pub fn channel_report_with(p: &ProbDist, n: u64, prefix: LengthPrefix) -> Result<ChannelReport> {
    check_message_bits(n)?;
    let m = p.len();
    let (h_omega, h_s) = if m < 2 {
        // One symbol carries no information in any unit.
        (0.0, 0.0)
    } else {
        let per_unit = EntropyUnit::BeansPerBean { m }.nats_per_unit()?;
        (
            omega_nats(p.probs(), n as f64) / per_unit,
            shannon_nats(p.probs()) / per_unit,
        )
    };
    let naive = naive_framing_payload_with(n, prefix)?;
    let overhead = h_s - h_omega;
    Ok(ChannelReport {
        message_bits: n,
        alphabet: m,
        max_utilization: h_omega,
        min_overhead: overhead,
        naive_payload_fraction: naive,
        shannon_utilization: h_s,
        beats_naive: h_omega > naive,
        negative_overhead: overhead < 0.0,
    })
}

/// Overhead of a real frame carrying `n` payload bits behind a
/// `header_bits` header: `header / (header + n)`.
pub fn real_overhead(header_bits: u64, n: u64) -> f64 {
    header_bits as f64 / (header_bits as f64 + n as f64)
}
