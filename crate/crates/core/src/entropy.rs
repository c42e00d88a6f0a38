//! Shannon entropy `H_S` and the finite-sample statistical-weight entropy
//! `H_Ω`, with unit conversion and the limiting forms.
//!
//! All `H_Ω` evaluations use the continuous gamma function, so `N p_i` need
//! not be an integer. Zero-probability outcomes contribute nothing to either
//! entropy (`0 ln 0 = 0`, `ln Γ(1) = 0`).

use std::f64::consts::{LN_2, PI};
use std::fmt;

use serde::Serialize;

use crate::dist::{CountVector, ProbDist};
use crate::error::{Error, Result};
use crate::special::{ln_gamma, EULER_GAMMA};

/// Slack allowed above 1 for beans-per-bean values.
pub const BEANS_UPPER_SLACK: f64 = 1e-12;

/// Unit in which an entropy value is expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntropyUnit {
    Nats,
    Bits,
    /// Divided by `ln m`, making entropy a dimensionless fraction of the
    /// maximum for an `m`-symbol alphabet.
    BeansPerBean {
        m: usize,
    },
}

impl EntropyUnit {
    /// Nats per one of this unit.
    pub fn nats_per_unit(self) -> Result<f64> {
        match self {
            EntropyUnit::Nats => Ok(1.0),
            EntropyUnit::Bits => Ok(LN_2),
            EntropyUnit::BeansPerBean { m } if m < 2 => Err(Error::InvalidUnit(m)),
            EntropyUnit::BeansPerBean { m: 2 } => Ok(LN_2),
            EntropyUnit::BeansPerBean { m } => Ok((m as f64).ln()),
        }
    }
}

impl fmt::Display for EntropyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntropyUnit::Nats => f.write_str("nats"),
            EntropyUnit::Bits => f.write_str("bits"),
            EntropyUnit::BeansPerBean { m } => write!(f, "beans/bean (M={m})"),
        }
    }
}

/// A scalar entropy together with its unit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyValue {
    pub value: f64,
    pub unit: EntropyUnit,
}

impl EntropyValue {
    pub fn nats(value: f64) -> Self {
        Self {
            value,
            unit: EntropyUnit::Nats,
        }
    }

    /// Re-expresses the value in `target`.
    pub fn to_unit(self, target: EntropyUnit) -> Result<Self> {
        convert(self, target)
    }
}

/// Converts between nats, bits and beans-per-bean.
pub fn convert(e: EntropyValue, target: EntropyUnit) -> Result<EntropyValue> {
    let from = e.unit.nats_per_unit()?;
    let to = target.nats_per_unit()?;
    let value = if from == to {
        e.value
    } else {
        e.value * from / to
    };
    Ok(EntropyValue {
        value,
        unit: target,
    })
}

pub(crate) fn shannon_nats(probs: &[f64]) -> f64 {
    let h: f64 = probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum();
    // -p ln p is never negative, but -0.0 can appear when p = 1.
    h.max(0.0)
}

/// Per-event `H_Ω` in nats at a real-valued sample size `n > 0`.
pub(crate) fn omega_nats(probs: &[f64], n: f64) -> f64 {
    let cells: f64 = probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| ln_gamma(n * p + 1.0))
        .sum();
    (ln_gamma(n + 1.0) - cells) / n
}

/// Shannon entropy `-Σ p_i ln p_i`, in nats.
pub fn shannon_entropy(p: &ProbDist) -> EntropyValue {
    EntropyValue::nats(shannon_nats(p.probs()))
}

/// `H_Ω` of an observed count vector: `(1/N)[ln Γ(N+1) - Σ ln Γ(n_i+1)]`.
pub fn omega_entropy_counts(c: &CountVector) -> EntropyValue {
    let n = c.total() as f64;
    let cells: f64 = c
        .counts()
        .iter()
        .filter(|&&k| k > 0)
        .map(|&k| ln_gamma(k as f64 + 1.0))
        .sum();
    EntropyValue::nats((ln_gamma(n + 1.0) - cells) / n)
}

/// Equilibrium `H_Ω(p; N)`: the count form evaluated at `n_i = N p_i`.
pub fn omega_entropy_equilibrium(p: &ProbDist, n: u64) -> Result<EntropyValue> {
    if n == 0 {
        return Err(Error::InvalidN { min: 1, got: 0.0 });
    }
    Ok(EntropyValue::nats(omega_nats(p.probs(), n as f64)))
}

/// Equilibrium `H_Ω` at a real-valued sample size, as needed for group
/// sample sizes `N P_k` in the decomposition identities.
pub fn omega_entropy_real(p: &ProbDist, n: f64) -> Result<EntropyValue> {
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::InvalidN { min: 0, got: n });
    }
    Ok(EntropyValue::nats(omega_nats(p.probs(), n)))
}

/// Closed form of [`omega_entropy_equilibrium`] for the uniform distribution
/// over `m` outcomes, `(1/N)[ln Γ(N+1) - m ln Γ(N/m + 1)]`. Runs in O(1)
/// regardless of `m`.
pub fn omega_entropy_uniform(m: u64, n: u64) -> Result<EntropyValue> {
    if m == 0 {
        return Err(Error::EmptyDistribution);
    }
    if n == 0 {
        return Err(Error::InvalidN { min: 1, got: 0.0 });
    }
    let (m, n) = (m as f64, n as f64);
    Ok(EntropyValue::nats(
        (ln_gamma(n + 1.0) - m * ln_gamma(n / m + 1.0)) / n,
    ))
}

/// Large-`N` approximation of `H_S - H_Ω` in nats:
/// `(1/2N)[(M-1) ln(2πN) + Σ ln p_i]`.
pub fn entropy_gap_asymptotic(p: &ProbDist, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidN { min: 1, got: 0.0 });
    }
    if let Some(i) = p.probs().iter().position(|&x| x == 0.0) {
        return Err(Error::ZeroProbability(i));
    }
    let n = n as f64;
    let m = p.len() as f64;
    let log_sum: f64 = p.probs().iter().map(|x| x.ln()).sum();
    Ok(((m - 1.0) * (2.0 * PI * n).ln() + log_sum) / (2.0 * n))
}

/// Limit of `H_Ω` when every `N p_i → 0`: `γ + ln Γ(N+1)/N`, in nats.
pub fn omega_entropy_sparse_limit(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidN { min: 1, got: 0.0 });
    }
    let n = n as f64;
    Ok(EULER_GAMMA + ln_gamma(n + 1.0) / n)
}

/// Shannon entropy of the first `m` weights of `p_head`, renormalized by
/// their partial sum and expressed in beans per bean (divided by `ln m`).
pub fn normalized_truncated_entropy(p_head: &[f64], m: usize) -> Result<EntropyValue> {
    if m < 2 {
        return Err(Error::InvalidM(m));
    }
    if p_head.len() < m {
        return Err(Error::ShortHead {
            needed: m,
            got: p_head.len(),
        });
    }
    let head = &p_head[..m];
    if let Some((index, &value)) = head
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v > 0.0))
    {
        return Err(Error::NonPositive { index, value });
    }
    let z: f64 = head.iter().sum();
    let h: f64 = head
        .iter()
        .map(|&p| {
            let q = p / z;
            -q * q.ln()
        })
        .sum();
    let unit = EntropyUnit::BeansPerBean { m };
    Ok(EntropyValue {
        value: h / unit.nats_per_unit()?,
        unit,
    })
}
