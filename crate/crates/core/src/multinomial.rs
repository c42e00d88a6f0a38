//! Multinomial PMF, statistical weight `Ω = N! / Π n_i!`, and a brute-force
//! search for the most probable frequency vector.

use serde::Serialize;

use crate::dist::{CountVector, ProbDist};
use crate::error::{Error, Result};
use crate::special::ln_gamma;

/// Upper bound on the number of compositions an enumeration may visit.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// Natural log of a statistical weight; always `>= 0` since `Ω >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct LogWeight(f64);

impl LogWeight {
    pub fn log_omega(self) -> f64 {
        self.0
    }
}

/// `ln Ω = ln N! - Σ ln n_i!`.
pub fn log_statistical_weight(c: &CountVector) -> LogWeight {
    let cells: f64 = c
        .counts()
        .iter()
        .filter(|&&k| k > 1)
        .map(|&k| ln_gamma(k as f64 + 1.0))
        .sum();
    LogWeight((ln_gamma(c.total() as f64 + 1.0) - cells).max(0.0))
}

/// `ln P({n_i}; N, {p_i}) = ln Ω + Σ n_i ln p_i`.
///
/// Returns `f64::NEG_INFINITY` when some `n_i > 0` has `p_i = 0`.
pub fn multinomial_log_pmf(c: &CountVector, p: &ProbDist) -> Result<f64> {
    if c.len() != p.len() {
        return Err(Error::DimensionMismatch {
            counts: c.len(),
            probs: p.len(),
        });
    }
    let mut log_like = 0.0;
    for (&k, &pi) in c.counts().iter().zip(p.probs()) {
        if k == 0 {
            continue;
        }
        if pi == 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        log_like += k as f64 * pi.ln();
    }
    Ok(log_statistical_weight(c).log_omega() + log_like)
}

/// `C(n + m - 1, m - 1)`, saturating just above [`ENUMERATION_LIMIT`].
pub fn composition_count(n: u64, m: usize) -> u128 {
    let k = m.saturating_sub(1) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for j in 1..=k {
        // acc * (n + j) / j stays integral at every step.
        acc = acc * (n + j) / j;
        if acc > ENUMERATION_LIMIT {
            return acc;
        }
    }
    acc
}

/// Lexicographically descending walk over all weak compositions of `n`
/// into `m` parts, from `[n, 0, …, 0]` to `[0, …, 0, n]`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Vec<u64>,
    total: u64,
    done: bool,
}

impl Compositions {
    pub fn new(n: u64, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN { min: 1, got: 0.0 });
        }
        if m == 0 {
            return Err(Error::EmptyDistribution);
        }
        let count = composition_count(n, m);
        if count > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(count));
        }
        let mut current = vec![0; m];
        current[0] = n;
        Ok(Self {
            current,
            total: n,
            done: false,
        })
    }

    /// Current composition without advancing, or `None` when exhausted.
    pub fn peek(&self) -> Option<&[u64]> {
        (!self.done).then_some(self.current.as_slice())
    }

    /// Moves to the next composition in place.
    pub fn advance(&mut self) {
        if self.done {
            return;
        }
        let m = self.current.len();
        let last = m - 1;
        match self.current[..last].iter().rposition(|&c| c > 0) {
            None => self.done = true,
            Some(i) => {
                let tail = std::mem::take(&mut self.current[last]);
                self.current[i] -= 1;
                self.current[i + 1] = tail + 1;
            }
        }
    }

    /// Calls `f` on every remaining composition without allocating.
    pub fn for_each_slice<F: FnMut(&[u64])>(mut self, mut f: F) {
        while let Some(c) = self.peek() {
            f(c);
            self.advance();
        }
    }
}

impl Iterator for Compositions {
    type Item = CountVector;

    fn next(&mut self) -> Option<CountVector> {
        let out = CountVector::from_parts_unchecked(self.peek()?.to_vec(), self.total);
        self.advance();
        Some(out)
    }
}

/// Every count vector with `Σ n_i = n` over `m` outcomes.
pub fn enumerate_compositions(n: u64, m: usize) -> Result<Compositions> {
    Compositions::new(n, m)
}

/// `Multinomial(n, p)` with `ln k!` and `ln p_i` tabulated, for evaluating
/// many count vectors that share the same total.
#[derive(Debug, Clone)]
pub struct Multinomial {
    n: u64,
    ln_fact: Vec<f64>,
    ln_p: Vec<f64>,
}

impl Multinomial {
    pub fn new(n: u64, p: &ProbDist) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN { min: 1, got: 0.0 });
        }
        Ok(Self {
            n,
            ln_fact: (0..=n).map(|k| ln_gamma(k as f64 + 1.0)).collect(),
            ln_p: p.probs().iter().map(|&x| x.ln()).collect(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ln_p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ln_p.is_empty()
    }

    /// Same value as [`multinomial_log_pmf`] for counts given as a slice.
    pub fn log_pmf(&self, counts: &[u64]) -> Result<f64> {
        if counts.len() != self.len() {
            return Err(Error::DimensionMismatch {
                counts: counts.len(),
                probs: self.len(),
            });
        }
        let total = counts.iter().try_fold(0u64, |acc, &k| acc.checked_add(k));
        if total != Some(self.n) {
            return Err(Error::TotalMismatch {
                expected: self.n,
                got: total.unwrap_or(u64::MAX),
            });
        }
        Ok(self.ln_fact[self.n as usize] + self.score(counts))
    }

    /// `Σ n_i ln p_i - ln n_i!`; callers have checked length and total.
    fn score(&self, counts: &[u64]) -> f64 {
        let mut score = 0.0;
        for (&k, &lp) in counts.iter().zip(&self.ln_p) {
            if k == 0 {
                continue;
            }
            if lp == f64::NEG_INFINITY {
                return f64::NEG_INFINITY;
            }
            score += k as f64 * lp - self.ln_fact[k as usize];
        }
        score
    }

    /// Exhaustive search for the most probable count vector. Ties go to the
    /// earliest composition.
    pub fn mode(&self) -> Result<CountVector> {
        let walk = Compositions::new(self.n, self.len())?;
        let mut best = f64::NEG_INFINITY;
        let mut arg: Vec<u64> = Vec::new();
        walk.for_each_slice(|c| {
            let score = self.score(c);
            // Mathematically tied candidates can differ by rounding; keep
            // the first unless the newcomer wins by more than that.
            let bar = if best.is_finite() {
                best + 1e-12 * best.abs().max(1.0)
            } else {
                best
            };
            if arg.is_empty() || score > bar {
                best = score;
                arg.clear();
                arg.extend_from_slice(c);
            }
        });
        Ok(CountVector::from_parts_unchecked(arg, self.n))
    }
}

/// The most probable count vector under `Multinomial(n, p)`, found by
/// exhaustive enumeration. Ties go to the earliest composition.
pub fn brute_force_mode(n: u64, p: &ProbDist) -> Result<CountVector> {
    Multinomial::new(n, p)?.mode()
}
