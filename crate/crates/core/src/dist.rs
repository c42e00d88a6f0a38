//! Validated probability and count vectors, and empirical distributions
//! built from byte streams.

use std::io::Read;

use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance on `|Σ p_i - 1|`.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A probability vector over `M >= 1` outcomes.
///
/// Zero entries are allowed. Values are never renormalized behind the
/// caller's back; use [`ProbDist::normalize`] for that.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbDist {
    probs: Vec<f64>,
}

impl ProbDist {
    /// Validates `values` as a probability vector.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        check_non_negative(&values)?;
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::SumNotOne(sum));
        }
        Ok(Self { probs: values })
    }

    /// Divides every weight by the total weight.
    pub fn normalize(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        check_non_negative(values)?;
        let total: f64 = values.iter().sum();
        if total == 0.0 {
            return Err(Error::AllZero);
        }
        Ok(Self {
            probs: values.iter().map(|v| v / total).collect(),
        })
    }

    /// Uniform distribution over `m` outcomes.
    pub fn uniform(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyDistribution);
        }
        Ok(Self {
            probs: vec![1.0 / m as f64; m],
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Number of possible outcomes `M`.
    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Outcomes with non-zero probability.
    pub fn support(&self) -> usize {
        self.probs.iter().filter(|&&p| p > 0.0).count()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.probs
    }

    /// Internal constructor for vectors already known to be valid.
    pub(crate) fn from_vec_unchecked(probs: Vec<f64>) -> Self {
        debug_assert!(!probs.is_empty());
        Self { probs }
    }
}

fn check_non_negative(values: &[f64]) -> Result<()> {
    match values
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
    {
        Some((index, &value)) => Err(Error::NegativeProbability { index, value }),
        None => Ok(()),
    }
}

/// Observed frequencies `{n_i}` over `M` outcomes with `N = Σ n_i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CountVector {
    counts: Vec<u64>,
    total: u64,
}

impl CountVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        let total = counts
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or_else(|| Error::InvalidRange("count total overflows u64".into()))?;
        if total == 0 {
            return Err(Error::EmptyCounts);
        }
        Ok(Self { counts, total })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Sample size `N`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of outcome slots `M`, zero-count slots included.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct outcomes actually observed.
    pub fn observed(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// Empirical distribution `n_i / N`.
    pub fn to_prob_dist(&self) -> ProbDist {
        let n = self.total as f64;
        ProbDist::from_vec_unchecked(self.counts.iter().map(|&c| c as f64 / n).collect())
    }

    /// Drops zero-count slots, keeping the observed outcomes in order.
    pub fn compact(&self) -> CountVector {
        CountVector {
            counts: self.counts.iter().copied().filter(|&c| c > 0).collect(),
            total: self.total,
        }
    }

    pub(crate) fn from_parts_unchecked(counts: Vec<u64>, total: u64) -> Self {
        debug_assert_eq!(counts.iter().sum::<u64>(), total);
        Self { counts, total }
    }
}

/// Byte histogram over all 256 values; the result keeps zero-count slots.
pub fn empirical_from_bytes(stream: &[u8]) -> Result<(CountVector, ProbDist)> {
    let mut hist = ByteHistogram::default();
    hist.update(stream);
    hist.finish()
}

/// Bit histogram (`M = 2`, slot 0 = zero bits) of a byte stream, so that
/// `N = 8 * stream.len()`.
pub fn empirical_bits_from_bytes(stream: &[u8]) -> Result<(CountVector, ProbDist)> {
    let mut hist = BitHistogram::default();
    hist.update(stream);
    hist.finish()
}

/// Incremental byte-frequency counter for streamed input.
#[derive(Debug, Clone)]
pub struct ByteHistogram {
    counts: [u64; 256],
    total: u64,
}

impl Default for ByteHistogram {
    fn default() -> Self {
        Self {
            counts: [0; 256],
            total: 0,
        }
    }
}

impl ByteHistogram {
    pub fn update(&mut self, chunk: &[u8]) {
        for &b in chunk {
            self.counts[b as usize] += 1;
        }
        self.total += chunk.len() as u64;
    }

    /// Consumes a reader to exhaustion.
    pub fn read_from<R: Read>(&mut self, mut reader: R) -> Result<()> {
        let mut buf = [0u8; 64 * 1024];
        loop {
            match reader.read(&mut buf) {
                Ok(0) => return Ok(()),
                Ok(n) => self.update(&buf[..n]),
                Err(e) if e.kind() == std::io::ErrorKind::Interrupted => {}
                Err(e) => return Err(e.into()),
            }
        }
    }

    pub fn finish(&self) -> Result<(CountVector, ProbDist)> {
        if self.total == 0 {
            return Err(Error::EmptyStream);
        }
        let counts = CountVector::from_parts_unchecked(self.counts.to_vec(), self.total);
        let probs = counts.to_prob_dist();
        Ok((counts, probs))
    }
}

/// Incremental zero/one bit counter.
#[derive(Debug, Clone, Default)]
pub struct BitHistogram {
    ones: u64,
    bytes: u64,
}

impl BitHistogram {
    pub fn update(&mut self, chunk: &[u8]) {
        self.ones += chunk.iter().map(|b| u64::from(b.count_ones())).sum::<u64>();
        self.bytes += chunk.len() as u64;
    }

    pub fn read_from<R: Read>(&mut self, mut reader: R) -> Result<()> {
        let mut buf = [0u8; 64 * 1024];
        loop {
            match reader.read(&mut buf) {
                Ok(0) => return Ok(()),
                Ok(n) => self.update(&buf[..n]),
                Err(e) if e.kind() == std::io::ErrorKind::Interrupted => {}
                Err(e) => return Err(e.into()),
            }
        }
    }

    pub fn finish(&self) -> Result<(CountVector, ProbDist)> {
        if self.bytes == 0 {
            return Err(Error::EmptyStream);
        }
        let total = self.bytes * 8;
        let counts = CountVector::from_parts_unchecked(vec![total - self.ones, self.ones], total);
        let probs = counts.to_prob_dist();
        Ok((counts, probs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_prob_dist_examples() {
        assert_eq!(ProbDist::new(vec![0.5, 0.5]).unwrap().len(), 2);
        assert_eq!(ProbDist::new(vec![1.0]).unwrap().len(), 1);
        assert!(matches!(
            ProbDist::new(vec![0.5, 0.6]),
            Err(Error::SumNotOne(s)) if (s - 1.1).abs() < 1e-12
        ));
        assert_eq!(ProbDist::new(vec![]), Err(Error::EmptyDistribution));
        assert!(matches!(
            ProbDist::new(vec![1.5, -0.5]),
            Err(Error::NegativeProbability { index: 1, .. })
        ));
        assert!(ProbDist::new(vec![f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn tolerance_edge() {
        assert!(ProbDist::new(vec![0.5, 0.5 + 0.9e-9]).is_ok());
        assert!(ProbDist::new(vec![0.5, 0.5 + 1.1e-9]).is_err());
    }

    #[test]
    fn normalize_examples() {
        let p = ProbDist::normalize(&[1.0, 1.0, 2.0]).unwrap();
        assert_eq!(p.probs(), &[0.25, 0.25, 0.5]);

        let q = ProbDist::normalize(&[0.5, 0.25]).unwrap();
        assert!((q.probs()[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((q.probs()[1] - 1.0 / 3.0).abs() < 1e-15);

        assert_eq!(ProbDist::normalize(&[0.0, 0.0]), Err(Error::AllZero));
        assert!(matches!(
            ProbDist::normalize(&[1.0, -1.0]),
            Err(Error::NegativeProbability { .. })
        ));
    }

    #[test]
    fn count_vector_rules() {
        assert_eq!(CountVector::new(vec![0, 0]), Err(Error::EmptyCounts));
        let c = CountVector::new(vec![3, 0, 2]).unwrap();
        assert_eq!(c.total(), 5);
        assert_eq!(c.observed(), 2);
        assert_eq!(c.compact().counts(), &[3, 2]);
        assert!(CountVector::new(vec![u64::MAX, 1]).is_err());
    }

    #[test]
    fn bytes_examples() {
        let (c, p) = empirical_from_bytes(&[0x00, 0x00, 0x01]).unwrap();
        assert_eq!(c.len(), 256);
        assert_eq!(c.counts()[0], 2);
        assert_eq!(c.counts()[1], 1);
        assert_eq!(c.total(), 3);
        assert!((p.probs()[0] - 2.0 / 3.0).abs() < 1e-15);

        let (c, p) = empirical_from_bytes(&[0xFF; 1024]).unwrap();
        assert_eq!(c.counts()[255], 1024);
        assert_eq!(p.probs()[255], 1.0);

        assert_eq!(empirical_from_bytes(&[]), Err(Error::EmptyStream));
    }

    #[test]
    fn bits_examples() {
        let (c, _) = empirical_bits_from_bytes(&[0b1010_0000, 0xFF]).unwrap();
        assert_eq!(c.counts(), &[6, 10]);
        assert_eq!(c.total(), 16);
        assert_eq!(empirical_bits_from_bytes(&[]), Err(Error::EmptyStream));
    }

    #[test]
    fn reader_matches_slice() {
        let data: Vec<u8> = (0..200_000u32).map(|i| (i * 7 % 251) as u8).collect();
        let mut hist = ByteHistogram::default();
        hist.read_from(&data[..]).unwrap();
        assert_eq!(hist.finish().unwrap(), empirical_from_bytes(&data).unwrap());
    }

    proptest! {
        #[test]
        fn byte_counts_conserve_length(data in proptest::collection::vec(any::<u8>(), 1..2048)) {
            let (c, p) = empirical_from_bytes(&data).unwrap();
            prop_assert_eq!(c.total(), data.len() as u64);
            prop_assert_eq!(c.counts().iter().sum::<u64>(), data.len() as u64);
            prop_assert!(ProbDist::new(p.into_vec()).is_ok());
        }

        #[test]
        fn make_prob_dist_accepts_exactly_valid_vectors(
            values in proptest::collection::vec(-0.2f64..1.2, 1..8),
            fix_sum in any::<bool>(),
        ) {
            let values = if fix_sum {
                let s: f64 = values.iter().map(|v| v.abs()).sum();
                if s == 0.0 { vec![1.0] } else { values.iter().map(|v| v.abs() / s).collect() }
            } else {
                values
            };
            let sum: f64 = values.iter().sum();
            let valid = values.iter().all(|&v| v >= 0.0) && (sum - 1.0).abs() <= SUM_TOLERANCE;
            prop_assert_eq!(ProbDist::new(values).is_ok(), valid);
        }
    }
}
