//! Splitting an outcome in two and grouping outcomes into blocks.
//!
//! `H_Ω` obeys the grouping rule exactly at finite `N`:
//!
//! ```text
//! H_Ω(p; N, M) = H_Ω({P_k}; N, K) + Σ_k P_k · H_Ω({p_i / P_k}_{i∈k}; N P_k, M_k)
//! ```
//!
//! where the group sample sizes `N P_k` stay real-valued. Splitting one
//! outcome is the special case with a single two-element group.

use serde::Serialize;

use crate::dist::ProbDist;
use crate::entropy::{omega_nats, EntropyValue};
use crate::error::{Error, Result};

/// Tolerance on `|Σ P_k - 1|` for a partition applied to a distribution.
const MASS_TOLERANCE: f64 = 1e-9;

/// Grouping of `M` outcome indices into `K` disjoint, non-empty groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    groups: Vec<Vec<usize>>,
    outcomes: usize,
}

impl Partition {
    /// Validates that `groups` covers `0..outcomes` exactly once.
    pub fn new(groups: Vec<Vec<usize>>, outcomes: usize) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidPartition("no groups".into()));
        }
        let mut seen = vec![false; outcomes];
        for (k, g) in groups.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::InvalidPartition(format!("group {k} is empty")));
            }
            for &i in g {
                match seen.get_mut(i) {
                    None => {
                        return Err(Error::InvalidPartition(format!(
                            "index {i} out of range for {outcomes} outcomes"
                        )))
                    }
                    Some(true) => {
                        return Err(Error::InvalidPartition(format!("index {i} appears twice")))
                    }
                    Some(s) => *s = true,
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("index {i} is not covered")));
        }
        Ok(Self { groups, outcomes })
    }

    /// Builds a partition from a per-outcome group label; labels must be
    /// `0..K` with every label used.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let k = labels.iter().max().map_or(0, |&m| m + 1);
        let mut groups = vec![Vec::new(); k];
        for (i, &g) in labels.iter().enumerate() {
            groups[g].push(i);
        }
        Self::new(groups, labels.len())
    }

    /// One group holding every outcome.
    pub fn single(outcomes: usize) -> Result<Self> {
        Self::new(vec![(0..outcomes).collect()], outcomes)
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// `K`.
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// `M`.
    pub fn outcomes(&self) -> usize {
        self.outcomes
    }

    /// Group sizes `M_k`.
    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }

    /// Group masses `P_k = Σ_{i∈k} p_i`.
    pub fn masses(&self, p: &ProbDist) -> Vec<f64> {
        self.groups
            .iter()
            .map(|g| g.iter().map(|&i| p.probs()[i]).sum())
            .collect()
    }
}

/// Replaces `p[index]` by `λ p[index]` and appends `(1 - λ) p[index]`.
pub fn split_outcome(p: &ProbDist, index: usize, lambda: f64) -> Result<ProbDist> {
    if index >= p.len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: p.len(),
        });
    }
    if !(0.0..1.0).contains(&lambda) {
        return Err(Error::InvalidLambda(lambda));
    }
    let mut probs = p.probs().to_vec();
    let mass = probs[index];
    probs[index] = lambda * mass;
    probs.push((1.0 - lambda) * mass);
    Ok(ProbDist::from_vec_unchecked(probs))
}

/// Difference between the two sides of the split-outcome identity:
///
/// `H_Ω(split; N) - [H_Ω(p; N) + p_j · H_Ω([λ, 1-λ]; N p_j)]`
///
/// Both sides are equal algebraically, so the result is rounding noise.
pub fn recursion_residual(p: &ProbDist, index: usize, lambda: f64, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidN { min: 1, got: 0.0 });
    }
    let split = split_outcome(p, index, lambda)?;
    let mass = p.probs()[index];
    if mass == 0.0 {
        return Err(Error::ZeroProbabilityAtIndex(index));
    }
    let n = n as f64;
    let lhs = omega_nats(split.probs(), n);
    let rhs = omega_nats(p.probs(), n) + mass * omega_nats(&[lambda, 1.0 - lambda], n * mass);
    Ok(lhs - rhs)
}

/// Within-group contribution to a coarse-grained decomposition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupTerm {
    /// `P_k`.
    pub mass: f64,
    /// `N_k = N P_k`, real-valued.
    pub sample_size: f64,
    /// `M_k`.
    pub outcomes: usize,
    /// `H_Ω({p_i / P_k}; N_k, M_k)`.
    pub entropy: EntropyValue,
}

/// Result of [`coarse_grain`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoarseGrained {
    /// `H_Ω({P_k}; N, K)`.
    pub coarse: EntropyValue,
    pub group_terms: Vec<GroupTerm>,
    /// `coarse + Σ P_k · group_terms[k]`.
    pub total: EntropyValue,
}

/// Decomposes `H_Ω(p; N)` over `partition` into a between-group term and
/// mass-weighted within-group terms.
pub fn coarse_grain(p: &ProbDist, partition: &Partition, n: u64) -> Result<CoarseGrained> {
    if n == 0 {
        return Err(Error::InvalidN { min: 1, got: 0.0 });
    }
    coarse_grain_real(p, partition, n as f64)
}

pub(crate) fn coarse_grain_real(
    p: &ProbDist,
    partition: &Partition,
    n: f64,
) -> Result<CoarseGrained> {
    if partition.outcomes() != p.len() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} outcomes, distribution has {}",
            partition.outcomes(),
            p.len()
        )));
    }
    let masses = partition.masses(p);
    if let Some(k) = masses.iter().position(|&m| m == 0.0) {
        return Err(Error::ZeroGroupMass(k));
    }
    let mass_sum: f64 = masses.iter().sum();
    if (mass_sum - 1.0).abs() > MASS_TOLERANCE {
        return Err(Error::InvalidPartition(format!(
            "group masses sum to {mass_sum}"
        )));
    }

    let coarse = omega_nats(&masses, n);
    let mut weighted = 0.0;
    let group_terms: Vec<GroupTerm> = partition
        .groups()
        .iter()
        .zip(&masses)
        .map(|(g, &mass)| {
            let inner: Vec<f64> = g.iter().map(|&i| p.probs()[i] / mass).collect();
            let sample_size = n * mass;
            let h = omega_nats(&inner, sample_size);
            weighted += mass * h;
            GroupTerm {
                mass,
                sample_size,
                outcomes: g.len(),
                entropy: EntropyValue::nats(h),
            }
        })
        .collect();

    Ok(CoarseGrained {
        coarse: EntropyValue::nats(coarse),
        group_terms,
        total: EntropyValue::nats(coarse + weighted),
    })
}

/// `coarse_grain(p, partition, n).total - H_Ω(p; N)`.
pub fn coarse_grain_residual(p: &ProbDist, partition: &Partition, n: u64) -> Result<f64> {
    let cg = coarse_grain(p, partition, n)?;
    Ok(cg.total.value - omega_nats(p.probs(), n as f64))
}

/// The split-outcome residual routed through [`coarse_grain`]: the split
/// outcome and its appended sibling form one group, all others stay single.
pub fn recursion_residual_via_partition(
    p: &ProbDist,
    index: usize,
    lambda: f64,
    n: u64,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidN { min: 1, got: 0.0 });
    }
    let split = split_outcome(p, index, lambda)?;
    if p.probs()[index] == 0.0 {
        return Err(Error::ZeroProbabilityAtIndex(index));
    }
    let m = p.len();
    let groups = (0..m)
        .map(|i| if i == index { vec![i, m] } else { vec![i] })
        .collect();
    let partition = Partition::new(groups, m + 1)?;
    let cg = coarse_grain_real(&split, &partition, n as f64)?;
    Ok(omega_nats(split.probs(), n as f64) - cg.total.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pd(v: &[f64]) -> ProbDist {
        ProbDist::new(v.to_vec()).unwrap()
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            split_outcome(&pd(&[0.4, 0.6]), 1, 0.5).unwrap().probs(),
            &[0.4, 0.3, 0.3]
        );
        assert_eq!(
            split_outcome(&pd(&[1.0]), 0, 0.0).unwrap().probs(),
            &[0.0, 1.0]
        );
        assert_eq!(
            split_outcome(&pd(&[0.5, 0.5]), 1, 0.25).unwrap().probs(),
            &[0.5, 0.125, 0.375]
        );
        assert!(matches!(
            split_outcome(&pd(&[0.5, 0.5]), 2, 0.5),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
        assert_eq!(
            split_outcome(&pd(&[1.0]), 0, 1.0),
            Err(Error::InvalidLambda(1.0))
        );
        assert!(split_outcome(&pd(&[1.0]), 0, -0.1).is_err());
        assert!(split_outcome(&pd(&[1.0]), 0, f64::NAN).is_err());
    }

    #[test]
    fn residual_examples() {
        let r = recursion_residual(&pd(&[0.5, 0.5]), 1, 0.5, 100).unwrap();
        assert!(r.abs() <= 1e-10, "{r}");
        let r = recursion_residual(&pd(&[0.2, 0.3, 0.5]), 2, 0.37, 1000).unwrap();
        assert!(r.abs() <= 1e-10, "{r}");
        let r = recursion_residual(&pd(&[1.0]), 0, 0.5, 64).unwrap();
        assert!(r.abs() <= 1e-10, "{r}");
        assert_eq!(
            recursion_residual(&pd(&[1.0, 0.0]), 1, 0.5, 10),
            Err(Error::ZeroProbabilityAtIndex(1))
        );
    }

    #[test]
    fn residual_degenerate_p_matches_binary_entropy() {
        // H_Ω([1]) = 0, so the split side alone equals H_Ω([½, ½]; 64).
        let lhs = omega_nats(&[0.5, 0.5], 64.0);
        let ln_fact = |k: u32| (1..=k).map(|j| f64::from(j).ln()).sum::<f64>();
        let direct = (ln_fact(64) - 2.0 * ln_fact(32)) / 64.0;
        assert_abs_diff_eq!(lhs, direct, epsilon = 1e-12);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(Partition::new(vec![], 0).is_err());
        assert!(Partition::new(vec![vec![0], vec![]], 1).is_err());
        assert!(Partition::new(vec![vec![0, 1], vec![1]], 2).is_err());
        assert!(Partition::new(vec![vec![0]], 2).is_err());
        assert!(Partition::new(vec![vec![0, 5]], 2).is_err());

        let p = Partition::from_labels(&[1, 0, 1]).unwrap();
        assert_eq!(p.groups(), &[vec![1], vec![0, 2]]);
        assert_eq!(p.group_sizes(), vec![1, 2]);
        assert!(Partition::from_labels(&[0, 2]).is_err());
    }

    #[test]
    fn coarse_grain_examples() {
        let p = pd(&[0.25; 4]);
        let part = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        let cg = coarse_grain(&p, &part, 200).unwrap();
        assert_abs_diff_eq!(
            cg.total.value,
            omega_nats(p.probs(), 200.0),
            epsilon = 1e-10
        );
        assert_eq!(cg.group_terms.len(), 2);
        assert_abs_diff_eq!(cg.group_terms[0].sample_size, 100.0);

        let p = pd(&[0.5, 0.3, 0.2]);
        let part = Partition::new(vec![vec![0], vec![1, 2]], 3).unwrap();
        let cg = coarse_grain(&p, &part, 500).unwrap();
        let ln_fact = |x: f64| crate::special::ln_gamma(x + 1.0);
        let direct = (ln_fact(500.0) - ln_fact(250.0) - ln_fact(150.0) - ln_fact(100.0)) / 500.0;
        assert_abs_diff_eq!(cg.total.value, direct, epsilon = 1e-10);

        let single = Partition::single(3).unwrap();
        let cg = coarse_grain(&p, &single, 500).unwrap();
        assert_eq!(cg.coarse.value, 0.0);
        assert_eq!(cg.total.value, cg.group_terms[0].entropy.value);
    }

    #[test]
    fn coarse_grain_errors() {
        let p = pd(&[0.5, 0.5, 0.0]);
        let part = Partition::new(vec![vec![0, 1], vec![2]], 3).unwrap();
        assert_eq!(coarse_grain(&p, &part, 10), Err(Error::ZeroGroupMass(1)));
        let wrong = Partition::single(2).unwrap();
        assert!(matches!(
            coarse_grain(&p, &wrong, 10),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn split_then_merge_round_trip() {
        let p = pd(&[0.1, 0.6, 0.3]);
        let split = split_outcome(&p, 1, 0.3).unwrap();
        let merge = Partition::new(vec![vec![0], vec![1, 3], vec![2]], 4).unwrap();
        let cg = coarse_grain(&split, &merge, 1234).unwrap();
        assert_abs_diff_eq!(
            cg.coarse.value,
            omega_nats(p.probs(), 1234.0),
            epsilon = 1e-10
        );
        assert_abs_diff_eq!(
            cg.total.value,
            omega_nats(split.probs(), 1234.0),
            epsilon = 1e-10
        );
    }
}
