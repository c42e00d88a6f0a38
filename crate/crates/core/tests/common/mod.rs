//! Reference computations that do not go through the library's log-gamma.
#![allow(dead_code)]

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Compensated (Neumaier) sum.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// `ln n!` as a compensated sum of `ln k`.
pub fn ln_factorial_by_sum(n: u64) -> f64 {
    neumaier_sum((2..=n).map(|k| (k as f64).ln()))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `Ω = N! / Π n_i!` in exact integer arithmetic.
pub fn omega_exact(counts: &[u64]) -> BigUint {
    let n: u64 = counts.iter().sum();
    let denom = counts
        .iter()
        .fold(BigUint::one(), |acc, &k| acc * factorial(k));
    factorial(n) / denom
}

/// Natural log of a big integer, exact to f64 rounding.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit head");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random probability vector of length `m` with every entry >= `floor`
/// before normalization.
pub fn random_probs<R: Rng>(rng: &mut R, m: usize, floor: f64) -> Vec<f64> {
    let w: Vec<f64> = (0..m).map(|_| floor + rng.random::<f64>()).collect();
    let s: f64 = w.iter().sum();
    w.iter().map(|x| x / s).collect()
}
