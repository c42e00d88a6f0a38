//! Log-gamma kernel.
//!
//! `ln Γ(x)` is evaluated piecewise:
//!
//! * at integers up to 171, as the log of a tabulated factorial,
//! * around the zeros at `x = 1` and `x = 2`, by the Taylor series of
//!   `ln Γ(1 + z)` in zeta values (keeps relative accuracy where the result
//!   vanishes),
//! * for `x >= 10`, by the Stirling series with eight Bernoulli terms,
//! * elsewhere in `[0.5, 10)`, by shifting up with the recurrence
//!   `Γ(x + 1) = x Γ(x)` into the Stirling range,
//! * for `0 < x < 0.5`, by `ln Γ(x) = ln Γ(x + 1) - ln x`.

// Coefficients and reference values keep the digits they were computed with.
#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_78;

const STIRLING_MIN: f64 = 10.0;

/// Integer arguments up to this bound use the factorial table.
const TABLE_MAX: usize = 171;

/// `(k - 1)!` for `k = 1..=171`, index `k - 1`; exact through 22!, then
/// rounded once per step.
static FACTORIALS: [f64; TABLE_MAX] = {
    let mut t = [1.0; TABLE_MAX];
    let mut k = 1;
    while k < TABLE_MAX {
        t[k] = t[k - 1] * k as f64;
        k += 1;
    }
    t
};

/// Radius around 1 and 2 served by the zeta series.
const SERIES_RADIUS: f64 = 0.25;

// B_2k / (2k (2k - 1)), k = 1..8
const STIRLING: [f64; 8] = [
    0.083_333_333_333_333_333_333,
    -0.002_777_777_777_777_777_777_8,
    0.000_793_650_793_650_793_650_79,
    -0.000_595_238_095_238_095_238_1,
    0.000_841_750_841_750_841_750_84,
    -0.001_917_526_917_526_917_526_9,
    0.006_410_256_410_256_410_256_4,
    -0.029_550_653_594_771_241_83,
];

// (-1)^k ζ(k) / k, k = 2..32
const ZETA_SERIES: [f64; 31] = [
    0.822_467_033_424_113_218_24,
    -0.400_685_634_386_531_428_47,
    0.270_580_808_427_784_547_88,
    -0.207_385_551_028_673_985_27,
    0.169_557_176_997_408_189_95,
    -0.144_049_896_768_846_118_12,
    0.125_509_669_524_743_042_42,
    -0.111_334_265_869_564_690_49,
    0.100_099_457_512_781_808_53,
    -0.090_954_017_145_829_042_233,
    0.083_353_840_546_109_004_025,
    -0.076_932_516_411_352_191_473,
    0.071_432_946_295_361_336_059,
    -0.066_668_705_882_420_468_033,
    0.062_500_955_141_213_040_742,
    -0.058_823_978_658_684_582_339,
    0.055_555_767_627_403_611_102,
    -0.052_631_679_379_616_660_734,
    0.050_000_047_698_101_693_64,
    -0.047_619_070_330_142_227_991,
    0.045_454_556_293_204_669_442,
    -0.043_478_266_053_040_259_361,
    0.041_666_669_150_341_210_469,
    -0.040_000_001_192_140_140_586,
    0.038_461_539_034_675_185_706,
    -0.037_037_037_312_989_325_549,
    0.035_714_285_847_333_358_028,
    -0.034_482_758_684_919_300_811,
    0.033_333_333_364_377_581_081,
    -0.032_258_064_531_150_416_339,
    0.031_250_000_007_275_974_48,
];

/// Euler–Mascheroni constant γ.
#[inline]
pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

/// Natural logarithm of the gamma function for real `x > 0`.
///
/// Relative error is below 1e-12 over `[0.5, 1e15]`; values at the integers
/// 1 and 2 are exactly zero.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(x));
    }
    Ok(ln_gamma(x))
}

/// Unchecked kernel; callers guarantee `x` is finite and positive.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x.is_finite() && x > 0.0, "ln_gamma({x})");
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x <= TABLE_MAX as f64 && x.fract() == 0.0 {
        return FACTORIALS[x as usize - 1].ln();
    }
    if x < 0.5 {
        return ln_gamma(x + 1.0) - x.ln();
    }
    if (x - 1.0).abs() <= SERIES_RADIUS {
        return ln_gamma_1p_series(x - 1.0);
    }
    if (x - 2.0).abs() <= SERIES_RADIUS {
        let z = x - 2.0;
        return ln_gamma_1p_series(z) + z.ln_1p();
    }
    if x >= STIRLING_MIN {
        return stirling(x);
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < STIRLING_MIN {
        product *= shifted;
        shifted += 1.0;
    }
    stirling(shifted) - product.ln()
}

/// `ln Γ(1 + z)` for `|z| <= 0.25`.
fn ln_gamma_1p_series(z: f64) -> f64 {
    // Horner over z^2 .. z^32, then the linear term.
    let tail = ZETA_SERIES.iter().rev().fold(0.0, |acc, &c| acc * z + c);
    z * (z * tail - EULER_GAMMA)
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = STIRLING.iter().rev().fold(0.0, |acc, &c| acc * inv2 + c) * inv;
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + series
}
