//! Command implementations behind the `omega-entropy` binary. Each command
//! returns flat [`Record`]s; rendering is left to [`crate::report`].

use std::io::Read;

use crate::channel::{
    channel_report_with, max_payload_binary, min_overhead_binary, naive_framing_payload_with,
    real_overhead, ChannelReport, LengthPrefix,
};
use crate::dist::{BitHistogram, ByteHistogram, CountVector, ProbDist};
use crate::entropy::{
    convert, entropy_gap_asymptotic, omega_entropy_equilibrium, shannon_entropy, EntropyUnit,
    EntropyValue, BEANS_UPPER_SLACK,
};
use crate::error::{Error, Result};
use crate::report::Record;

/// Largest sample size accepted by `converge`.
pub const CONVERGE_MAX_N: u64 = 1_000_000_000;

/// Unit choice on the command line; beans resolve against the alphabet
/// size of the data at hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum UnitArg {
    Nats,
    #[default]
    Bits,
    Beans,
}

impl UnitArg {
    pub fn resolve(self, m: usize) -> Result<EntropyUnit> {
        match self {
            UnitArg::Nats => Ok(EntropyUnit::Nats),
            UnitArg::Bits => Ok(EntropyUnit::Bits),
            UnitArg::Beans if m < 2 => Err(Error::InvalidUnit(m)),
            UnitArg::Beans => Ok(EntropyUnit::BeansPerBean { m }),
        }
    }

    fn label(self) -> &'static str {
        match self {
            UnitArg::Nats => "nats",
            UnitArg::Bits => "bits",
            UnitArg::Beans => "beans",
        }
    }
}

/// Beans-per-bean value of `e`; a one-symbol alphabet can only carry zero
/// entropy, which is reported as 0.
fn beans(e: EntropyValue, m: usize) -> Result<f64> {
    if m < 2 {
        return Ok(0.0);
    }
    Ok(convert(e, EntropyUnit::BeansPerBean { m })?.value)
}

fn in_unit(e: EntropyValue, unit: UnitArg, m: usize) -> Result<f64> {
    match unit {
        UnitArg::Beans => beans(e, m),
        u => Ok(convert(e, u.resolve(m)?)?.value),
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Treat input as a stream of bits (`M = 2`) instead of bytes.
    pub bits: bool,
    /// Drop unobserved symbols so `M` is the observed alphabet.
    pub compact: bool,
    pub prefix: LengthPrefix,
    pub unit: UnitArg,
}

/// Builds the analysis record for one input stream.
pub fn cmd_analyze<R: Read>(source: &str, reader: R, opts: &AnalyzeOptions) -> Result<Record> {
    let (counts, _) = if opts.bits {
        let mut h = BitHistogram::default();
        h.read_from(reader)?;
        h.finish()?
    } else {
        let mut h = ByteHistogram::default();
        h.read_from(reader)?;
        h.finish()?
    };
    analysis_record(source, &counts, opts)
}

/// Analysis record for an already-counted sample.
pub fn analysis_record(
    source: &str,
    counts: &CountVector,
    opts: &AnalyzeOptions,
) -> Result<Record> {
    let counts = if opts.compact {
        counts.compact()
    } else {
        counts.clone()
    };
    let p = counts.to_prob_dist();
    let n = counts.total();
    let m = counts.len();

    let h_s = shannon_entropy(&p);
    let h_omega = omega_entropy_equilibrium(&p, n)?;
    let gap = EntropyValue::nats(h_s.value - h_omega.value);

    let channel = if n >= 2 {
        Some(channel_report_with(&p, n, opts.prefix)?)
    } else {
        None
    };

    let h_s_beans = beans(h_s, m)?;
    let h_omega_beans = beans(h_omega, m)?;
    for v in [h_s_beans, h_omega_beans] {
        debug_assert!(v <= 1.0 + BEANS_UPPER_SLACK, "beans value {v} above 1");
    }

    let mut rec = Record::new()
        .with("source", source)
        .with("n", n)
        .with("m", m)
        .with("m_observed", counts.observed())
        .with("unit", opts.unit.label())
        .with("h_s", in_unit(h_s, opts.unit, m)?)
        .with("h_omega", in_unit(h_omega, opts.unit, m)?)
        .with("gap", in_unit(gap, opts.unit, m)?)
        .with("h_s_bits", convert(h_s, EntropyUnit::Bits)?.value)
        .with("h_s_beans", h_s_beans)
        .with("h_omega_bits", convert(h_omega, EntropyUnit::Bits)?.value)
        .with("h_omega_beans", h_omega_beans);
    push_channel_fields(&mut rec, channel.as_ref());
    Ok(rec)
}

fn push_channel_fields(rec: &mut Record, report: Option<&ChannelReport>) {
    rec.push("max_utilization", report.map(|r| r.max_utilization))
        .push("min_overhead", report.map(|r| r.min_overhead))
        .push(
            "naive_payload_fraction",
            report.map(|r| r.naive_payload_fraction),
        )
        .push("shannon_utilization", report.map(|r| r.shannon_utilization))
        .push("beats_naive", report.map(|r| r.beats_naive))
        .push("negative_overhead", report.map(|r| r.negative_overhead));
}

#[derive(Debug, Clone)]
pub struct ConvergeOptions {
    pub m: usize,
    /// Source distribution; uniform over `m` when absent.
    pub p: Option<ProbDist>,
    pub n_min: u64,
    pub n_max: u64,
    pub steps: usize,
    pub unit: UnitArg,
}

impl Default for ConvergeOptions {
    fn default() -> Self {
        Self {
            m: 2,
            p: None,
            n_min: 2,
            n_max: 4096,
            steps: 12,
            unit: UnitArg::Bits,
        }
    }
}

/// Log-spaced integer grid from `n_min` to `n_max` inclusive, duplicates
/// removed.
pub fn log_grid(n_min: u64, n_max: u64, steps: usize) -> Result<Vec<u64>> {
    if n_min < 1 {
        return Err(Error::InvalidRange(format!(
            "n_min must be >= 1, got {n_min}"
        )));
    }
    if n_max > CONVERGE_MAX_N {
        return Err(Error::InvalidRange(format!(
            "n_max must be <= 1e9, got {n_max}"
        )));
    }
    if n_min > n_max {
        return Err(Error::InvalidRange(format!(
            "n_min {n_min} > n_max {n_max}"
        )));
    }
    if steps == 0 {
        return Err(Error::InvalidRange("steps must be >= 1".into()));
    }
    if steps == 1 || n_min == n_max {
        return Ok(vec![n_min]);
    }
    let ratio = n_max as f64 / n_min as f64;
    let mut grid: Vec<u64> = (0..steps)
        .map(|j| {
            let t = j as f64 / (steps - 1) as f64;
            ((n_min as f64) * ratio.powf(t)).round() as u64
        })
        .collect();
    grid[0] = n_min;
    grid[steps - 1] = n_max;
    grid.dedup();
    Ok(grid)
}

/// One row per grid point: `n, h_omega, h_s, gap, gap_asymptotic`.
/// `gap_asymptotic` is empty when `p` has zero entries.
pub fn cmd_converge(opts: &ConvergeOptions) -> Result<Vec<Record>> {
    let p = match &opts.p {
        Some(p) => p.clone(),
        None => ProbDist::uniform(opts.m)?,
    };
    let m = p.len();
    let unit = opts.unit.resolve(m)?;
    let h_s = shannon_entropy(&p);
    let grid = log_grid(opts.n_min, opts.n_max, opts.steps)?;
    let to_unit = |nats: f64| convert(EntropyValue::nats(nats), unit).map(|e| e.value);

    grid.into_iter()
        .map(|n| {
            let h_omega = omega_entropy_equilibrium(&p, n)?;
            let asym = match entropy_gap_asymptotic(&p, n) {
                Ok(g) => Some(to_unit(g)?),
                Err(Error::ZeroProbability(_)) => None,
                Err(e) => return Err(e),
            };
            Ok(Record::new()
                .with("n", n)
                .with("h_omega", to_unit(h_omega.value)?)
                .with("h_s", to_unit(h_s.value)?)
                .with("gap", to_unit(h_s.value - h_omega.value)?)
                .with("gap_asymptotic", asym))
        })
        .collect()
}

#[derive(Debug, Clone, Default)]
pub struct ChannelOptions {
    pub n: u64,
    /// Source distribution; a fair binary source when absent.
    pub p: Option<ProbDist>,
    /// Real frame header size, for comparison against the bound.
    pub header_bits: Option<u64>,
    pub prefix: LengthPrefix,
}

pub fn cmd_channel(opts: &ChannelOptions) -> Result<Record> {
    let n = opts.n;
    let report = match &opts.p {
        Some(p) => channel_report_with(p, n, opts.prefix)?,
        None => {
            let max = max_payload_binary(n)?;
            let naive = naive_framing_payload_with(n, opts.prefix)?;
            let overhead = min_overhead_binary(n)?;
            ChannelReport {
                message_bits: n,
                alphabet: 2,
                max_utilization: max,
                min_overhead: overhead,
                naive_payload_fraction: naive,
                shannon_utilization: 1.0,
                beats_naive: max > naive,
                negative_overhead: overhead < 0.0,
            }
        }
    };
    let real = opts.header_bits.map(|h| real_overhead(h, n));
    let mut rec = Record::new()
        .with("message_bits", report.message_bits)
        .with("alphabet", report.alphabet);
    push_channel_fields(&mut rec, Some(&report));
    rec.push("header_bits", opts.header_bits)
        .push("real_overhead", real)
        .push("bound_below_real", real.map(|r| report.min_overhead < r));
    Ok(rec)
}

/// Parses a comma-separated probability list such as `0.25,0.75`.
pub fn parse_prob_list(s: &str) -> Result<ProbDist> {
    let values = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidRange(format!("bad probability {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    ProbDist::new(values)
}
