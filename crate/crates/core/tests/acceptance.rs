//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Each check also has a wall-clock budget.

mod common;

use std::f64::consts::{LN_2, PI};
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{ln_factorial_by_sum, neumaier_sum, random_probs, rng};
use omega_entropy::cli::{cmd_converge, ConvergeOptions};
use omega_entropy::decomposition::coarse_grain_residual;
use omega_entropy::multinomial::{composition_count, Multinomial};
use omega_entropy::report::render_csv;
use omega_entropy::{
    brute_force_mode, entropy_gap_asymptotic, enumerate_compositions, euler_gamma, log_gamma,
    max_payload_binary, min_overhead_binary, naive_framing_payload, normalized_truncated_entropy,
    omega_entropy_equilibrium, omega_entropy_sparse_limit, omega_entropy_uniform,
    recursion_residual, shannon_entropy, Partition, ProbDist,
};
use rand::seq::SliceRandom;
use rand::Rng;

type Check = std::result::Result<String, String>;

/// Label, time budget, check.
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(got: f64, want: f64, tol: f64, what: &str) -> std::result::Result<(), String> {
    ensure(
        (got - want).abs() <= tol,
        format!("{what} = {got} not within {tol:e} of {want}"),
    )
}

fn c1_payload_256() -> Check {
    let h = max_payload_binary(256).map_err(|e| e.to_string())?;
    let naive = naive_framing_payload(256).map_err(|e| e.to_string())?;
    within(h, 0.9831, 5e-5, "max_payload_binary(256)")?;
    within(naive, 0.9697, 5e-5, "naive_framing_payload(256)")?;
    Ok(format!("H_Ω = {h:.6}, naive = {naive:.6}"))
}

fn c2_payload_16() -> Check {
    let h = max_payload_binary(16).map_err(|e| e.to_string())?;
    let naive = naive_framing_payload(16).map_err(|e| e.to_string())?;
    within(h, 0.8532, 5e-5, "max_payload_binary(16)")?;
    ensure(
        naive == 0.8,
        format!("naive_framing_payload(16) = {naive}, want 0.8"),
    )?;
    Ok(format!("H_Ω = {h:.6}, naive = {naive}"))
}

fn c3_ethernet() -> Check {
    let o = min_overhead_binary(12_000).map_err(|e| e.to_string())?;
    within(o, 5.9176e-4, 1e-7, "min_overhead_binary(12000)")?;
    ensure(o < 0.017, format!("{o} not below 0.017"))?;
    Ok(format!("overhead = {o:.6e}"))
}

fn c4_recursion() -> Check {
    let mut r = rng(0xACC4);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let m = r.random_range(1..=6);
        let p = ProbDist::new(random_probs(&mut r, m, 0.0)).map_err(|e| e.to_string())?;
        let idx = r.random_range(0..m);
        let lambda = r.random_range(0.0..1.0);
        let n = r.random_range(1..=1_000_000);
        let res = recursion_residual(&p, idx, lambda, n).map_err(|e| e.to_string())?;
        worst = worst.max(res.abs());
    }
    ensure(worst <= 1e-10, format!("worst residual {worst:e}"))?;
    Ok(format!("worst |residual| = {worst:.2e} over 1000 cases"))
}

fn c5_coarse_grain() -> Check {
    let mut r = rng(0xACC5);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let m = r.random_range(1..=8);
        let p = ProbDist::new(random_probs(&mut r, m, 0.0)).map_err(|e| e.to_string())?;
        let k = r.random_range(1..=m);
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(&mut r);
        let mut labels = vec![0; m];
        for (slot, &i) in order.iter().enumerate() {
            labels[i] = if slot < k { slot } else { r.random_range(0..k) };
        }
        let part = Partition::from_labels(&labels).map_err(|e| e.to_string())?;
        let n = r.random_range(1..=1_000_000);
        let res = coarse_grain_residual(&p, &part, n).map_err(|e| e.to_string())?;
        worst = worst.max(res.abs());
    }
    ensure(worst <= 1e-10, format!("worst residual {worst:e}"))?;
    Ok(format!(
        "worst |residual| = {worst:.2e} over 1000 partitions"
    ))
}

fn c6_brute_force() -> Check {
    let mut targets = 0usize;
    let mut worst_sum = 0.0f64;
    for n in 1..=30u64 {
        for m in 1..=4usize {
            for target in enumerate_compositions(n, m).map_err(|e| e.to_string())? {
                let p = target.to_prob_dist();
                let mode = brute_force_mode(n, &p).map_err(|e| e.to_string())?;
                ensure(
                    mode == target,
                    format!("N={n}: mode {:?} != {:?}", mode.counts(), target.counts()),
                )?;
                let pmf = Multinomial::new(n, &p).map_err(|e| e.to_string())?;
                let mut terms = Vec::with_capacity(composition_count(n, m) as usize);
                let mut err = None;
                enumerate_compositions(n, m)
                    .map_err(|e| e.to_string())?
                    .for_each_slice(|c| match pmf.log_pmf(c) {
                        Ok(lp) => terms.push(lp.exp()),
                        Err(e) => err = Some(e.to_string()),
                    });
                if let Some(e) = err {
                    return Err(e);
                }
                let total = neumaier_sum(terms);
                worst_sum = worst_sum.max((total - 1.0).abs());
                targets += 1;
            }
        }
    }
    ensure(worst_sum <= 1e-10, format!("PMF sum off by {worst_sum:e}"))?;
    Ok(format!(
        "{targets} integral targets, worst |ΣPMF - 1| = {worst_sum:.2e}"
    ))
}

fn c7_asymptotic_gap() -> Check {
    let p = ProbDist::uniform(2).map_err(|e| e.to_string())?;
    let h_s = shannon_entropy(&p).value;
    let rel_err = |n: u64| -> std::result::Result<f64, String> {
        let gap = h_s
            - omega_entropy_equilibrium(&p, n)
                .map_err(|e| e.to_string())?
                .value;
        let est = entropy_gap_asymptotic(&p, n).map_err(|e| e.to_string())?;
        Ok(((gap - est) / gap).abs())
    };
    let at_4096 = rel_err(4096)?;
    ensure(
        at_4096 <= 0.02,
        format!("relative error {at_4096:e} at N = 4096"),
    )?;
    let mut prev = f64::INFINITY;
    for k in 1..=20 {
        let e = rel_err(1 << k)?;
        ensure(
            e < prev,
            format!("not decreasing at N = 2^{k}: {e:e} after {prev:e}"),
        )?;
        prev = e;
    }
    Ok(format!(
        "rel. error {at_4096:.3e} at N = 4096, {prev:.3e} at N = 2^20"
    ))
}

fn c8_sparse_limit() -> Check {
    let limit = omega_entropy_sparse_limit(4).map_err(|e| e.to_string())?;
    ensure(
        (limit - (euler_gamma() + 24f64.ln() / 4.0)).abs() <= 1e-15,
        "closed-form limit",
    )?;
    let dev = |m: u64| -> std::result::Result<f64, String> {
        Ok((omega_entropy_uniform(m, 4)
            .map_err(|e| e.to_string())?
            .value
            - limit)
            .abs())
    };
    let d6 = dev(1_000_000)?;
    ensure(d6 <= 1e-4, format!("deviation {d6:e} at M = 10^6"))?;
    let mut prev = dev(100_000)?;
    for m in [1_000_000u64, 2_000_000, 5_000_000, 10_000_000] {
        let d = dev(m)?;
        ensure(d < prev, format!("bound does not tighten at M = {m}"))?;
        prev = d;
    }
    Ok(format!(
        "deviation {d6:.2e} at M = 10^6, {prev:.2e} at M = 10^7"
    ))
}

fn c9_truncated() -> Check {
    let mut r = rng(0xACC9);
    let mut max_random = 0.0f64;
    for _ in 0..1000 {
        let m = r.random_range(2..=64);
        let head: Vec<f64> = (0..m).map(|_| r.random_range(1e-6..1.0)).collect();
        let h = normalized_truncated_entropy(&head, m)
            .map_err(|e| e.to_string())?
            .value;
        ensure(h < 1.0 - 1e-12, format!("non-uniform head reached {h}"))?;
        max_random = max_random.max(h);
    }
    for m in 2..=1000usize {
        let scale = (m as f64).sqrt();
        let head = vec![scale; m];
        let h = normalized_truncated_entropy(&head, m)
            .map_err(|e| e.to_string())?
            .value;
        within(h, 1.0, 1e-12, &format!("uniform M = {m}"))?;
    }
    Ok(format!(
        "max over 1000 random = {max_random:.6}; uniform = 1 for M in 2..=1000"
    ))
}

fn c10_convergence_table() -> Check {
    let opts = ConvergeOptions::default();
    let rows = cmd_converge(&opts).map_err(|e| e.to_string())?;
    let col = |key: &str| -> Vec<f64> { rows.iter().map(|r| r.float(key).unwrap()).collect() };
    let (h, gap) = (col("h_omega"), col("gap"));
    ensure(
        rows.first().and_then(|r| r.get("n")) == Some(&2u64.into()),
        "grid starts at 2",
    )?;
    ensure(
        rows.last().and_then(|r| r.get("n")) == Some(&4096u64.into()),
        "grid ends at 4096",
    )?;
    ensure(
        h.windows(2).all(|w| w[1] > w[0]),
        "H_Ω not strictly increasing",
    )?;
    ensure(
        gap.windows(2).all(|w| w[1] < w[0]),
        "gap not strictly decreasing",
    )?;
    ensure(h.iter().all(|&x| x < 1.0), "H_Ω reached H_S")?;
    ensure(col("h_s").iter().all(|&x| x == 1.0), "H_S is not 1 bit")?;

    // Denser grid, every even N.
    let p = ProbDist::uniform(2).map_err(|e| e.to_string())?;
    let mut prev = 0.0;
    for n in 2..=4096u64 {
        let v = omega_entropy_equilibrium(&p, n)
            .map_err(|e| e.to_string())?
            .value
            / LN_2;
        ensure(v > prev, format!("H_Ω drops at N = {n}"))?;
        prev = v;
    }

    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/converge_m2_uniform.csv");
    let want = std::fs::read_to_string(&golden).map_err(|e| e.to_string())?;
    let got = render_csv(&rows).map_err(|e| e.to_string())?;
    ensure(got == want, "CSV differs from golden file")?;
    Ok(format!(
        "{} rows, H_Ω(4096) = {:.6} bit, golden CSV identical",
        rows.len(),
        h[h.len() - 1]
    ))
}

fn c11_log_gamma() -> Check {
    let mut worst = 0.0f64;
    for n in 0..=10_000u64 {
        let got = log_gamma(n as f64 + 1.0).map_err(|e| e.to_string())?;
        let want = ln_factorial_by_sum(n);
        let err = if want == 0.0 {
            got.abs()
        } else {
            ((got - want) / want).abs()
        };
        worst = worst.max(err);
    }
    ensure(worst <= 1e-12, format!("ln(n!) relative error {worst:e}"))?;
    let half = log_gamma(0.5).map_err(|e| e.to_string())?;
    let sqrt_pi = PI.sqrt();
    let err = ((half.exp() - sqrt_pi) / sqrt_pi).abs();
    ensure(err <= 1e-12, format!("Γ(1/2) relative error {err:e}"))?;
    Ok(format!(
        "ln(n!) worst rel. error {worst:.2e}, Γ(1/2) rel. error {err:.2e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "1  payload and naive framing at N = 256",
            Duration::from_secs(1),
            c1_payload_256,
        ),
        (
            "2  payload and naive framing at N = 16",
            Duration::from_secs(1),
            c2_payload_16,
        ),
        (
            "3  overhead floor for a 12000-bit frame",
            Duration::from_secs(1),
            c3_ethernet,
        ),
        (
            "4  recursion identity",
            Duration::from_secs(1),
            c4_recursion,
        ),
        (
            "5  coarse-graining identity",
            Duration::from_secs(1),
            c5_coarse_grain,
        ),
        (
            "6  brute-force multinomial mode and PMF mass",
            Duration::from_secs(10),
            c6_brute_force,
        ),
        (
            "7  asymptotic gap for a fair coin",
            Duration::from_secs(1),
            c7_asymptotic_gap,
        ),
        (
            "8  sparse limit for N = 4",
            Duration::from_secs(5),
            c8_sparse_limit,
        ),
        (
            "9  truncated entropy bound",
            Duration::from_secs(1),
            c9_truncated,
        ),
        (
            "10 convergence table for M = 2",
            Duration::from_secs(1),
            c10_convergence_table,
        ),
        (
            "11 log-gamma accuracy",
            Duration::from_secs(1),
            c11_log_gamma,
        ),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
