use std::f64::consts::{LN_2, PI};

use omega_entropy::channel::{
    channel_report, max_payload_binary, min_overhead_binary, real_overhead,
};
use omega_entropy::{convert, omega_entropy_equilibrium, EntropyUnit, ProbDist};

#[test]
fn binary_payload_strictly_increases_below_one() {
    let mut prev = 0.0;
    for n in (2..=1u64 << 20).step_by(2) {
        let v = max_payload_binary(n).unwrap();
        assert!(v > prev && v < 1.0, "N={n}: {v} after {prev}");
        prev = v;
    }
}

#[test]
fn overhead_follows_stirling_gap() {
    for k in 10..=24 {
        let n = 1u64 << k;
        let scaled = min_overhead_binary(n).unwrap() * 2.0 * n as f64 * LN_2;
        let want = (2.0 * PI * n as f64).ln() - 4f64.ln();
        assert!(
            ((scaled - want) / want).abs() <= 0.02,
            "N={n}: {scaled} vs {want}"
        );
    }
}

#[test]
fn report_matches_converted_equilibrium_entropy() {
    for probs in [vec![0.5, 0.5], vec![0.1, 0.9], vec![0.2, 0.3, 0.5]] {
        let p = ProbDist::new(probs).unwrap();
        let unit = EntropyUnit::BeansPerBean { m: p.len() };
        for n in [2, 10, 256, 12_000, 1 << 20] {
            let r = channel_report(&p, n).unwrap();
            let want = convert(omega_entropy_equilibrium(&p, n).unwrap(), unit)
                .unwrap()
                .value;
            assert_eq!(r.max_utilization, want);
            if p.len() == 2 {
                let bits =
                    convert(omega_entropy_equilibrium(&p, n).unwrap(), EntropyUnit::Bits).unwrap();
                assert_eq!(r.max_utilization, bits.value);
            }
        }
    }
}

#[test]
fn ethernet_bound_is_far_below_real_overhead() {
    let bound = min_overhead_binary(12_000).unwrap();
    let real = real_overhead(208, 12_000);
    assert!(bound < 0.017 && bound < real);
    assert!(real / bound > 25.0);
}
