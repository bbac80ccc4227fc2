use statrs::distribution::{ContinuousCDF, Normal};
use swarmkit_core::levy::{sample_step, sample_vector, LevyConfig};
use swarmkit_core::RngStream;

const N: usize = 1_000_000;

fn draws(lambda: f64, seed: u64, n: usize) -> Vec<f64> {
    let cfg = LevyConfig::new(lambda, 1.0).unwrap();
    let mut rng = RngStream::new(seed);
    (0..n).map(|_| sample_step(&cfg, &mut rng)).collect()
}

fn sorted_abs(xs: &[f64]) -> Vec<f64> {
    let mut a: Vec<f64> = xs.iter().map(|x| x.abs()).collect();
    a.sort_by(|x, y| y.partial_cmp(x).unwrap());
    a
}

/// Hill estimator of the tail index from the `k` largest of `desc`
/// (sorted descending).
fn hill(desc: &[f64], k: usize) -> f64 {
    let threshold = desc[k].ln();
    let mean_log_excess = desc[..k].iter().map(|x| x.ln() - threshold).sum::<f64>() / k as f64;
    1.0 / mean_log_excess
}

fn median_of_desc(desc: &[f64]) -> f64 {
    desc[desc.len() / 2]
}

#[test]
fn hill_estimate_matches_tail_index() {
    let desc = sorted_abs(&draws(1.5, 2024, N));
    let h = hill(&desc, N / 100);
    assert!((1.3..=1.7).contains(&h), "hill estimate {h}");
}

#[test]
fn hill_tracks_other_indices() {
    for lambda in [1.2, 1.8] {
        let desc = sorted_abs(&draws(lambda, 7, 200_000));
        let h = hill(&desc, 2_000);
        assert!((h - lambda).abs() < 0.25, "lambda {lambda}: hill {h}");
    }
}

#[test]
fn signs_are_balanced() {
    let xs = draws(1.5, 99, N);
    let positive = xs.iter().filter(|&&x| x > 0.0).count() as f64;
    let frac = positive / N as f64;
    assert!((0.49..=0.51).contains(&frac), "positive fraction {frac}");
    // two-sided sign test, normal approximation to Binomial(n, 1/2)
    let z = (positive - N as f64 / 2.0) / (N as f64 / 4.0).sqrt();
    let p = 2.0 * (1.0 - Normal::standard().cdf(z.abs()));
    assert!(p > 0.01, "sign test p = {p}");
}

#[test]
fn mean_is_finite_but_variance_keeps_growing() {
    let xs = draws(1.5, 5, N);
    let mean_abs = xs.iter().map(|x| x.abs()).sum::<f64>() / N as f64;
    assert!(mean_abs.is_finite() && mean_abs > 0.0);

    // median sample variance over 100 blocks, for growing block sizes
    let median_var = |block: usize| {
        let mut vars: Vec<f64> = xs
            .chunks(block)
            .take(100)
            .map(|c| {
                let m = c.iter().sum::<f64>() / c.len() as f64;
                c.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (c.len() - 1) as f64
            })
            .collect();
        vars.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vars[50]
    };
    let v: Vec<f64> = [100, 1_000, 10_000].into_iter().map(median_var).collect();
    assert!(v[0] < v[1] && v[1] < v[2], "variances {v:?}");
}

#[test]
fn tails_dominate_median_matched_normal() {
    let desc = sorted_abs(&draws(1.5, 11, N));
    let med = median_of_desc(&desc);
    // |N(0, s)| has median 0.67449 s
    let s = med / 0.674_489_750_196_081_7;
    let normal = Normal::new(0.0, s).unwrap();
    for k in [2.0, 3.0, 5.0, 10.0, 20.0] {
        let t = k * med;
        let levy_frac = desc.partition_point(|&x| x > t) as f64 / N as f64;
        let normal_frac = 2.0 * normal.sf(t);
        assert!(
            levy_frac > normal_frac,
            "threshold {k}x median: {levy_frac} vs {normal_frac}"
        );
    }
}

#[test]
fn large_vectors_contain_a_long_jump() {
    let cfg = LevyConfig::new(1.5, 1.0).unwrap();
    let mut rng = RngStream::new(31);
    let trials = 100;
    let mut hits = 0;
    for _ in 0..trials {
        let desc = sorted_abs(&sample_vector(&cfg, 10_000, &mut rng));
        if desc[0] > 10.0 * median_of_desc(&desc) {
            hits += 1;
        }
    }
    assert!(hits * 100 >= 99 * trials, "{hits}/{trials}");
}

#[test]
fn scale_is_linear() {
    let a = LevyConfig::new(1.5, 1.0).unwrap();
    let b = LevyConfig::new(1.5, 0.25).unwrap();
    let (mut r1, mut r2) = (RngStream::new(3), RngStream::new(3));
    for _ in 0..1000 {
        let (x, y) = (sample_step(&a, &mut r1), sample_step(&b, &mut r2));
        assert!((0.25 * x - y).abs() <= 1e-12 * x.abs().max(1.0));
    }
}
