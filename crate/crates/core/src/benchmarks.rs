//! Registry of continuous test functions.
//!
//! | name        | box                    | minimum            |
//! |-------------|------------------------|--------------------|
//! | sphere      | [-5.12, 5.12]^D        | 0 at the origin    |
//! | rosenbrock  | [-5, 10]^D, D >= 2     | 0 at (1, ..., 1)   |
//! | rastrigin   | [-5.12, 5.12]^D        | 0 at the origin    |
//! | ackley      | [-32.768, 32.768]^D    | 0 at the origin    |
//! | two_mode    | [-5, 5]^D              | 0 at ±(2.5, ..., 2.5) |
//!
//! Every function ships an analytic gradient.

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};
use crate::problem::{Problem, SearchSpace};

pub const BENCHMARK_NAMES: [&str; 5] = ["sphere", "rosenbrock", "rastrigin", "ackley", "two_mode"];

/// Static description of a registered benchmark at a given dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec {
    pub name: &'static str,
    pub dimension: usize,
    pub lower: f64,
    pub upper: f64,
    pub minimum_position: Vec<f64>,
    pub minimum_value: f64,
    pub has_gradient: bool,
}

pub fn spec(name: &str, dimension: usize) -> Result<BenchmarkSpec> {
    let (name, lower, upper, at) = match name {
        "sphere" => ("sphere", -5.12, 5.12, 0.0),
        "rosenbrock" => ("rosenbrock", -5.0, 10.0, 1.0),
        "rastrigin" => ("rastrigin", -5.12, 5.12, 0.0),
        "ackley" => ("ackley", -32.768, 32.768, 0.0),
        "two_mode" => ("two_mode", -5.0, 5.0, -2.5),
        _ => return Err(unknown(name)),
    };
    let min_dim = if name == "rosenbrock" { 2 } else { 1 };
    if dimension < min_dim {
        return Err(Error::InvalidConfig(format!(
            "{name} needs dimension >= {min_dim}, got {dimension}"
        )));
    }
    Ok(BenchmarkSpec {
        name,
        dimension,
        lower,
        upper,
        minimum_position: vec![at; dimension],
        minimum_value: 0.0,
        has_gradient: true,
    })
}

fn unknown(name: &str) -> Error {
    Error::UnknownBenchmark {
        name: name.to_string(),
        available: BENCHMARK_NAMES.join(", "),
    }
}

/// Builds the registered problem `name` in `dimension` dimensions.
pub fn lookup(name: &str, dimension: usize) -> Result<Problem> {
    let s = spec(name, dimension)?;
    let space = SearchSpace::uniform(dimension, s.lower, s.upper)?;
    let label = format!("{name}_d{dimension}");
    let problem = match s.name {
        "sphere" => Problem::new(label, space, sphere).with_gradient(sphere_gradient),
        "rosenbrock" => Problem::new(label, space, rosenbrock).with_gradient(rosenbrock_gradient),
        "rastrigin" => Problem::new(label, space, rastrigin).with_gradient(rastrigin_gradient),
        "ackley" => Problem::new(label, space, ackley).with_gradient(ackley_gradient),
        "two_mode" => {
            let c2 = vec![2.5; dimension];
            return two_mode_in(&s.minimum_position, &c2, space);
        }
        _ => unreachable!(),
    };
    Ok(problem.with_known_optimum(s.minimum_position, s.minimum_value))
}

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn sphere_gradient(x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| 2.0 * v).collect()
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
        .sum()
}

pub fn rosenbrock_gradient(x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    for i in 0..x.len().saturating_sub(1) {
        let t = x[i + 1] - x[i] * x[i];
        g[i] += -400.0 * x[i] * t - 2.0 * (1.0 - x[i]);
        g[i + 1] += 200.0 * t;
    }
    g
}

/// Row-major Hessian of [`rosenbrock`].
pub fn rosenbrock_hessian(x: &[f64]) -> Vec<Vec<f64>> {
    let d = x.len();
    let mut h = vec![vec![0.0; d]; d];
    for i in 0..d.saturating_sub(1) {
        h[i][i] += 1200.0 * x[i] * x[i] - 400.0 * x[i + 1] + 2.0;
        h[i][i + 1] += -400.0 * x[i];
        h[i + 1][i] += -400.0 * x[i];
        h[i + 1][i + 1] += 200.0;
    }
    h
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

pub fn rastrigin_gradient(x: &[f64]) -> Vec<f64> {
    x.iter()
        .map(|v| 2.0 * v + 20.0 * PI * (2.0 * PI * v).sin())
        .collect()
}

const ACKLEY_A: f64 = 20.0;
const ACKLEY_B: f64 = 0.2;

pub fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let r = (x.iter().map(|v| v * v).sum::<f64>() / d).sqrt();
    let c = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
    // grouped so the origin evaluates to exactly 0
    (ACKLEY_A - ACKLEY_A * (-ACKLEY_B * r).exp()) + (E - c.exp())
}

/// Undefined at the origin (the radial term has a cusp); returns zeros there.
pub fn ackley_gradient(x: &[f64]) -> Vec<f64> {
    let d = x.len() as f64;
    let r = (x.iter().map(|v| v * v).sum::<f64>() / d).sqrt();
    let c = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
    let radial = if r > 0.0 {
        ACKLEY_A * ACKLEY_B * (-ACKLEY_B * r).exp() / (d * r)
    } else {
        0.0
    };
    let wave = 2.0 * PI / d * c.exp();
    x.iter()
        .map(|v| radial * v + wave * (2.0 * PI * v).sin())
        .collect()
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q).powi(2)).sum()
}

/// `f(x) = min(|x - c1|², |x - c2|²)` on `[-5, 5]^D`.
pub fn two_mode(c1: &[f64], c2: &[f64]) -> Result<Problem> {
    let space = SearchSpace::uniform(c1.len().max(1), -5.0, 5.0)?;
    two_mode_in(c1, c2, space)
}

/// [`two_mode`] on a caller-chosen box.
pub fn two_mode_in(c1: &[f64], c2: &[f64], space: SearchSpace) -> Result<Problem> {
    let d = space.dimension();
    if c1.len() != d || c2.len() != d {
        return Err(Error::InvalidConfig(format!(
            "two_mode centers must have dimension {d}"
        )));
    }
    if c1 == c2 {
        return Err(Error::InvalidConfig(
            "two_mode centers must be distinct".into(),
        ));
    }
    if !space.contains(c1) || !space.contains(c2) {
        return Err(Error::InvalidConfig(
            "two_mode centers must lie inside the box".into(),
        ));
    }
    let (a, b) = (c1.to_vec(), c2.to_vec());
    let (ga, gb) = (a.clone(), b.clone());
    let optimum = a.clone();
    Ok(Problem::new(format!("two_mode_d{d}"), space, move |x| {
        sq_dist(x, &a).min(sq_dist(x, &b))
    })
    .with_gradient(move |x| {
        let c = if sq_dist(x, &ga) <= sq_dist(x, &gb) {
            &ga
        } else {
            &gb
        };
        x.iter().zip(c).map(|(p, q)| 2.0 * (p - q)).collect()
    })
    .with_known_optimum(optimum, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_miss_lists_names() {
        match lookup("spheree", 2) {
            Err(Error::UnknownBenchmark { name, available }) => {
                assert_eq!(name, "spheree");
                for n in BENCHMARK_NAMES {
                    assert!(available.contains(n));
                }
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(lookup("rosenbrock", 1).is_err());
        assert!(lookup("sphere", 0).is_err());
    }

    #[test]
    fn sphere_registration() {
        let p = lookup("sphere", 10).unwrap();
        assert_eq!(p.dimension(), 10);
        assert!(p.space().lower().iter().all(|&l| l == -5.12));
        assert!(p.space().upper().iter().all(|&u| u == 5.12));
        let (x, v) = p.known_optimum().unwrap();
        assert_eq!(x, vec![0.0; 10].as_slice());
        assert_eq!(v, 0.0);
        assert_eq!(
            p.value(&[1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
            5.0
        );
    }

    #[test]
    fn known_values() {
        assert_eq!(rosenbrock(&[1.0, 1.0]), 0.0);
        assert_eq!(rosenbrock(&[0.0, 0.0]), 1.0);
        assert_eq!(rastrigin(&[0.0, 0.0]), 0.0);
        // 1 + 1 - 10 cos(2π) * 2 + 20 = 2
        assert!((rastrigin(&[1.0, 1.0]) - 2.0).abs() < 1e-12);
        assert!(ackley(&[0.0, 0.0]).abs() < 1e-12);
        assert!(ackley(&[1.0, 0.0]) > 0.0);
    }

    #[test]
    fn optima_match_registry() {
        for name in BENCHMARK_NAMES {
            for d in [2, 5, 10] {
                let p = lookup(name, d).unwrap();
                let (x, v) = p.known_optimum().unwrap();
                assert!(p.space().contains(x));
                assert!((p.value(x) - v).abs() < 1e-12, "{name} d={d}");
            }
        }
    }

    #[test]
    fn two_mode_values() {
        let p = two_mode(&[-2.0, 0.0], &[2.0, 1.0]).unwrap();
        assert_eq!(p.value(&[-2.0, 0.0]), 0.0);
        assert_eq!(p.value(&[2.0, 1.0]), 0.0);
        // midpoint: |c1 - c2|² / 4 = (16 + 1) / 4
        assert_eq!(p.value(&[0.0, 0.5]), 17.0 / 4.0);
        assert!(two_mode(&[1.0, 1.0], &[1.0, 1.0]).is_err());
        assert!(two_mode(&[9.0, 1.0], &[1.0, 1.0]).is_err());
    }

    #[test]
    fn rosenbrock_hessian_at_optimum() {
        let h = rosenbrock_hessian(&[1.0, 1.0]);
        assert_eq!(h, vec![vec![802.0, -400.0], vec![-400.0, 200.0]]);
    }
}
