use proptest::prelude::*;
use swarmkit_core::benchmarks::{rosenbrock, rosenbrock_gradient, rosenbrock_hessian};
use swarmkit_core::classical::{newton_opt_nd, newton_root, NewtonStatus};

fn p(x: f64) -> f64 {
    x * x + 9.0 * x - 10.0
}

fn dp(x: f64) -> f64 {
    2.0 * x + 9.0
}

#[test]
fn positive_starts_only_reach_one() {
    for k in 1..=100 {
        let x0 = k as f64;
        let out = newton_root(p, dp, x0, 1e-9, 200);
        assert!(out.converged(), "x0={x0}: {:?}", out.status);
        assert!((out.value - 1.0).abs() < 1e-6, "x0={x0} -> {}", out.value);
    }
}

#[test]
fn starts_left_of_the_vertex_reach_minus_ten() {
    for k in 0..50 {
        let x0 = -4.6 - k as f64;
        let out = newton_root(p, dp, x0, 1e-9, 200);
        assert!(out.converged());
        assert!((out.value + 10.0).abs() < 1e-6, "x0={x0} -> {}", out.value);
    }
}

/// Independent minimizer: fixed-step gradient descent.
fn gradient_descent(x0: [f64; 2], step: f64, iterations: usize) -> [f64; 2] {
    let mut x = x0;
    for _ in 0..iterations {
        let g = rosenbrock_gradient(&x);
        x = [x[0] - step * g[0], x[1] - step * g[1]];
    }
    x
}

/// Independent minimizer: exhaustive grid over [-2, 2]².
fn grid_minimum(spacing: f64) -> [f64; 2] {
    let steps = (4.0 / spacing).round() as i64;
    let mut best = (f64::INFINITY, [0.0, 0.0]);
    for i in 0..=steps {
        for j in 0..=steps {
            let x = [-2.0 + i as f64 * spacing, -2.0 + j as f64 * spacing];
            let f = rosenbrock(&x);
            if f < best.0 {
                best = (f, x);
            }
        }
    }
    best.1
}

#[test]
fn rosenbrock_from_classic_start() {
    let out = newton_opt_nd(
        rosenbrock_gradient,
        rosenbrock_hessian,
        &[-1.2, 1.0],
        1e-8,
        100,
    );
    assert_eq!(out.status, NewtonStatus::Converged);
    assert!(out.iterations <= 100);
    assert!(out.residual <= 1e-8);

    let grid = grid_minimum(0.002);
    let descent = gradient_descent([-1.2, 1.0], 1e-3, 200_000);
    for (k, &v) in out.value.iter().enumerate() {
        assert!(
            (v - grid[k]).abs() <= 0.002,
            "grid oracle {grid:?} vs {:?}",
            out.value
        );
        assert!(
            (v - descent[k]).abs() <= 1e-4,
            "descent oracle {descent:?} vs {:?}",
            out.value
        );
        assert!((v - 1.0).abs() < 1e-8);
    }
}

proptest! {
    #[test]
    fn converged_roots_have_small_residual(x0 in -1e3f64..1e3) {
        let out = newton_root(p, dp, x0, 1e-9, 200);
        if out.converged() {
            prop_assert!(out.residual <= 1e-9);
            prop_assert!(p(out.value).abs() <= 1e-9);
        } else {
            prop_assert_eq!(out.status, NewtonStatus::DerivativeVanished);
        }
    }

    #[test]
    fn positive_definite_quadratics_take_one_step(
        a in 0.1f64..10.0,
        b in 0.1f64..10.0,
        c in -0.9f64..0.9,
        x0 in prop::array::uniform2(-50.0f64..50.0),
        center in prop::array::uniform2(-5.0f64..5.0),
    ) {
        // f = ½ (x-m)ᵀ H (x-m) with H = [[a, c√(ab)], [c√(ab), b]]
        let off = c * (a * b).sqrt();
        let grad = move |x: &[f64]| {
            let (u, v) = (x[0] - center[0], x[1] - center[1]);
            vec![a * u + off * v, off * u + b * v]
        };
        let hess = move |_: &[f64]| vec![vec![a, off], vec![off, b]];
        let out = newton_opt_nd(grad, hess, &x0, 1e-6, 10);
        prop_assert!(out.converged());
        prop_assert!(out.iterations <= 1);
        prop_assert!((out.value[0] - center[0]).abs() < 1e-10 * (1.0 + x0[0].abs()));
        prop_assert!((out.value[1] - center[1]).abs() < 1e-10 * (1.0 + x0[1].abs()));
    }
}
