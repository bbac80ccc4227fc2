//! Plain Newton iterations: scalar root finding, 1-D and D-dimensional
//! stationary-point search.
//!
//! Iteration counts start at 1 for the first update. A start point that
//! already satisfies the tolerance converges with 0 iterations.

use nalgebra::{DMatrix, DVector};

/// Derivative (or Hessian singular value) magnitude treated as zero.
pub const SINGULARITY_THRESHOLD: f64 = 1e-12;
/// Hessian condition numbers above this are treated as singular.
pub const MAX_CONDITION: f64 = 1e12;
/// Iterates with `|x| > DIVERGENCE_LIMIT` stop the run as diverged.
pub const DIVERGENCE_LIMIT: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NewtonStatus {
    Converged,
    DerivativeVanished,
    MaxIterations,
    Diverged,
}

impl std::fmt::Display for NewtonStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NewtonStatus::Converged => "converged",
            NewtonStatus::DerivativeVanished => "derivative_vanished",
            NewtonStatus::MaxIterations => "max_iterations",
            NewtonStatus::Diverged => "diverged",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonOutcome<T> {
    pub status: NewtonStatus,
    pub value: T,
    pub iterations: usize,
    /// `|p(x)|` for root finding, `|f'(x)|` or `||grad f(x)||` for optimization.
    pub residual: f64,
}

impl<T> NewtonOutcome<T> {
    pub fn converged(&self) -> bool {
        self.status == NewtonStatus::Converged
    }
}

fn check_args(tol: f64, max_iter: usize) {
    assert!(tol > 0.0, "tolerance must be positive");
    assert!(max_iter >= 1, "max_iter must be at least 1");
}

/// Scalar iteration `x <- x - g(x) / dg(x)` until `|g(x)| <= tol`.
fn scalar_newton<G, DG>(g: G, dg: DG, x0: f64, tol: f64, max_iter: usize) -> NewtonOutcome<f64>
where
    G: Fn(f64) -> f64,
    DG: Fn(f64) -> f64,
{
    check_args(tol, max_iter);
    let mut x = x0;
    let mut residual = g(x).abs();
    let outcome = |status, value, iterations, residual| NewtonOutcome {
        status,
        value,
        iterations,
        residual,
    };
    if residual <= tol {
        return outcome(NewtonStatus::Converged, x, 0, residual);
    }
    for it in 1..=max_iter {
        let slope = dg(x);
        if !(slope.abs() >= SINGULARITY_THRESHOLD) {
            return outcome(NewtonStatus::DerivativeVanished, x, it - 1, residual);
        }
        x -= g(x) / slope;
        residual = g(x).abs();
        if !x.is_finite() || x.abs() > DIVERGENCE_LIMIT {
            return outcome(NewtonStatus::Diverged, x, it, residual);
        }
        if residual <= tol {
            return outcome(NewtonStatus::Converged, x, it, residual);
        }
    }
    outcome(NewtonStatus::MaxIterations, x, max_iter, residual)
}

/// Newton's root finder for `p(x) = 0`.
pub fn newton_root<P, DP>(p: P, dp: DP, x0: f64, tol: f64, max_iter: usize) -> NewtonOutcome<f64>
where
    P: Fn(f64) -> f64,
    DP: Fn(f64) -> f64,
{
    scalar_newton(p, dp, x0, tol, max_iter)
}

/// Stationary point of `f` from its first and second derivatives.
pub fn newton_opt_1d<DF, D2F>(
    df: DF,
    d2f: D2F,
    x0: f64,
    tol: f64,
    max_iter: usize,
) -> NewtonOutcome<f64>
where
    DF: Fn(f64) -> f64,
    D2F: Fn(f64) -> f64,
{
    scalar_newton(df, d2f, x0, tol, max_iter)
}

/// D-dimensional Newton: solves `H s = grad f` and steps `x <- x - s`.
///
/// A Hessian whose condition number exceeds [`MAX_CONDITION`] (or whose
/// largest singular value is below [`SINGULARITY_THRESHOLD`]) stops the run
/// with [`NewtonStatus::DerivativeVanished`].
pub fn newton_opt_nd<G, H>(
    grad: G,
    hessian: H,
    x0: &[f64],
    tol: f64,
    max_iter: usize,
) -> NewtonOutcome<Vec<f64>>
where
    G: Fn(&[f64]) -> Vec<f64>,
    H: Fn(&[f64]) -> Vec<Vec<f64>>,
{
    check_args(tol, max_iter);
    let d = x0.len();
    let mut x = x0.to_vec();
    let norm = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
    let mut g = grad(&x);
    let mut residual = norm(&g);
    let outcome = |status, value, iterations, residual| NewtonOutcome {
        status,
        value,
        iterations,
        residual,
    };
    if residual <= tol {
        return outcome(NewtonStatus::Converged, x, 0, residual);
    }
    for it in 1..=max_iter {
        let rows = hessian(&x);
        assert_eq!(rows.len(), d, "hessian must be D x D");
        let h = DMatrix::from_fn(d, d, |i, j| rows[i][j]);
        let Some(step) = solve_well_conditioned(h, DVector::from_column_slice(&g)) else {
            return outcome(NewtonStatus::DerivativeVanished, x, it - 1, residual);
        };
        for (xi, si) in x.iter_mut().zip(step.iter()) {
            *xi -= si;
        }
        g = grad(&x);
        residual = norm(&g);
        if x.iter()
            .any(|v| !v.is_finite() || v.abs() > DIVERGENCE_LIMIT)
        {
            return outcome(NewtonStatus::Diverged, x, it, residual);
        }
        if residual <= tol {
            return outcome(NewtonStatus::Converged, x, it, residual);
        }
    }
    outcome(NewtonStatus::MaxIterations, x, max_iter, residual)
}

fn solve_well_conditioned(h: DMatrix<f64>, rhs: DVector<f64>) -> Option<DVector<f64>> {
    if h.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let sv = h.clone().singular_values();
    let smax = sv.max();
    let smin = sv.min();
    if smax < SINGULARITY_THRESHOLD || smin <= 0.0 || smax / smin > MAX_CONDITION {
        return None;
    }
    h.lu().solve(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn p(x: f64) -> f64 {
        x * x + 9.0 * x - 10.0
    }
    fn dp(x: f64) -> f64 {
        2.0 * x + 9.0
    }

    #[test]
    fn quadratic_roots_from_worked_starts() {
        let a = newton_root(p, dp, 10.0, 1e-9, 100);
        assert!(a.converged());
        assert_abs_diff_eq!(a.value, 1.0, epsilon = 1e-9);
        assert!(a.iterations <= 5);

        let b = newton_root(p, dp, -5.0, 1e-9, 100);
        assert!(b.converged());
        assert_abs_diff_eq!(b.value, -10.0, epsilon = 1e-9);
        assert!((5..=9).contains(&b.iterations), "{}", b.iterations);

        let c = newton_root(p, dp, 100.0, 1e-9, 100);
        assert!(c.converged());
        assert_abs_diff_eq!(c.value, 1.0, epsilon = 1e-9);
        assert!((6..=10).contains(&c.iterations), "{}", c.iterations);
    }

    #[test]
    fn zero_slope_start_fails() {
        let out = newton_root(p, dp, -4.5, 1e-9, 100);
        assert_eq!(out.status, NewtonStatus::DerivativeVanished);
        assert_eq!(out.iterations, 0);
        assert!(dp(out.value).abs() < SINGULARITY_THRESHOLD);
    }

    #[test]
    fn start_at_root_takes_zero_iterations() {
        let out = newton_root(p, dp, 1.0, 1e-9, 10);
        assert!(out.converged());
        assert_eq!(out.iterations, 0);
    }

    #[test]
    fn budget_exhaustion_and_divergence() {
        // x^2 + 1 has no real root; Newton wanders.
        let out = newton_root(|x| x * x + 1.0, |x| 2.0 * x, 0.5, 1e-12, 3);
        assert_eq!(out.status, NewtonStatus::MaxIterations);
        assert_eq!(out.iterations, 3);

        // Tiny but nonzero slope throws the iterate past the divergence limit.
        let out = newton_root(|_| 1.0, |_| 2e-12, 0.0, 1e-9, 5);
        assert_eq!(out.status, NewtonStatus::Diverged);
    }

    #[test]
    fn one_d_quadratic_is_one_step() {
        let out = newton_opt_1d(|x| 2.0 * x, |_| 2.0, 7.0, 1e-12, 10);
        assert!(out.converged());
        assert_eq!(out.iterations, 1);
        assert_eq!(out.value, 0.0);
    }

    #[test]
    fn quartic_iterates_shrink_by_two_thirds() {
        // f = x^4: x - 4x^3 / 12x^2 = (2/3) x
        let mut expected = 1.0;
        for n in 1..=5 {
            expected *= 2.0 / 3.0;
            let out = newton_opt_1d(|x| 4.0 * x.powi(3), |x| 12.0 * x * x, 1.0, 1e-300, n);
            assert_eq!(out.status, NewtonStatus::MaxIterations);
            assert_abs_diff_eq!(out.value, expected, epsilon = 1e-15);
        }
        let out = newton_opt_1d(|x| 4.0 * x.powi(3), |x| 12.0 * x * x, 1.0, 1e-8, 200);
        assert!(out.converged());
        assert!(out.value.abs() < 2e-3);
    }

    #[test]
    fn singular_second_derivative() {
        let out = newton_opt_1d(|x| 3.0 * x * x - 1.0, |x| 6.0 * x, 0.0, 1e-9, 10);
        assert_eq!(out.status, NewtonStatus::DerivativeVanished);
    }

    #[test]
    fn nd_quadratics_one_step() {
        let out = newton_opt_nd(
            |x| x.iter().map(|v| 2.0 * v).collect(),
            |_| {
                vec![
                    vec![2.0, 0.0, 0.0],
                    vec![0.0, 2.0, 0.0],
                    vec![0.0, 0.0, 2.0],
                ]
            },
            &[1.0, 2.0, 3.0],
            1e-10,
            10,
        );
        assert!(out.converged());
        assert_eq!(out.iterations, 1);
        assert!(out.value.iter().all(|v| v.abs() < 1e-12));

        let out = newton_opt_nd(
            |x| vec![2.0 * x[0], 20.0 * x[1]],
            |_| vec![vec![2.0, 0.0], vec![0.0, 20.0]],
            &[1.0, 1.0],
            1e-10,
            10,
        );
        assert!(out.converged());
        assert_eq!(out.iterations, 1);
    }

    #[test]
    fn nd_singular_hessian() {
        let out = newton_opt_nd(
            |x| vec![x[0] + x[1], x[0] + x[1]],
            |_| vec![vec![1.0, 1.0], vec![1.0, 1.0]],
            &[1.0, 0.0],
            1e-10,
            10,
        );
        assert_eq!(out.status, NewtonStatus::DerivativeVanished);
        assert_eq!(out.iterations, 0);
    }
}
