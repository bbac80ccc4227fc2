//! Newton's method on `p(x) = x² + 9x - 10` (roots 1 and -10) from four
//! starting points, one of them at the vertex where `p'` vanishes.

use std::fmt::Write;

use swarmkit_core::classical::{newton_root, NewtonOutcome};

pub const STARTS: [f64; 4] = [10.0, 100.0, -5.0, -4.5];
pub const TOLERANCE: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 100;

pub fn p(x: f64) -> f64 {
    x * x + 9.0 * x - 10.0
}

pub fn dp(x: f64) -> f64 {
    2.0 * x + 9.0
}

pub fn newton_demo_rows() -> Vec<(f64, NewtonOutcome<f64>)> {
    STARTS
        .iter()
        .map(|&x0| (x0, newton_root(p, dp, x0, TOLERANCE, MAX_ITERATIONS)))
        .collect()
}

pub fn newton_demo_table() -> String {
    let mut out = String::new();
    writeln!(out, "p(x) = x^2 + 9x - 10, tol = {TOLERANCE:e}").unwrap();
    writeln!(
        out,
        "{:>8}  {:<20}  {:>10}  {:>22}  {:>10}",
        "x0", "outcome", "iterations", "x", "|p(x)|"
    )
    .unwrap();
    for (x0, o) in newton_demo_rows() {
        writeln!(
            out,
            "{x0:>8}  {:<20}  {:>10}  {:>22.15}  {:>10.3e}",
            o.status.to_string(),
            o.iterations,
            o.value,
            o.residual
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use swarmkit_core::classical::NewtonStatus;

    #[test]
    fn table_lists_all_four_starts() {
        let t = newton_demo_table();
        assert_eq!(t.lines().count(), 6);
        assert_eq!(t.matches("converged").count(), 3);
        assert!(t.contains("derivative_vanished"));
        let rows = newton_demo_rows();
        assert_eq!(rows[3].1.status, NewtonStatus::DerivativeVanished);
    }
}
