use crate::error::{Error, Result};

/// Stopping bounds for a run. At least one must be set.
///
/// Bounds are checked between iterations, so a run may overshoot
/// `max_evaluations` by at most one iteration's worth of evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub max_iterations: Option<usize>,
    pub max_evaluations: Option<u64>,
}

impl Budget {
    pub fn iterations(n: usize) -> Self {
        Self {
            max_iterations: Some(n),
            max_evaluations: None,
        }
    }

    pub fn evaluations(n: u64) -> Self {
        Self {
            max_iterations: None,
            max_evaluations: Some(n),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iterations.is_none() && self.max_evaluations.is_none() {
            return Err(Error::InvalidConfig(
                "budget must set max_iterations or max_evaluations".into(),
            ));
        }
        Ok(())
    }

    /// True once either bound is reached.
    pub fn exhausted(&self, iterations: usize, evaluations: u64) -> bool {
        self.max_iterations.is_some_and(|m| iterations >= m)
            || self.max_evaluations.is_some_and(|m| evaluations >= m)
    }
}

/// Outcome of one seeded run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Incumbent best fitness after each iteration.
    pub trace: Vec<f64>,
    pub evaluations: u64,
    pub seed: u64,
    pub wall_time: f64,
}

impl RunResult {
    /// Equality on everything except wall time, bitwise on floats.
    pub fn same_outcome(&self, other: &RunResult) -> bool {
        fn bits(xs: &[f64]) -> Vec<u64> {
            xs.iter().map(|x| x.to_bits()).collect()
        }
        bits(&self.best_position) == bits(&other.best_position)
            && self.best_fitness.to_bits() == other.best_fitness.to_bits()
            && bits(&self.trace) == bits(&other.trace)
            && self.evaluations == other.evaluations
            && self.seed == other.seed
    }

    pub fn iterations(&self) -> usize {
        self.trace.len()
    }

    pub fn trace_is_monotone(&self) -> bool {
        self.trace.windows(2).all(|w| w[1] <= w[0])
    }
}
