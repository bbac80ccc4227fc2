//! Box-bounded minimization problems.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rng::RngStream;

pub type Objective = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;
pub type Gradient = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// The feasible box `lower[k] <= x[k] <= upper[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("dimension must be at least 1".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::InvalidSpace(format!(
                "{} lower bounds but {} upper bounds",
                lower.len(),
                upper.len()
            )));
        }
        for (k, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidSpace(format!(
                    "dimension {k}: need finite lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval `[lower, upper]` in every dimension.
    pub fn uniform(dimension: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dimension], vec![upper; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn widths(&self) -> impl Iterator<Item = f64> + '_ {
        self.lower.iter().zip(&self.upper).map(|(lo, hi)| hi - lo)
    }

    pub fn mean_width(&self) -> f64 {
        self.widths().sum::<f64>() / self.dimension() as f64
    }

    pub fn contains(&self, position: &[f64]) -> bool {
        position.len() == self.dimension()
            && position
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (lo, hi))| *lo <= *x && *x <= *hi)
    }

    /// Clamps every coordinate into its interval, in place.
    pub fn clamp(&self, position: &mut [f64]) {
        debug_assert_eq!(position.len(), self.dimension());
        for (x, (lo, hi)) in position.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *x = x.clamp(*lo, *hi);
        }
    }

    /// Maps fractions `r_k` in `[0, 1]` to `L_k + r_k (U_k - L_k)`.
    pub fn point_at(&self, fractions: &[f64]) -> Vec<f64> {
        debug_assert_eq!(fractions.len(), self.dimension());
        fractions
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(r, (lo, hi))| lo + r * (hi - lo))
            .collect()
    }

    /// Uniform position in the box; consumes exactly `dimension` uniform draws.
    pub fn random_position(&self, rng: &mut RngStream) -> Vec<f64> {
        let fractions: Vec<f64> = (0..self.dimension()).map(|_| rng.uniform()).collect();
        self.point_at(&fractions)
    }
}

/// Free-function form of [`SearchSpace::clamp`] that returns a new vector.
pub fn clamp_to_bounds(position: &[f64], space: &SearchSpace) -> Vec<f64> {
    let mut out = position.to_vec();
    space.clamp(&mut out);
    out
}

pub fn random_position(space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
    space.random_position(rng)
}

/// A minimization problem over a box.
#[derive(Clone)]
pub struct Problem {
    name: String,
    space: SearchSpace,
    objective: Objective,
    gradient: Option<Gradient>,
    known_optimum: Option<(Vec<f64>, f64)>,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("space", &self.space)
            .field("has_gradient", &self.gradient.is_some())
            .field("known_optimum", &self.known_optimum)
            .finish()
    }
}

impl Problem {
    pub fn new<F>(name: impl Into<String>, space: SearchSpace, objective: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            space,
            objective: Arc::new(objective),
            gradient: None,
            known_optimum: None,
        }
    }

    pub fn with_gradient<G>(mut self, gradient: G) -> Self
    where
        G: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        self.gradient = Some(Arc::new(gradient));
        self
    }

    pub fn with_known_optimum(mut self, position: Vec<f64>, fitness: f64) -> Self {
        self.known_optimum = Some((position, fitness));
        self
    }

    /// Negates the objective so a maximization target can be minimized.
    pub fn negated(self) -> Self {
        let inner = self.objective.clone();
        let grad = self.gradient.clone();
        Self {
            name: format!("neg_{}", self.name),
            space: self.space,
            objective: Arc::new(move |x| -inner(x)),
            gradient: grad
                .map(|g| -> Gradient { Arc::new(move |x| g(x).into_iter().map(|v| -v).collect()) }),
            known_optimum: self.known_optimum.map(|(p, v)| (p, -v)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dimension(&self) -> usize {
        self.space.dimension()
    }

    pub fn known_optimum(&self) -> Option<(&[f64], f64)> {
        self.known_optimum.as_ref().map(|(p, v)| (p.as_slice(), *v))
    }

    pub fn gradient(&self, position: &[f64]) -> Option<Vec<f64>> {
        self.gradient.as_ref().map(|g| g(position))
    }

    pub fn has_gradient(&self) -> bool {
        self.gradient.is_some()
    }

    /// Raw objective value, without counting or finiteness checks.
    pub fn value(&self, position: &[f64]) -> f64 {
        (self.objective)(position)
    }

    /// Evaluates the objective and bumps `evaluations`.
    pub fn evaluate(&self, position: &[f64], evaluations: &mut u64) -> Result<f64> {
        *evaluations += 1;
        let value = (self.objective)(position);
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::NonFinite {
                position: position.to_vec(),
                value,
            })
        }
    }
}
