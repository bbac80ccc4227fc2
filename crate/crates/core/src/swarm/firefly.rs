//! Firefly algorithm with distance-attenuated attraction.

use crate::error::{ensure, Result};
use crate::population::Population;
use crate::problem::{Problem, SearchSpace};
use crate::rng::RngStream;

use super::SwarmAlgorithm;

#[derive(Debug, Clone, PartialEq)]
pub struct FireflyConfig {
    pub n: usize,
    /// Attractiveness at zero distance.
    pub beta0: f64,
    /// Light absorption. `None` derives it from the box via [`default_gamma`].
    pub gamma: Option<f64>,
    /// Initial randomness strength.
    pub alpha0: f64,
    /// Per-generation reduction factor for the randomness strength.
    pub delta: f64,
}

impl Default for FireflyConfig {
    fn default() -> Self {
        Self {
            n: 25,
            beta0: 1.0,
            gamma: None,
            alpha0: 0.2,
            delta: 0.97,
        }
    }
}

impl FireflyConfig {
    pub fn effective_gamma(&self, space: &SearchSpace) -> f64 {
        self.gamma.unwrap_or_else(|| default_gamma(space))
    }
}

/// `γ = 1 / L²` with `L` the mean box width, or 1 for a degenerate width.
pub fn default_gamma(space: &SearchSpace) -> f64 {
    let l = space.mean_width();
    if l.is_finite() && l > 0.0 {
        1.0 / (l * l)
    } else {
        1.0
    }
}

/// `α_t = α0 δ^t`.
pub fn firefly_alpha(alpha0: f64, delta: f64, t: usize) -> f64 {
    alpha0 * delta.powi(t as i32)
}

/// `x_i + β0 exp(-γ r²) (x_j - x_i) + α ε` (unclamped).
pub fn firefly_move(
    xi: &[f64],
    xj: &[f64],
    beta0: f64,
    gamma: f64,
    alpha: f64,
    eps: &[f64],
) -> Vec<f64> {
    let r2: f64 = xi.iter().zip(xj).map(|(a, b)| (a - b).powi(2)).sum();
    let beta = beta0 * (-gamma * r2).exp();
    xi.iter()
        .zip(xj)
        .zip(eps)
        .map(|((a, b), e)| a + beta * (b - a) + alpha * e)
        .collect()
}

impl SwarmAlgorithm for FireflyConfig {
    type Aux = ();

    fn name(&self) -> &'static str {
        "fa"
    }

    fn population_size(&self) -> usize {
        self.n
    }

    fn validate(&self, _space: &SearchSpace) -> Result<()> {
        ensure(self.n >= 2, || {
            format!("n must be at least 2, got {}", self.n)
        })?;
        ensure(self.beta0 > 0.0, || {
            format!("beta0 must be > 0, got {}", self.beta0)
        })?;
        if let Some(g) = self.gamma {
            ensure(g >= 0.0, || format!("gamma must be >= 0, got {g}"))?;
        }
        ensure(self.alpha0 >= 0.0, || {
            format!("alpha0 must be >= 0, got {}", self.alpha0)
        })?;
        ensure(self.delta > 0.0 && self.delta < 1.0, || {
            format!("delta must be in (0,1), got {}", self.delta)
        })
    }

    fn init_aux(&self, _space: &SearchSpace, _position: &[f64], _fitness: f64) {}

    fn step(
        &self,
        population: &mut Population<()>,
        problem: &Problem,
        evaluations: &mut u64,
        rng: &mut RngStream,
    ) -> Result<()> {
        firefly_step(
            population,
            problem,
            self,
            population.generation,
            evaluations,
            rng,
        )
    }
}

/// Full pairwise sweep for generation `t`.
///
/// For each `i`, then each `j != i` in index order: if `j` is strictly
/// brighter (lower fitness) than the current `i`, draw one normal per
/// coordinate, move `i` towards `j`, clamp, evaluate, and keep the move only
/// if it improves `i`.
pub fn firefly_step(
    population: &mut Population<()>,
    problem: &Problem,
    config: &FireflyConfig,
    t: usize,
    evaluations: &mut u64,
    rng: &mut RngStream,
) -> Result<()> {
    let space = problem.space();
    let gamma = config.effective_gamma(space);
    let alpha = firefly_alpha(config.alpha0, config.delta, t);
    let n = population.len();
    let d = problem.dimension();
    for i in 0..n {
        for j in 0..n {
            if j == i || population.agents[j].fitness >= population.agents[i].fitness {
                continue;
            }
            let eps: Vec<f64> = (0..d).map(|_| rng.normal()).collect();
            let mut moved = firefly_move(
                &population.agents[i].position,
                &population.agents[j].position,
                config.beta0,
                gamma,
                alpha,
                &eps,
            );
            space.clamp(&mut moved);
            let fitness = problem.evaluate(&moved, evaluations)?;
            let fly = &mut population.agents[i];
            if fitness < fly.fitness {
                fly.position = moved;
                fly.fitness = fitness;
            }
        }
    }
    population.update_best();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks;
    use crate::population::Agent;

    #[test]
    fn alpha_schedule() {
        assert!((firefly_alpha(0.5, 0.9, 2) - 0.405).abs() < 1e-12);
        assert_eq!(firefly_alpha(0.5, 0.9, 0), 0.5);
    }

    #[test]
    fn gamma_from_box() {
        let unit = SearchSpace::uniform(3, 0.0, 1.0).unwrap();
        assert_eq!(default_gamma(&unit), 1.0);
        let ten = SearchSpace::uniform(2, -5.0, 5.0).unwrap();
        assert!((default_gamma(&ten) - 0.01).abs() < 1e-15);
        let mixed = SearchSpace::new(vec![0.0, 0.0], vec![10.0, 20.0]).unwrap();
        assert!((default_gamma(&mixed) - 1.0 / 225.0).abs() < 1e-15);
    }

    #[test]
    fn zero_distance_full_attraction_jumps_to_target() {
        let eps = [0.3, -0.7];
        assert_eq!(
            firefly_move(&[1.0, 2.0], &[1.0, 2.0], 1.0, 5.0, 0.0, &eps),
            vec![1.0, 2.0]
        );
        // γ = 0 means r plays no role, so β0 = 1 lands exactly on x_j
        assert_eq!(
            firefly_move(&[1.0, 2.0], &[4.0, -1.0], 1.0, 0.0, 0.0, &eps),
            vec![4.0, -1.0]
        );
    }

    #[test]
    fn equal_brightness_means_no_movement() {
        let problem = benchmarks::lookup("sphere", 2).unwrap();
        let mut pop = Population::new(vec![
            Agent::new(vec![1.0, 1.0], 2.0, ()),
            Agent::new(vec![1.0, 1.0], 2.0, ()),
        ]);
        let cfg = FireflyConfig {
            alpha0: 0.0,
            ..Default::default()
        };
        let mut evals = 0;
        let mut rng = RngStream::new(3);
        firefly_step(&mut pop, &problem, &cfg, 0, &mut evals, &mut rng).unwrap();
        assert_eq!(evals, 0);
        assert_eq!(pop.agents[0].position, vec![1.0, 1.0]);
        assert_eq!(pop.agents[1].position, vec![1.0, 1.0]);
    }

    #[test]
    fn dense_fog_freezes_the_swarm() {
        let problem = benchmarks::lookup("sphere", 3).unwrap();
        let cfg = FireflyConfig {
            gamma: Some(1e9),
            alpha0: 0.0,
            ..Default::default()
        };
        let (_, start) =
            super::super::run_with_population(&cfg, &problem, crate::Budget::iterations(0), 17)
                .unwrap();
        let (_, end) =
            super::super::run_with_population(&cfg, &problem, crate::Budget::iterations(20), 17)
                .unwrap();
        for (a, b) in start.agents.iter().zip(&end.agents) {
            let shift: f64 = a
                .position
                .iter()
                .zip(&b.position)
                .map(|(p, q)| (p - q).powi(2))
                .sum::<f64>()
                .sqrt();
            assert!(shift < 1e-12, "moved {shift}");
        }
    }

    #[test]
    fn config_checks() {
        let s = SearchSpace::uniform(1, 0.0, 1.0).unwrap();
        assert!(FireflyConfig {
            delta: 1.0,
            ..Default::default()
        }
        .validate(&s)
        .is_err());
        assert!(FireflyConfig {
            gamma: Some(-1.0),
            ..Default::default()
        }
        .validate(&s)
        .is_err());
        assert!(FireflyConfig {
            beta0: 0.0,
            ..Default::default()
        }
        .validate(&s)
        .is_err());
        assert!(FireflyConfig::default().validate(&s).is_ok());
    }
}
