//! Artificial bee colony: employed, onlooker and scout phases.

use crate::error::{ensure, Result};
use crate::population::Population;
use crate::problem::{Problem, SearchSpace};
use crate::rng::RngStream;

use super::SwarmAlgorithm;

#[derive(Debug, Clone, PartialEq)]
pub struct AbcConfig {
    /// Number of food sources (and of employed and onlooker bees).
    pub n: usize,
    /// Failed improvement attempts tolerated before a source is abandoned.
    /// `None` means `n * D`.
    pub limit: Option<usize>,
}

impl Default for AbcConfig {
    fn default() -> Self {
        Self { n: 25, limit: None }
    }
}

impl AbcConfig {
    pub fn effective_limit(&self, dimension: usize) -> usize {
        self.limit.unwrap_or(self.n * dimension)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AbcState {
    pub trials: usize,
}

impl SwarmAlgorithm for AbcConfig {
    type Aux = AbcState;

    fn name(&self) -> &'static str {
        "abc"
    }

    fn population_size(&self) -> usize {
        self.n
    }

    fn validate(&self, _space: &SearchSpace) -> Result<()> {
        ensure(self.n >= 2, || {
            format!("n must be at least 2, got {}", self.n)
        })?;
        ensure(self.limit != Some(0), || {
            "limit must be at least 1".to_string()
        })
    }

    fn init_aux(&self, _space: &SearchSpace, _position: &[f64], _fitness: f64) -> AbcState {
        AbcState::default()
    }

    fn step(
        &self,
        population: &mut Population<AbcState>,
        problem: &Problem,
        evaluations: &mut u64,
        rng: &mut RngStream,
    ) -> Result<()> {
        abc_step(population, problem, self, evaluations, rng)
    }
}

/// `v_k = x_i,k + φ_k (x_i,k - x_j,k)`.
pub fn abc_candidate(xi: &[f64], xj: &[f64], phi: &[f64]) -> Vec<f64> {
    xi.iter()
        .zip(xj)
        .zip(phi)
        .map(|((a, b), p)| a + p * (a - b))
        .collect()
}

/// Positive roulette weight for a minimization fitness.
pub fn roulette_weight(fitness: f64) -> f64 {
    if fitness >= 0.0 {
        1.0 / (1.0 + fitness)
    } else {
        1.0 + fitness.abs()
    }
}

/// Index selected by cumulative weight for a uniform draw `u` in `[0, 1)`.
pub fn roulette_pick(weights: &[f64], u: f64) -> usize {
    let total: f64 = weights.iter().sum();
    let target = u * total;
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if target < acc {
            return i;
        }
    }
    weights.len() - 1
}

/// Tries to improve source `i` with a random partner. Draw order: partner
/// index, then one `φ` per coordinate.
fn forage(
    population: &mut Population<AbcState>,
    i: usize,
    problem: &Problem,
    evaluations: &mut u64,
    rng: &mut RngStream,
) -> Result<()> {
    let n = population.len();
    let mut j = rng.index(n - 1);
    if j >= i {
        j += 1;
    }
    let phi: Vec<f64> = (0..problem.dimension())
        .map(|_| rng.uniform_in(-1.0, 1.0))
        .collect();
    let mut candidate = abc_candidate(
        &population.agents[i].position,
        &population.agents[j].position,
        &phi,
    );
    problem.space().clamp(&mut candidate);
    let fitness = problem.evaluate(&candidate, evaluations)?;
    let source = &mut population.agents[i];
    if fitness <= source.fitness {
        source.position = candidate;
        source.fitness = fitness;
        source.aux.trials = 0;
    } else {
        source.aux.trials += 1;
    }
    Ok(())
}

/// One ABC cycle.
///
/// 1. Employed phase: every source `i` in order forages once.
/// 2. Onlooker phase: roulette weights are frozen from the fitnesses at the
///    start of the phase; `n` onlookers each draw one uniform to pick a
///    source, which then forages.
/// 3. Scout phase: each source with `trials > limit`, in index order, is
///    replaced by a uniform random position and re-evaluated.
pub fn abc_step(
    population: &mut Population<AbcState>,
    problem: &Problem,
    config: &AbcConfig,
    evaluations: &mut u64,
    rng: &mut RngStream,
) -> Result<()> {
    let n = population.len();
    for i in 0..n {
        forage(population, i, problem, evaluations, rng)?;
    }

    let weights: Vec<f64> = population
        .agents
        .iter()
        .map(|a| roulette_weight(a.fitness))
        .collect();
    for _ in 0..n {
        let i = roulette_pick(&weights, rng.uniform());
        forage(population, i, problem, evaluations, rng)?;
    }

    // the incumbent must see the best source before scouts can discard it
    population.update_best();

    let limit = config.effective_limit(problem.dimension());
    for agent in population.agents.iter_mut() {
        if agent.aux.trials > limit {
            agent.position = problem.space().random_position(rng);
            agent.fitness = problem.evaluate(&agent.position, evaluations)?;
            agent.aux.trials = 0;
        }
    }
    Ok(())
}
