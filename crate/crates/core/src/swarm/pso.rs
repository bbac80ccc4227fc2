//! Particle swarm optimization with unit inertia and no velocity clamp.

use crate::error::{ensure, Result};
use crate::population::Population;
use crate::problem::{Problem, SearchSpace};
use crate::rng::RngStream;

use super::SwarmAlgorithm;

#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub n: usize,
    /// Weight on the pull towards the swarm best g*.
    pub alpha: f64,
    /// Weight on the pull towards the particle's own best.
    pub beta: f64,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            n: 30,
            alpha: 1.0,
            beta: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PsoState {
    pub velocity: Vec<f64>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
}

impl SwarmAlgorithm for PsoConfig {
    type Aux = PsoState;

    fn name(&self) -> &'static str {
        "pso"
    }

    fn population_size(&self) -> usize {
        self.n
    }

    fn validate(&self, _space: &SearchSpace) -> Result<()> {
        ensure(self.n >= 2, || {
            format!("n must be at least 2, got {}", self.n)
        })?;
        ensure(self.alpha >= 0.0, || {
            format!("alpha must be >= 0, got {}", self.alpha)
        })?;
        ensure(self.beta >= 0.0, || {
            format!("beta must be >= 0, got {}", self.beta)
        })
    }

    fn init_aux(&self, space: &SearchSpace, position: &[f64], fitness: f64) -> PsoState {
        PsoState {
            velocity: vec![0.0; space.dimension()],
            best_position: position.to_vec(),
            best_fitness: fitness,
        }
    }

    fn step(
        &self,
        population: &mut Population<PsoState>,
        problem: &Problem,
        evaluations: &mut u64,
        rng: &mut RngStream,
    ) -> Result<()> {
        pso_step(population, problem, self, evaluations, rng)
    }
}

/// One synchronous sweep over the particles, agent 0 first.
///
/// Per particle and coordinate, draws `ε1` then `ε2`, applies
/// `v += α ε1 (g* - x) + β ε2 (x* - x)` and `x = clamp(x + v)`. The particle
/// is evaluated right away and may immediately become the new g* for the
/// particles after it.
pub fn pso_step(
    population: &mut Population<PsoState>,
    problem: &Problem,
    config: &PsoConfig,
    evaluations: &mut u64,
    rng: &mut RngStream,
) -> Result<()> {
    let space = problem.space();
    let mut global = population.best_position().to_vec();
    for i in 0..population.len() {
        let agent = &mut population.agents[i];
        let state = &mut agent.aux;
        for k in 0..agent.position.len() {
            let e1 = rng.uniform();
            let e2 = rng.uniform();
            let x = agent.position[k];
            state.velocity[k] += config.alpha * e1 * (global[k] - x)
                + config.beta * e2 * (state.best_position[k] - x);
            agent.position[k] = x + state.velocity[k];
        }
        space.clamp(&mut agent.position);
        agent.fitness = problem.evaluate(&agent.position, evaluations)?;
        if agent.fitness < state.best_fitness {
            state.best_fitness = agent.fitness;
            state.best_position.clone_from(&agent.position);
        }
        let (pos, fit) = (agent.position.clone(), agent.fitness);
        if population.offer(&pos, fit) {
            global = pos;
        }
    }
    Ok(())
}
