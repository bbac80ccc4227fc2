//! Continuous population-based optimizers sharing one step-function shape.
//!
//! Each algorithm supplies a config type implementing [`SwarmAlgorithm`]:
//! a way to seed per-agent auxiliary state and a `step` that advances the
//! population by one generation. [`run`] owns everything else: uniform
//! initialization, budget checks, incumbent recording and timing.
//!
//! Random draws happen in a fixed order documented on each step function,
//! so a seed fully determines a run.

mod abc;
mod bat;
mod cuckoo;
mod firefly;
mod pso;

pub use abc::{abc_candidate, abc_step, roulette_pick, roulette_weight, AbcConfig, AbcState};
pub use bat::{bat_frequency, bat_step, emission_rate, BatConfig, BatSign, BatState};
pub use cuckoo::{cuckoo_local_move, cuckoo_step, CuckooConfig};
pub use firefly::{default_gamma, firefly_alpha, firefly_move, firefly_step, FireflyConfig};
pub use pso::{pso_step, PsoConfig, PsoState};

use std::time::Instant;

use crate::error::Result;
use crate::population::{Agent, Population};
use crate::problem::{Problem, SearchSpace};
use crate::result::{Budget, RunResult};
use crate::rng::RngStream;

/// A population-step optimizer.
pub trait SwarmAlgorithm {
    type Aux: Clone + std::fmt::Debug;

    fn name(&self) -> &'static str;

    fn population_size(&self) -> usize;

    /// Range checks on the configuration for a given search space.
    fn validate(&self, space: &SearchSpace) -> Result<()>;

    fn init_aux(&self, space: &SearchSpace, position: &[f64], fitness: f64) -> Self::Aux;

    /// Advances `population` by one generation. `population.generation`
    /// holds the number of completed generations when this is called.
    fn step(
        &self,
        population: &mut Population<Self::Aux>,
        problem: &Problem,
        evaluations: &mut u64,
        rng: &mut RngStream,
    ) -> Result<()>;
}

/// Draws `n` uniform positions (agent 0 first) and evaluates each in turn.
pub fn initialize<A: SwarmAlgorithm>(
    algorithm: &A,
    problem: &Problem,
    evaluations: &mut u64,
    rng: &mut RngStream,
) -> Result<Population<A::Aux>> {
    let space = problem.space();
    let mut agents = Vec::with_capacity(algorithm.population_size());
    for _ in 0..algorithm.population_size() {
        let position = space.random_position(rng);
        let fitness = problem.evaluate(&position, evaluations)?;
        let aux = algorithm.init_aux(space, &position, fitness);
        agents.push(Agent::new(position, fitness, aux));
    }
    Ok(Population::new(agents))
}

/// Runs `algorithm` until the first budget bound is hit.
pub fn run<A: SwarmAlgorithm>(
    algorithm: &A,
    problem: &Problem,
    budget: Budget,
    seed: u64,
) -> Result<RunResult> {
    run_with_population(algorithm, problem, budget, seed).map(|(result, _)| result)
}

/// [`run`], also handing back the final population.
pub fn run_with_population<A: SwarmAlgorithm>(
    algorithm: &A,
    problem: &Problem,
    budget: Budget,
    seed: u64,
) -> Result<(RunResult, Population<A::Aux>)> {
    budget.validate()?;
    algorithm.validate(problem.space())?;
    let started = Instant::now();
    let mut rng = RngStream::new(seed);
    let mut evaluations = 0;
    let mut population = initialize(algorithm, problem, &mut evaluations, &mut rng)?;
    let mut trace = Vec::new();
    while !budget.exhausted(population.generation, evaluations) {
        algorithm.step(&mut population, problem, &mut evaluations, &mut rng)?;
        population.generation += 1;
        population.update_best();
        trace.push(population.best_fitness());
    }
    log::debug!(
        "{} on {}: best {} after {} iterations, {} evaluations",
        algorithm.name(),
        problem.name(),
        population.best_fitness(),
        trace.len(),
        evaluations
    );
    let result = RunResult {
        best_position: population.best_position().to_vec(),
        best_fitness: population.best_fitness(),
        trace,
        evaluations,
        seed,
        wall_time: started.elapsed().as_secs_f64(),
    };
    Ok((result, population))
}

/// Any of the five continuous algorithms, for name-based dispatch.
#[derive(Debug, Clone, PartialEq)]
pub enum SwarmConfig {
    Pso(PsoConfig),
    Abc(AbcConfig),
    Bat(BatConfig),
    Firefly(FireflyConfig),
    Cuckoo(CuckooConfig),
}

impl SwarmConfig {
    pub fn name(&self) -> &'static str {
        match self {
            SwarmConfig::Pso(c) => c.name(),
            SwarmConfig::Abc(c) => c.name(),
            SwarmConfig::Bat(c) => c.name(),
            SwarmConfig::Firefly(c) => c.name(),
            SwarmConfig::Cuckoo(c) => c.name(),
        }
    }

    pub fn validate(&self, space: &SearchSpace) -> Result<()> {
        match self {
            SwarmConfig::Pso(c) => c.validate(space),
            SwarmConfig::Abc(c) => c.validate(space),
            SwarmConfig::Bat(c) => c.validate(space),
            SwarmConfig::Firefly(c) => c.validate(space),
            SwarmConfig::Cuckoo(c) => c.validate(space),
        }
    }

    pub fn run(&self, problem: &Problem, budget: Budget, seed: u64) -> Result<RunResult> {
        match self {
            SwarmConfig::Pso(c) => run(c, problem, budget, seed),
            SwarmConfig::Abc(c) => run(c, problem, budget, seed),
            SwarmConfig::Bat(c) => run(c, problem, budget, seed),
            SwarmConfig::Firefly(c) => run(c, problem, budget, seed),
            SwarmConfig::Cuckoo(c) => run(c, problem, budget, seed),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks;

    fn all_defaults() -> Vec<SwarmConfig> {
        vec![
            SwarmConfig::Pso(PsoConfig::default()),
            SwarmConfig::Abc(AbcConfig::default()),
            SwarmConfig::Bat(BatConfig::default()),
            SwarmConfig::Firefly(FireflyConfig::default()),
            SwarmConfig::Cuckoo(CuckooConfig::default()),
        ]
    }

    #[test]
    fn zero_iterations_reports_initial_best() {
        let problem = benchmarks::lookup("sphere", 3).unwrap();
        for cfg in all_defaults() {
            let r = cfg.run(&problem, Budget::iterations(0), 1).unwrap();
            assert!(r.trace.is_empty());
            assert!(r.best_fitness.is_finite());
            assert!(problem.space().contains(&r.best_position));
            assert_eq!(problem.value(&r.best_position), r.best_fitness);
        }
    }

    #[test]
    fn missing_budget_is_rejected() {
        let problem = benchmarks::lookup("sphere", 2).unwrap();
        assert!(run(&PsoConfig::default(), &problem, Budget::default(), 0).is_err());
    }

    #[test]
    fn evaluation_budget_stops_run() {
        let problem = benchmarks::lookup("sphere", 2).unwrap();
        for cfg in all_defaults() {
            let r = cfg.run(&problem, Budget::evaluations(500), 3).unwrap();
            assert!(r.evaluations >= 500, "{}", cfg.name());
            assert!(!r.trace.is_empty());
        }
    }

    #[test]
    fn non_finite_objective_aborts() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let problem = Problem::new("bad", space, |x| if x[0] > 0.9 { f64::NAN } else { 0.0 });
        let err = run(&PsoConfig::default(), &problem, Budget::iterations(200), 0);
        assert!(matches!(err, Err(crate::Error::NonFinite { .. })));
    }
}
