//! Bat algorithm: frequency-tuned velocities plus loudness and pulse-rate
//! schedules.

use crate::error::{ensure, Result};
use crate::population::Population;
use crate::problem::{Problem, SearchSpace};
use crate::rng::RngStream;

use super::SwarmAlgorithm;

/// Direction of the velocity term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BatSign {
    /// `v += (x - x*) f`
    #[default]
    Paper,
    /// `v += (x* - x) f`
    TowardBest,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatConfig {
    pub n: usize,
    pub f_min: f64,
    pub f_max: f64,
    /// Loudness decay factor, `A <- alpha_loud * A` on each accepted move.
    pub alpha_loud: f64,
    /// Pulse-rate growth constant.
    pub gamma_rate: f64,
    pub a0: f64,
    /// Asymptotic pulse emission rate.
    pub r0: f64,
    pub sign: BatSign,
}

impl Default for BatConfig {
    fn default() -> Self {
        Self {
            n: 30,
            f_min: 0.0,
            f_max: 2.0,
            alpha_loud: 0.9,
            gamma_rate: 0.9,
            a0: 1.0,
            r0: 0.5,
            sign: BatSign::Paper,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatState {
    pub velocity: Vec<f64>,
    pub frequency: f64,
    pub loudness: f64,
    pub emission_rate: f64,
    pub accepted: usize,
}

impl SwarmAlgorithm for BatConfig {
    type Aux = BatState;

    fn name(&self) -> &'static str {
        "bat"
    }

    fn population_size(&self) -> usize {
        self.n
    }

    fn validate(&self, _space: &SearchSpace) -> Result<()> {
        ensure(self.n >= 2, || {
            format!("n must be at least 2, got {}", self.n)
        })?;
        ensure(self.f_max > self.f_min, || {
            format!("f_max ({}) must exceed f_min ({})", self.f_max, self.f_min)
        })?;
        ensure(self.alpha_loud > 0.0 && self.alpha_loud < 1.0, || {
            format!("alpha_loud must be in (0,1), got {}", self.alpha_loud)
        })?;
        ensure(self.gamma_rate > 0.0, || {
            format!("gamma_rate must be > 0, got {}", self.gamma_rate)
        })?;
        ensure(self.a0 > 0.0, || format!("a0 must be > 0, got {}", self.a0))?;
        ensure((0.0..=1.0).contains(&self.r0), || {
            format!("r0 must be in [0,1], got {}", self.r0)
        })
    }

    /// Loudness starts at `a0`; the pulse rate starts at its schedule value
    /// for t = 0, which is 0.
    fn init_aux(&self, space: &SearchSpace, _position: &[f64], _fitness: f64) -> BatState {
        BatState {
            velocity: vec![0.0; space.dimension()],
            frequency: self.f_min,
            loudness: self.a0,
            emission_rate: emission_rate(self.r0, self.gamma_rate, 0),
            accepted: 0,
        }
    }

    fn step(
        &self,
        population: &mut Population<BatState>,
        problem: &Problem,
        evaluations: &mut u64,
        rng: &mut RngStream,
    ) -> Result<()> {
        bat_step(population, problem, self, evaluations, rng)
    }
}

/// `f = f_min + (f_max - f_min) β`.
pub fn bat_frequency(config: &BatConfig, beta: f64) -> f64 {
    config.f_min + (config.f_max - config.f_min) * beta
}

/// `r(t) = r0 (1 - exp(-γ t))`.
pub fn emission_rate(r0: f64, gamma: f64, t: usize) -> f64 {
    r0 * (1.0 - (-gamma * t as f64).exp())
}

/// One bat sweep, bat 0 first. `t` is the 1-based iteration number.
///
/// Draws per bat: `β`; then one uniform `u` deciding the local walk
/// (`u > r_i`) and, only when walking, one normal per coordinate; then one
/// uniform for the loudness gate. The local walk is
/// `x' = g* + 0.01 σ N(0,1)` with σ the mean box width. The candidate is
/// accepted when it improves the bat and the loudness draw is below `A_i`,
/// which then shrinks `A_i` and resets `r_i` to `r(t)`. Every candidate is
/// offered to the incumbent.
pub fn bat_step(
    population: &mut Population<BatState>,
    problem: &Problem,
    config: &BatConfig,
    evaluations: &mut u64,
    rng: &mut RngStream,
) -> Result<()> {
    let space = problem.space();
    let sigma = 0.01 * space.mean_width();
    let t = population.generation + 1;
    for i in 0..population.len() {
        let global = population.best_position().to_vec();
        let agent = &mut population.agents[i];
        let state = &mut agent.aux;
        state.frequency = bat_frequency(config, rng.uniform());
        let mut candidate = agent.position.clone();
        for k in 0..candidate.len() {
            let offset = match config.sign {
                BatSign::Paper => agent.position[k] - global[k],
                BatSign::TowardBest => global[k] - agent.position[k],
            };
            state.velocity[k] += offset * state.frequency;
            candidate[k] += state.velocity[k];
        }
        space.clamp(&mut candidate);
        if rng.uniform() > state.emission_rate {
            for (c, g) in candidate.iter_mut().zip(&global) {
                *c = g + sigma * rng.normal();
            }
            space.clamp(&mut candidate);
        }
        let fitness = problem.evaluate(&candidate, evaluations)?;
        let gate = rng.uniform();
        if fitness < agent.fitness && gate < state.loudness {
            agent.position.clone_from(&candidate);
            agent.fitness = fitness;
            state.loudness *= config.alpha_loud;
            state.emission_rate = emission_rate(config.r0, config.gamma_rate, t);
            state.accepted += 1;
        }
        population.offer(&candidate, fitness);
    }
    Ok(())
}
