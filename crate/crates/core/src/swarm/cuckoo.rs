//! Cuckoo search: Lévy-flight global moves and gated differential local
//! moves.

use crate::error::{ensure, Result};
use crate::levy::{sample_vector, LevyConfig};
use crate::population::Population;
use crate::problem::{Problem, SearchSpace};
use crate::rng::RngStream;

use super::SwarmAlgorithm;

#[derive(Debug, Clone, PartialEq)]
pub struct CuckooConfig {
    pub n: usize,
    /// Discovery probability; opens each coordinate's local-move gate.
    pub pa: f64,
    /// Scale of the Lévy global step. `None` uses a tenth of the mean box
    /// width.
    pub alpha_step: Option<f64>,
    /// Lévy tail index.
    pub lambda: f64,
    /// Scale of the local differential step.
    pub alpha_local: f64,
}

impl Default for CuckooConfig {
    fn default() -> Self {
        Self {
            n: 25,
            pa: 0.25,
            alpha_step: None,
            lambda: 1.5,
            alpha_local: 1.0,
        }
    }
}

impl CuckooConfig {
    pub fn effective_alpha_step(&self, space: &SearchSpace) -> f64 {
        self.alpha_step.unwrap_or_else(|| 0.1 * space.mean_width())
    }

    fn levy(&self, space: &SearchSpace) -> Result<LevyConfig> {
        LevyConfig::new(self.lambda, self.effective_alpha_step(space))
    }
}

impl SwarmAlgorithm for CuckooConfig {
    type Aux = ();

    fn name(&self) -> &'static str {
        "cs"
    }

    fn population_size(&self) -> usize {
        self.n
    }

    fn validate(&self, space: &SearchSpace) -> Result<()> {
        ensure(self.n >= 2, || {
            format!("n must be at least 2, got {}", self.n)
        })?;
        ensure((0.0..=1.0).contains(&self.pa), || {
            "pa must be in [0,1]".to_string()
        })?;
        let step = self.effective_alpha_step(space);
        ensure(step > 0.0, || format!("alpha_step must be > 0, got {step}"))?;
        ensure(self.alpha_local >= 0.0, || {
            format!("alpha_local must be >= 0, got {}", self.alpha_local)
        })?;
        self.levy(space).map(|_| ())
    }

    fn init_aux(&self, _space: &SearchSpace, _position: &[f64], _fitness: f64) {}

    fn step(
        &self,
        population: &mut Population<()>,
        problem: &Problem,
        evaluations: &mut u64,
        rng: &mut RngStream,
    ) -> Result<()> {
        cuckoo_step(population, problem, self, evaluations, rng)
    }
}

/// `x + α s H ⊗ (x_j - x_k)` where `gates[k]` is `H(p_a - ε_k)`.
pub fn cuckoo_local_move(
    x: &[f64],
    xj: &[f64],
    xk: &[f64],
    alpha: f64,
    s: f64,
    gates: &[bool],
) -> Vec<f64> {
    x.iter()
        .zip(xj.iter().zip(xk))
        .zip(gates)
        .map(|((xi, (a, b)), &open)| if open { xi + alpha * s * (a - b) } else { *xi })
        .collect()
}

/// One cuckoo generation.
///
/// Global phase, nest `i` in order: draw a Lévy vector (two normals per
/// coordinate), evaluate `clamp(x_i + L)`, draw a uniform nest index `j` and
/// replace nest `j` when the new egg is strictly better.
///
/// Local phase: snapshot positions, draw two permutations `p`, `q` of the
/// nests, then per nest `i` draw `s` and one `ε` per coordinate (gate open
/// when `ε < p_a`), move towards `x_p[i] - x_q[i]`, clamp, evaluate and
/// keep the move if strictly better.
///
/// Both phases only replace a nest with something better, so the best nest
/// always survives into the next generation.
pub fn cuckoo_step(
    population: &mut Population<()>,
    problem: &Problem,
    config: &CuckooConfig,
    evaluations: &mut u64,
    rng: &mut RngStream,
) -> Result<()> {
    let space = problem.space();
    let levy = config.levy(space)?;
    let n = population.len();
    let d = problem.dimension();

    for i in 0..n {
        let step = sample_vector(&levy, d, rng);
        let mut egg: Vec<f64> = population.agents[i]
            .position
            .iter()
            .zip(&step)
            .map(|(x, s)| x + s)
            .collect();
        space.clamp(&mut egg);
        let fitness = problem.evaluate(&egg, evaluations)?;
        let j = rng.index(n);
        let host = &mut population.agents[j];
        if fitness < host.fitness {
            host.position = egg;
            host.fitness = fitness;
        }
    }

    let snapshot: Vec<Vec<f64>> = population
        .agents
        .iter()
        .map(|a| a.position.clone())
        .collect();
    let p = rng.permutation(n);
    let q = rng.permutation(n);
    for i in 0..n {
        let s = rng.uniform();
        let gates: Vec<bool> = (0..d).map(|_| rng.uniform() < config.pa).collect();
        let mut moved = cuckoo_local_move(
            &population.agents[i].position,
            &snapshot[p[i]],
            &snapshot[q[i]],
            config.alpha_local,
            s,
            &gates,
        );
        space.clamp(&mut moved);
        let fitness = problem.evaluate(&moved, evaluations)?;
        let nest = &mut population.agents[i];
        if fitness < nest.fitness {
            nest.position = moved;
            nest.fitness = fitness;
        }
    }
    Ok(())
}
