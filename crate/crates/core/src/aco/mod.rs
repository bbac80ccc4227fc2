//! Ant colony optimization for the symmetric TSP (Ant System rules).
//!
//! Route choice from city `i` weights every unvisited city `j` by
//! `τ_ij^α · (1/d_ij)^β`. After all ants of an iteration finish, every edge
//! evaporates by `(1 - ρ)` and each tour deposits `Q / length` on its edges.
//! Pheromone never drops below `tau_min`.

mod tsp;

pub use tsp::{Tour, TspInstance};

use std::time::Instant;

use crate::error::{ensure, Result};
use crate::result::{Budget, RunResult};
use crate::rng::RngStream;

#[derive(Debug, Clone, PartialEq)]
pub struct AcoConfig {
    pub n_ants: usize,
    /// Pheromone influence.
    pub alpha: f64,
    /// Desirability influence.
    pub beta: f64,
    /// Evaporation rate.
    pub rho: f64,
    /// Deposit constant.
    pub q: f64,
    pub iterations: usize,
    pub tau_min: f64,
    /// Initial pheromone on every edge.
    pub tau0: f64,
}

impl Default for AcoConfig {
    fn default() -> Self {
        Self {
            n_ants: 20,
            alpha: 1.0,
            beta: 2.0,
            rho: 0.5,
            q: 1.0,
            iterations: 200,
            tau_min: 1e-9,
            tau0: 1.0,
        }
    }
}

impl AcoConfig {
    pub fn validate(&self) -> Result<()> {
        ensure(self.n_ants >= 1, || "n_ants must be at least 1".to_string())?;
        ensure(self.alpha > 0.0, || {
            format!("alpha must be > 0, got {}", self.alpha)
        })?;
        ensure(self.beta > 0.0, || {
            format!("beta must be > 0, got {}", self.beta)
        })?;
        ensure(self.rho > 0.0 && self.rho < 1.0, || {
            format!("rho must be in (0,1), got {}", self.rho)
        })?;
        ensure(self.q > 0.0, || format!("q must be > 0, got {}", self.q))?;
        ensure(self.tau_min > 0.0, || {
            format!("tau_min must be > 0, got {}", self.tau_min)
        })?;
        ensure(self.tau0 >= self.tau_min, || {
            "tau0 must be >= tau_min".to_string()
        })
    }
}

/// Symmetric pheromone matrix with a positive floor.
#[derive(Debug, Clone, PartialEq)]
pub struct PheromoneField {
    tau: Vec<Vec<f64>>,
    tau_min: f64,
}

impl PheromoneField {
    pub fn uniform(n: usize, value: f64, tau_min: f64) -> Self {
        Self {
            tau: vec![vec![value.max(tau_min); n]; n],
            tau_min,
        }
    }

    pub fn n(&self) -> usize {
        self.tau.len()
    }

    pub fn tau_min(&self) -> f64 {
        self.tau_min
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.tau[i][j]
    }

    /// Sets both `(i, j)` and `(j, i)`, respecting the floor.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let v = value.max(self.tau_min);
        self.tau[i][j] = v;
        self.tau[j][i] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.tau[i][j] == self.tau[j][i]))
    }

    pub fn min_value(&self) -> f64 {
        let n = self.n();
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.tau[i][j])
            .fold(f64::INFINITY, f64::min)
    }
}

/// Choice probabilities from `current` over `allowed`, in `allowed` order.
///
/// Falls back to uniform when every weight is zero or non-finite.
pub fn route_probabilities(
    current: usize,
    allowed: &[usize],
    tau: &PheromoneField,
    instance: &TspInstance,
    alpha: f64,
    beta: f64,
) -> Vec<f64> {
    assert!(!allowed.is_empty(), "no cities left to choose from");
    let weights: Vec<f64> = allowed
        .iter()
        .map(|&j| {
            tau.get(current, j).powf(alpha) * (1.0 / instance.distance(current, j)).powf(beta)
        })
        .collect();
    let total: f64 = weights.iter().sum();
    if !(total > 0.0 && total.is_finite()) {
        log::warn!("route weights from city {current} degenerate ({total}); using uniform choice");
        return vec![1.0 / allowed.len() as f64; allowed.len()];
    }
    weights.into_iter().map(|w| w / total).collect()
}

/// Builds one tour.
///
/// Draws one index for the start city, then for each of the remaining
/// `n - 1` moves one uniform `u`; the next city is the first unvisited city
/// (in index order) whose cumulative probability exceeds `u`.
pub fn construct_tour(
    instance: &TspInstance,
    tau: &PheromoneField,
    config: &AcoConfig,
    rng: &mut RngStream,
) -> Tour {
    let n = instance.n_cities();
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut current = rng.index(n);
    visited[current] = true;
    order.push(current);
    for _ in 1..n {
        let allowed: Vec<usize> = (0..n).filter(|&c| !visited[c]).collect();
        let probs =
            route_probabilities(current, &allowed, tau, instance, config.alpha, config.beta);
        let u = rng.uniform();
        let mut acc = 0.0;
        let mut next = *allowed.last().unwrap();
        for (&city, p) in allowed.iter().zip(&probs) {
            acc += p;
            if u < acc {
                next = city;
                break;
            }
        }
        visited[next] = true;
        order.push(next);
        current = next;
    }
    Tour::new(instance, order)
}

/// Evaporates every edge, then lets each tour deposit `Q / length`.
pub fn update_pheromone(tau: &mut PheromoneField, tours: &[Tour], config: &AcoConfig) {
    let n = tau.n();
    let mut next = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            next[i][j] = (1.0 - config.rho) * tau.get(i, j);
        }
    }
    for tour in tours {
        let deposit = config.q / tour.length;
        for (a, b) in tour.edges() {
            next[a][b] += deposit;
            next[b][a] = next[a][b];
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            tau.set(i, j, next[i][j]);
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AcoResult {
    pub best_tour: Tour,
    /// `best_position` holds the best tour order as floats; `trace` holds the
    /// incumbent tour length per iteration; `evaluations` counts tours built.
    pub run: RunResult,
}

/// Runs for `config.iterations` iterations.
pub fn aco_run(instance: &TspInstance, config: &AcoConfig, seed: u64) -> Result<AcoResult> {
    aco_run_with_budget(
        instance,
        config,
        Budget::iterations(config.iterations),
        seed,
    )
}

/// Runs until a budget bound is hit. Ants within an iteration share the run's
/// stream and build their tours in ant order.
pub fn aco_run_with_budget(
    instance: &TspInstance,
    config: &AcoConfig,
    budget: Budget,
    seed: u64,
) -> Result<AcoResult> {
    config.validate()?;
    budget.validate()?;
    let started = Instant::now();
    let mut rng = RngStream::new(seed);
    let mut tau = PheromoneField::uniform(instance.n_cities(), config.tau0, config.tau_min);
    let mut best: Option<Tour> = None;
    let mut trace = Vec::new();
    let mut evaluations = 0u64;
    while !budget.exhausted(trace.len(), evaluations) {
        let tours: Vec<Tour> = (0..config.n_ants)
            .map(|_| construct_tour(instance, &tau, config, &mut rng))
            .collect();
        evaluations += tours.len() as u64;
        for t in &tours {
            if best.as_ref().is_none_or(|b| t.length < b.length) {
                best = Some(t.clone());
            }
        }
        update_pheromone(&mut tau, &tours, config);
        trace.push(best.as_ref().map(|b| b.length).unwrap());
    }
    let best_tour = match best {
        Some(t) => t,
        // zero-iteration budget: report the identity tour without building any
        None => Tour::new(instance, (0..instance.n_cities()).collect()),
    };
    let run = RunResult {
        best_position: best_tour.order.iter().map(|&c| c as f64).collect(),
        best_fitness: best_tour.length,
        trace,
        evaluations,
        seed,
        wall_time: started.elapsed().as_secs_f64(),
    };
    Ok(AcoResult { best_tour, run })
}
