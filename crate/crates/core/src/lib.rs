//! Swarm and social optimization algorithms behind one step-function
//! contract, plus Newton baselines and a small benchmark registry.
//!
//! * [`swarm`]: PSO, artificial bee colony, bat, firefly and cuckoo search
//!   over box-bounded continuous problems.
//! * [`aco`]: ant colony optimization for symmetric TSP instances.
//! * [`classical`]: Newton root finding and Newton optimization.
//! * [`levy`]: Mantegna sampling of heavy-tailed Lévy steps.
//! * [`benchmarks`]: sphere, rosenbrock, rastrigin, ackley and two-mode.
//!
//! All randomness flows through a seeded [`RngStream`], so a run is a pure
//! function of its configuration, problem and seed.

pub mod aco;
pub mod benchmarks;
pub mod classical;
mod error;
pub mod levy;
mod population;
mod problem;
mod result;
mod rng;
pub mod swarm;

pub use error::{Error, Result};
pub use population::{argmin, Agent, Population};
pub use problem::{clamp_to_bounds, random_position, Gradient, Objective, Problem, SearchSpace};
pub use result::{Budget, RunResult};
pub use rng::RngStream;
