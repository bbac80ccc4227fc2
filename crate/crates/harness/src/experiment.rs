use rayon::prelude::*;
use swarmkit_core::aco::aco_run_with_budget;
use swarmkit_core::RunResult;

use crate::config::{Algorithm, ExperimentConfig, ProblemKind};
use crate::seed::derive_seed;
use crate::stats::{summarize, SummaryRow};

/// One seeded run of the campaign. Failed runs keep their error message.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub algorithm: String,
    pub problem: String,
    pub run_index: usize,
    pub seed: u64,
    pub outcome: Result<RunOutput, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub result: RunResult,
    /// Best tour order for TSP runs.
    pub tour: Option<Vec<usize>>,
}

impl RunRecord {
    pub fn result(&self) -> Option<&RunResult> {
        self.outcome.as_ref().ok().map(|o| &o.result)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Campaign {
    /// Grouped by pair in config order, then by run index.
    pub records: Vec<RunRecord>,
    /// One row per pair with at least one successful run, in config order.
    pub summaries: Vec<SummaryRow>,
}

impl Campaign {
    pub fn failures(&self) -> impl Iterator<Item = &RunRecord> {
        self.records.iter().filter(|r| r.outcome.is_err())
    }
}

/// Executes every run of the campaign on at most `jobs` threads.
///
/// Runs are independent; results are collected in (pair, run index) order
/// regardless of which thread finished first.
pub fn run_experiment(config: &ExperimentConfig, jobs: usize) -> anyhow::Result<Campaign> {
    let pairs = config.pairs();
    let tasks: Vec<(usize, usize, usize)> = pairs
        .iter()
        .flat_map(|&(a, p)| (0..config.runs_per_pair).map(move |r| (a, p, r)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    let records: Vec<RunRecord> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(a, p, r)| execute(config, a, p, r))
            .collect()
    });

    let summaries = pairs
        .iter()
        .enumerate()
        .filter_map(|(k, &(a, p))| {
            let chunk = &records[k * config.runs_per_pair..(k + 1) * config.runs_per_pair];
            let ok: Vec<&RunResult> = chunk.iter().filter_map(RunRecord::result).collect();
            summarize(
                &config.algorithms[a].label,
                &config.problems[p].label,
                &ok.iter().map(|r| r.best_fitness).collect::<Vec<_>>(),
                &ok.iter().map(|r| r.evaluations).collect::<Vec<_>>(),
                &ok.iter().map(|r| r.wall_time).collect::<Vec<_>>(),
            )
        })
        .collect();
    Ok(Campaign { records, summaries })
}

fn execute(config: &ExperimentConfig, a: usize, p: usize, run_index: usize) -> RunRecord {
    let alg = &config.algorithms[a];
    let prob = &config.problems[p];
    let seed = derive_seed(config.base_seed, &alg.label, &prob.label, run_index);
    let outcome = match (&alg.algorithm, &prob.kind) {
        (Algorithm::Swarm(c), ProblemKind::Continuous(problem)) => c
            .run(problem, config.budget, seed)
            .map(|result| RunOutput { result, tour: None }),
        (Algorithm::Aco(c), ProblemKind::Tsp(inst)) => {
            aco_run_with_budget(inst, c, config.budget, seed).map(|r| RunOutput {
                result: r.run,
                tour: Some(r.best_tour.order),
            })
        }
        _ => unreachable!("pairs() only yields compatible pairs"),
    }
    .map_err(|e| e.to_string());
    if let Err(e) = &outcome {
        log::warn!(
            "{} on {} run {run_index} failed: {e}",
            alg.label,
            prob.label
        );
    }
    RunRecord {
        algorithm: alg.label.clone(),
        problem: prob.label.clone(),
        run_index,
        seed,
        outcome,
    }
}
