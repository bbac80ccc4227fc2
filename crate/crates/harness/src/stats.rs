use serde::{Deserialize, Serialize};
use statrs::statistics::{Data, Median, Statistics};

/// Final-fitness statistics for one (algorithm, problem) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub algorithm: String,
    pub problem: String,
    pub runs: usize,
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub median: f64,
    /// Sample standard deviation (n - 1 denominator); 0 for a single run.
    pub std: f64,
    pub mean_evals: f64,
    pub mean_wall_time_s: f64,
}

/// `None` when there are no successful runs to summarize.
pub fn summarize(
    algorithm: &str,
    problem: &str,
    finals: &[f64],
    evaluations: &[u64],
    wall_times: &[f64],
) -> Option<SummaryRow> {
    if finals.is_empty() {
        return None;
    }
    let evals: Vec<f64> = evaluations.iter().map(|&e| e as f64).collect();
    Some(SummaryRow {
        algorithm: algorithm.to_string(),
        problem: problem.to_string(),
        runs: finals.len(),
        best: finals.min(),
        worst: finals.max(),
        mean: finals.mean(),
        median: Data::new(finals.to_vec()).median(),
        std: if finals.len() > 1 {
            finals.std_dev()
        } else {
            0.0
        },
        mean_evals: evals.mean(),
        mean_wall_time_s: wall_times.mean(),
    })
}
