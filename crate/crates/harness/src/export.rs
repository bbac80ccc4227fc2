//! Result files.
//!
//! `summary.csv` and `summary.json` hold one row per pair; `traces/` holds
//! one `<algorithm>_<problem>_<run>.csv` per successful run with columns
//! `iteration,best_fitness` (iteration 1 is the first completed iteration).
//! CSV floats use `{:.16e}` (17 significant digits), which round-trips.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::experiment::Campaign;
use crate::stats::SummaryRow;

pub const SUMMARY_HEADER: [&str; 10] = [
    "algorithm",
    "problem",
    "runs",
    "best",
    "worst",
    "mean",
    "median",
    "std",
    "mean_evals",
    "mean_wall_time_s",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailedRun {
    pub algorithm: String,
    pub problem: String,
    pub run: usize,
    pub seed: u64,
    pub error: String,
}

/// Contents of `summary.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryFile {
    pub rows: Vec<SummaryRow>,
    pub failures: Vec<FailedRun>,
}

impl SummaryFile {
    pub fn from_campaign(campaign: &Campaign) -> Self {
        Self {
            rows: campaign.summaries.clone(),
            failures: campaign
                .failures()
                .map(|r| FailedRun {
                    algorithm: r.algorithm.clone(),
                    problem: r.problem.clone(),
                    run: r.run_index,
                    seed: r.seed,
                    error: r.outcome.clone().unwrap_err(),
                })
                .collect(),
        }
    }
}

pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn trace_path(dir: &Path, algorithm: &str, problem: &str, run: usize) -> PathBuf {
    dir.join("traces")
        .join(format!("{algorithm}_{problem}_{run}.csv"))
}

/// Creates `dir` and `dir/traces` and proves they are writable.
pub fn preflight(dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir.join("traces"))?;
    let probe = dir.join(".swarmkit-write-test");
    fs::write(&probe, b"")?;
    fs::remove_file(probe)
}

pub fn write_all(campaign: &Campaign, dir: &Path) -> anyhow::Result<()> {
    preflight(dir)?;
    write_summary_csv(&campaign.summaries, &dir.join("summary.csv"))?;
    write_summary_json(
        &SummaryFile::from_campaign(campaign),
        &dir.join("summary.json"),
    )?;
    for r in &campaign.records {
        if let Some(result) = r.result() {
            write_trace(
                &result.trace,
                &trace_path(dir, &r.algorithm, &r.problem, r.run_index),
            )?;
        }
    }
    Ok(())
}

pub fn write_summary_csv(rows: &[SummaryRow], path: &Path) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(SUMMARY_HEADER)?;
    for r in rows {
        w.write_record([
            r.algorithm.clone(),
            r.problem.clone(),
            r.runs.to_string(),
            fmt_float(r.best),
            fmt_float(r.worst),
            fmt_float(r.mean),
            fmt_float(r.median),
            fmt_float(r.std),
            fmt_float(r.mean_evals),
            fmt_float(r.mean_wall_time_s),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_summary_csv(path: &Path) -> anyhow::Result<Vec<SummaryRow>> {
    let mut rdr = csv::Reader::from_path(path)?;
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    anyhow::ensure!(header == SUMMARY_HEADER, "unexpected header {header:?}");
    rdr.records()
        .map(|rec| {
            let rec = rec?;
            let f = |i: usize| -> anyhow::Result<f64> { Ok(rec[i].parse()?) };
            Ok(SummaryRow {
                algorithm: rec[0].to_string(),
                problem: rec[1].to_string(),
                runs: rec[2].parse()?,
                best: f(3)?,
                worst: f(4)?,
                mean: f(5)?,
                median: f(6)?,
                std: f(7)?,
                mean_evals: f(8)?,
                mean_wall_time_s: f(9)?,
            })
        })
        .collect()
}

pub fn write_summary_json(summary: &SummaryFile, path: &Path) -> anyhow::Result<()> {
    fs::write(path, serde_json::to_string_pretty(summary)? + "\n")?;
    Ok(())
}

pub fn read_summary_json(path: &Path) -> anyhow::Result<SummaryFile> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

pub fn write_trace(trace: &[f64], path: &Path) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["iteration", "best_fitness"])?;
    for (i, f) in trace.iter().enumerate() {
        w.write_record([(i + 1).to_string(), fmt_float(*f)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_trace(path: &Path) -> anyhow::Result<Vec<f64>> {
    let mut rdr = csv::Reader::from_path(path)?;
    rdr.records().map(|rec| Ok(rec?[1].parse()?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_through_text() {
        for x in [
            0.1,
            1.0 / 3.0,
            1e-300,
            123456789.123456789,
            f64::MIN_POSITIVE,
            0.0,
        ] {
            assert_eq!(fmt_float(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(fmt_float(0.5), "5.0000000000000000e-1");
    }
}
