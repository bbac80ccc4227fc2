//! Plain-text ranking of algorithms by mean final fitness.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::stats::SummaryRow;

pub const NFL_FOOTER: &str =
    "No free lunch: these rankings only apply for that set of benchmarks, \
budgets and settings; another benchmark set may order the algorithms differently.";

/// Per-problem ranks (1 = lowest mean; ties share the smaller rank) and the
/// average rank of each algorithm over the problems it ran on.
pub fn ranking(rows: &[SummaryRow]) -> String {
    let mut by_problem: BTreeMap<&str, Vec<&SummaryRow>> = BTreeMap::new();
    for r in rows {
        by_problem.entry(&r.problem).or_default().push(r);
    }
    let mut out = String::new();
    let mut ranks: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (problem, mut group) in by_problem {
        group.sort_by(|a, b| {
            a.mean
                .total_cmp(&b.mean)
                .then_with(|| a.algorithm.cmp(&b.algorithm))
        });
        writeln!(out, "{problem}").unwrap();
        let mut rank = 0;
        for (i, r) in group.iter().enumerate() {
            if i == 0 || r.mean != group[i - 1].mean {
                rank = i + 1;
            }
            ranks.entry(&r.algorithm).or_default().push(rank);
            writeln!(
                out,
                "  {rank:>2}. {:<12} mean {:.6e}  median {:.6e}  ({} runs)",
                r.algorithm, r.mean, r.median, r.runs
            )
            .unwrap();
        }
        out.push('\n');
    }
    let mut overall: Vec<(f64, &str, usize)> = ranks
        .iter()
        .map(|(alg, rs)| {
            (
                rs.iter().sum::<usize>() as f64 / rs.len() as f64,
                *alg,
                rs.len(),
            )
        })
        .collect();
    overall.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(b.1)));
    writeln!(out, "average rank").unwrap();
    for (avg, alg, n) in overall {
        writeln!(out, "  {alg:<12} {avg:.2} over {n} problem(s)").unwrap();
    }
    writeln!(out, "\n{NFL_FOOTER}").unwrap();
    out
}
