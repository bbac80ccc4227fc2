//! Experiment configuration files.
//!
//! A campaign is one TOML file:
//!
//! ```toml
//! runs_per_pair = 30        # default 30
//! base_seed = 42            # default 0
//! output_dir = "results"    # default "results", relative to the file
//!
//! [budget]                  # default: max_iterations = 1000
//! max_iterations = 500
//! max_evaluations = 20000   # optional; the first bound reached stops a run
//!
//! [[algorithm]]
//! name = "pso"              # pso | abc | bat | fa | cs | aco
//! alpha = 1.0               # any omitted parameter keeps its default
//!
//! [[algorithm]]
//! name = "cs"
//! label = "cs_wide"         # optional; needed when a name repeats
//! pa = 0.25
//!
//! [[problem]]
//! name = "rastrigin"        # registered benchmark
//! dimension = 10            # default 10
//!
//! [[problem]]
//! tsp = "cities.tsp"        # TSP file, relative to the config file
//! ```
//!
//! Unknown keys are rejected. Continuous algorithms are paired with every
//! benchmark problem and `aco` with every TSP problem.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use swarmkit_core::aco::{AcoConfig, TspInstance};
use swarmkit_core::benchmarks::{self, BENCHMARK_NAMES};
use swarmkit_core::swarm::{
    AbcConfig, BatConfig, BatSign, CuckooConfig, FireflyConfig, PsoConfig, SwarmConfig,
};
use swarmkit_core::{Budget, Problem};

use crate::error::ConfigError;

pub const ALGORITHM_NAMES: [&str; 6] = ["pso", "abc", "bat", "fa", "cs", "aco"];

pub const DEFAULT_RUNS: usize = 30;
pub const DEFAULT_ITERATIONS: usize = 1000;
pub const DEFAULT_DIMENSION: usize = 10;

/// The file as written, before resolution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    #[serde(default = "default_runs")]
    pub runs_per_pair: usize,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub budget: Option<RawBudget>,
    #[serde(default, rename = "algorithm")]
    pub algorithms: Vec<AlgorithmEntry>,
    #[serde(default, rename = "problem")]
    pub problems: Vec<ProblemEntry>,
}

fn default_runs() -> usize {
    DEFAULT_RUNS
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBudget {
    pub max_iterations: Option<usize>,
    pub max_evaluations: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    Paper,
    TowardBest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgorithmEntry {
    Pso {
        label: Option<String>,
        n: Option<usize>,
        alpha: Option<f64>,
        beta: Option<f64>,
    },
    Abc {
        label: Option<String>,
        n: Option<usize>,
        limit: Option<usize>,
    },
    Bat {
        label: Option<String>,
        n: Option<usize>,
        f_min: Option<f64>,
        f_max: Option<f64>,
        alpha_loud: Option<f64>,
        gamma_rate: Option<f64>,
        a0: Option<f64>,
        r0: Option<f64>,
        ba_sign_convention: Option<SignConvention>,
    },
    Fa {
        label: Option<String>,
        n: Option<usize>,
        beta0: Option<f64>,
        gamma: Option<f64>,
        alpha0: Option<f64>,
        delta: Option<f64>,
    },
    Cs {
        label: Option<String>,
        n: Option<usize>,
        pa: Option<f64>,
        alpha_step: Option<f64>,
        lambda: Option<f64>,
        alpha_local: Option<f64>,
    },
    Aco {
        label: Option<String>,
        n_ants: Option<usize>,
        alpha: Option<f64>,
        beta: Option<f64>,
        rho: Option<f64>,
        q: Option<f64>,
        tau_min: Option<f64>,
        tau0: Option<f64>,
    },
}

/// Either `name` (+ optional `dimension`) or `tsp`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemEntry {
    pub name: Option<String>,
    pub dimension: Option<usize>,
    pub tsp: Option<PathBuf>,
}

/// A resolved algorithm with its campaign label.
#[derive(Debug, Clone, PartialEq)]
pub enum Algorithm {
    Swarm(SwarmConfig),
    Aco(AcoConfig),
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Swarm(c) => c.name(),
            Algorithm::Aco(_) => "aco",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmSpec {
    pub label: String,
    pub algorithm: Algorithm,
}

#[derive(Clone)]
pub enum ProblemKind {
    Continuous(Problem),
    Tsp(TspInstance),
}

#[derive(Clone)]
pub struct ProblemSpec {
    pub label: String,
    pub kind: ProblemKind,
}

impl std::fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// A validated campaign.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub runs_per_pair: usize,
    pub base_seed: u64,
    pub budget: Budget,
    pub output_dir: PathBuf,
    pub algorithms: Vec<AlgorithmSpec>,
    pub problems: Vec<ProblemSpec>,
}

impl ExperimentConfig {
    /// Compatible (algorithm, problem) index pairs in config order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, alg) in self.algorithms.iter().enumerate() {
            for (p, prob) in self.problems.iter().enumerate() {
                if compatible(&alg.algorithm, &prob.kind) {
                    out.push((a, p));
                }
            }
        }
        out
    }
}

fn compatible(alg: &Algorithm, problem: &ProblemKind) -> bool {
    matches!(
        (alg, problem),
        (Algorithm::Swarm(_), ProblemKind::Continuous(_))
            | (Algorithm::Aco(_), ProblemKind::Tsp(_))
    )
}

/// Reads and validates a config file. Relative paths inside it resolve
/// against the file's directory.
pub fn load_config(path: &Path) -> Result<ExperimentConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_config(&text, base)
}

pub fn parse_config(text: &str, base_dir: &Path) -> Result<ExperimentConfig, ConfigError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    resolve(raw, base_dir)
}

pub fn resolve(raw: RawConfig, base_dir: &Path) -> Result<ExperimentConfig, ConfigError> {
    if raw.runs_per_pair < 1 {
        return Err(invalid("runs_per_pair", "must be at least 1"));
    }
    let budget = match raw.budget {
        None => Budget::iterations(DEFAULT_ITERATIONS),
        Some(b) => Budget {
            max_iterations: b.max_iterations,
            max_evaluations: b.max_evaluations,
        },
    };
    budget
        .validate()
        .map_err(|e| invalid("budget", &e.to_string()))?;
    if raw.algorithms.is_empty() {
        return Err(invalid(
            "algorithm",
            "at least one [[algorithm]] entry is required",
        ));
    }
    if raw.problems.is_empty() {
        return Err(invalid(
            "problem",
            "at least one [[problem]] entry is required",
        ));
    }

    let problems = raw
        .problems
        .iter()
        .map(|p| resolve_problem(p, base_dir))
        .collect::<Result<Vec<_>, _>>()?;
    unique_labels(problems.iter().map(|p| p.label.as_str()), "problem")?;

    let mut algorithms = Vec::new();
    for (i, entry) in raw.algorithms.iter().enumerate() {
        let spec = resolve_algorithm(entry);
        let field = |msg: String| ConfigError::Invalid {
            field: format!("algorithm[{i}] ({})", spec.label),
            message: msg,
        };
        match &spec.algorithm {
            Algorithm::Swarm(c) => {
                for p in &problems {
                    if let ProblemKind::Continuous(problem) = &p.kind {
                        c.validate(problem.space())
                            .map_err(|e| field(e.to_string()))?;
                    }
                }
            }
            Algorithm::Aco(c) => c.validate().map_err(|e| field(e.to_string()))?,
        }
        algorithms.push(spec);
    }
    unique_labels(
        algorithms.iter().map(|a| a.label.as_str()),
        "algorithm label",
    )?;

    let config = ExperimentConfig {
        runs_per_pair: raw.runs_per_pair,
        base_seed: raw.base_seed,
        budget,
        output_dir: base_dir.join(raw.output_dir.unwrap_or_else(|| PathBuf::from("results"))),
        algorithms,
        problems,
    };
    let pairs = config.pairs();
    for a in &config.algorithms {
        if !pairs
            .iter()
            .any(|&(i, _)| config.algorithms[i].label == a.label)
        {
            return Err(invalid(
                "algorithm",
                &format!("{} has no compatible problem", a.label),
            ));
        }
    }
    for p in &config.problems {
        if !pairs
            .iter()
            .any(|&(_, j)| config.problems[j].label == p.label)
        {
            return Err(invalid(
                "problem",
                &format!("{} has no compatible algorithm", p.label),
            ));
        }
    }
    Ok(config)
}

/// Config for the `tsp` subcommand: campaign settings and `aco` entries
/// from `config_path`, run on the single instance at `tsp_path`. Any other
/// algorithms and problems in the file are ignored; without an `aco` entry
/// the defaults are used.
pub fn load_tsp_config(
    config_path: &Path,
    tsp_path: &Path,
) -> Result<ExperimentConfig, ConfigError> {
    let text = std::fs::read_to_string(config_path).map_err(|e| ConfigError::Io {
        path: config_path.to_path_buf(),
        message: e.to_string(),
    })?;
    let mut raw: RawConfig =
        toml::from_str(&text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    raw.algorithms
        .retain(|a| matches!(a, AlgorithmEntry::Aco { .. }));
    if raw.algorithms.is_empty() {
        raw.algorithms.push(AlgorithmEntry::Aco {
            label: None,
            n_ants: None,
            alpha: None,
            beta: None,
            rho: None,
            q: None,
            tau_min: None,
            tau0: None,
        });
    }
    let tsp = std::path::absolute(tsp_path).unwrap_or_else(|_| tsp_path.to_path_buf());
    raw.problems = vec![ProblemEntry {
        name: None,
        dimension: None,
        tsp: Some(tsp),
    }];
    resolve(raw, config_path.parent().unwrap_or(Path::new(".")))
}

fn invalid(field: &str, message: &str) -> ConfigError {
    ConfigError::Invalid {
        field: field.to_string(),
        message: message.to_string(),
    }
}

fn unique_labels<'a>(labels: impl Iterator<Item = &'a str>, what: &str) -> Result<(), ConfigError> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(invalid(what, &format!("duplicate `{l}`")));
        }
    }
    Ok(())
}

fn resolve_problem(entry: &ProblemEntry, base_dir: &Path) -> Result<ProblemSpec, ConfigError> {
    match (&entry.name, &entry.tsp) {
        (Some(name), None) => {
            let d = entry.dimension.unwrap_or(DEFAULT_DIMENSION);
            if !BENCHMARK_NAMES.contains(&name.as_str()) {
                return Err(ConfigError::UnknownProblem {
                    name: name.clone(),
                    available: BENCHMARK_NAMES.join(", "),
                });
            }
            let problem = benchmarks::lookup(name, d)
                .map_err(|e| invalid("problem.dimension", &e.to_string()))?;
            Ok(ProblemSpec {
                label: problem.name().to_string(),
                kind: ProblemKind::Continuous(problem),
            })
        }
        (None, Some(tsp)) if entry.dimension.is_none() => {
            let path = base_dir.join(tsp);
            let inst =
                TspInstance::load(&path).map_err(|e| invalid("problem.tsp", &e.to_string()))?;
            Ok(ProblemSpec {
                label: inst.name().to_string(),
                kind: ProblemKind::Tsp(inst),
            })
        }
        (None, Some(_)) => Err(invalid("problem.dimension", "not allowed with `tsp`")),
        _ => Err(invalid("problem", "set exactly one of `name` or `tsp`")),
    }
}

fn resolve_algorithm(entry: &AlgorithmEntry) -> AlgorithmSpec {
    macro_rules! set {
        ($cfg:ident, $($field:ident),*) => {
            $(if let Some(v) = $field { $cfg.$field = *v; })*
        };
    }
    let (label, algorithm) = match entry {
        AlgorithmEntry::Pso {
            label,
            n,
            alpha,
            beta,
        } => {
            let mut c = PsoConfig::default();
            set!(c, n, alpha, beta);
            (label, Algorithm::Swarm(SwarmConfig::Pso(c)))
        }
        AlgorithmEntry::Abc { label, n, limit } => {
            let mut c = AbcConfig::default();
            set!(c, n);
            c.limit = *limit;
            (label, Algorithm::Swarm(SwarmConfig::Abc(c)))
        }
        AlgorithmEntry::Bat {
            label,
            n,
            f_min,
            f_max,
            alpha_loud,
            gamma_rate,
            a0,
            r0,
            ba_sign_convention,
        } => {
            let mut c = BatConfig::default();
            set!(c, n, f_min, f_max, alpha_loud, gamma_rate, a0, r0);
            if let Some(s) = ba_sign_convention {
                c.sign = match s {
                    SignConvention::Paper => BatSign::Paper,
                    SignConvention::TowardBest => BatSign::TowardBest,
                };
            }
            (label, Algorithm::Swarm(SwarmConfig::Bat(c)))
        }
        AlgorithmEntry::Fa {
            label,
            n,
            beta0,
            gamma,
            alpha0,
            delta,
        } => {
            let mut c = FireflyConfig::default();
            set!(c, n, beta0, alpha0, delta);
            c.gamma = *gamma;
            (label, Algorithm::Swarm(SwarmConfig::Firefly(c)))
        }
        AlgorithmEntry::Cs {
            label,
            n,
            pa,
            alpha_step,
            lambda,
            alpha_local,
        } => {
            let mut c = CuckooConfig::default();
            set!(c, n, pa, lambda, alpha_local);
            c.alpha_step = *alpha_step;
            (label, Algorithm::Swarm(SwarmConfig::Cuckoo(c)))
        }
        AlgorithmEntry::Aco {
            label,
            n_ants,
            alpha,
            beta,
            rho,
            q,
            tau_min,
            tau0,
        } => {
            let mut c = AcoConfig::default();
            set!(c, n_ants, alpha, beta, rho, q, tau_min, tau0);
            (label, Algorithm::Aco(c))
        }
    };
    AlgorithmSpec {
        label: label
            .clone()
            .unwrap_or_else(|| algorithm.name().to_string()),
        algorithm,
    }
}
