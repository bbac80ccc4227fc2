use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use swarmkit::config::ALGORITHM_NAMES;
use swarmkit::{export, report, ExperimentConfig};
use swarmkit_core::benchmarks::BENCHMARK_NAMES;

/// Seeded swarm-optimizer experiments.
#[derive(Parser)]
#[command(name = "swarmkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every (algorithm, problem) pair of a config file.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Output directory, overriding `output_dir` from the config.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print Newton's method on the worked quadratic from four starts.
    NewtonDemo,
    /// List algorithms and benchmark problems.
    List,
    /// Run ACO on one TSP file using the settings of a config file.
    Tsp {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_RUN_FAILURE: u8 = 1;
const EXIT_CONFIG: u8 = 2;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config, jobs, out } => {
            campaign(swarmkit::load_config(&config), jobs, out.as_deref(), false)
        }
        Command::Tsp {
            file,
            config,
            jobs,
            out,
        } => campaign(
            swarmkit::load_tsp_config(&config, &file),
            jobs,
            out.as_deref(),
            true,
        ),
        Command::NewtonDemo => {
            print!("{}", swarmkit::demo::newton_demo_table());
            ExitCode::SUCCESS
        }
        Command::List => {
            println!("algorithms: {}", ALGORITHM_NAMES.join(", "));
            println!("benchmarks: {}", BENCHMARK_NAMES.join(", "));
            println!("tsp: any `n` + `id x y` coordinate file via [[problem]] tsp = \"path\"");
            ExitCode::SUCCESS
        }
    }
}

fn campaign(
    loaded: Result<ExperimentConfig, swarmkit::ConfigError>,
    jobs: Option<usize>,
    out: Option<&Path>,
    show_tours: bool,
) -> ExitCode {
    let mut config = match loaded {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if let Some(dir) = out {
        config.output_dir = dir.to_path_buf();
    }
    if let Err(e) = export::preflight(&config.output_dir) {
        eprintln!(
            "output directory {} is not writable: {e}",
            config.output_dir.display()
        );
        return ExitCode::from(EXIT_CONFIG);
    }
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let result = swarmkit::run_experiment(&config, jobs).and_then(|c| {
        export::write_all(&c, &config.output_dir)?;
        Ok(c)
    });
    let campaign = match result {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_RUN_FAILURE);
        }
    };
    let text = report::ranking(&campaign.summaries);
    print!("{text}");
    if let Err(e) = std::fs::write(config.output_dir.join("ranking.txt"), &text) {
        eprintln!("error writing ranking: {e}");
        return ExitCode::from(EXIT_RUN_FAILURE);
    }
    if show_tours {
        let best = campaign
            .records
            .iter()
            .filter_map(|r| r.outcome.as_ref().ok())
            .min_by(|a, b| a.result.best_fitness.total_cmp(&b.result.best_fitness));
        if let Some(o) = best {
            println!(
                "\nbest tour ({:.6}): {:?}",
                o.result.best_fitness,
                o.tour.as_deref().unwrap_or(&[])
            );
        }
    }
    let failed = campaign.failures().count();
    println!("\nwrote results to {}", config.output_dir.display());
    if failed > 0 {
        eprintln!("{failed} run(s) failed; see summary.json");
        return ExitCode::from(EXIT_RUN_FAILURE);
    }
    ExitCode::SUCCESS
}
