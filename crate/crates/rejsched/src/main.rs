//! Command-line front end: solve, generate, verify, crosscheck, bench.
//!
//! Exit codes are a stable contract: 0 success, 1 verification or
//! cross-check failure, 2 usage/parse errors, 3 internal solver errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use rejsched::bench::{run_bench, scaling_report, write_csv, BenchConfig, BenchError, SolverSelect};
use rejsched::generator::{generate, GenParams};
use rejsched::io::{format_instance, format_solution, parse_instance, parse_solution};
use rejsched::{
    solve_default, solve_oracle, solve_p2_literal, verify, Instance, ProblemKind, Solution,
};

#[derive(Parser)]
#[command(name = "rejsched", version, about = "Single-machine scheduling with budgeted job rejection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    P1,
    P2,
    P3,
}

impl From<Problem> for ProblemKind {
    fn from(p: Problem) -> Self {
        match p {
            Problem::P1 => ProblemKind::P1,
            Problem::P2 => ProblemKind::P2,
            Problem::P3 => ProblemKind::P3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    /// The kind's default exact dynamic program.
    Dp,
    /// Single-path recursion; p2 only, not guaranteed optimal.
    Literal,
    /// Brute force over all partitions (n <= 22).
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckAlgorithm {
    Dp,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solver {
    Dp,
    Literal,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and emit a solution file.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Dp)]
        algorithm: Algorithm,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a seeded random instance file.
    Generate {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file against its instance file.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Compare a solver against the brute-force oracle on random instances.
    Crosscheck {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = CheckAlgorithm::Dp)]
        algorithm: CheckAlgorithm,
    },
    /// Time solves over a size grid and emit a CSV report.
    Bench {
        #[arg(long, value_enum)]
        problem: Problem,
        /// Comma-separated job counts, e.g. 500,1000,1500,2000.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Solver::Dp)]
        solver: Solver,
        /// Time each instance three times and keep the median.
        #[arg(long)]
        median_of_3: bool,
    },
}

enum Failure {
    /// Exit 1: the checked property does not hold.
    Check,
    /// Exit 2: bad flags or unparseable input.
    Usage(String),
    /// Exit 3: a solver refused or failed.
    Solver(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check => 1,
            Failure::Usage(_) => 2,
            Failure::Solver(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Check => {}
                Failure::Usage(msg) | Failure::Solver(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve { instance, algorithm, out } => cmd_solve(&instance, algorithm, out.as_deref()),
        Command::Generate { problem, n, seed, out } => cmd_generate(problem.into(), n, seed, out.as_deref()),
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Crosscheck { problem, n_max, trials, seed, algorithm } => {
            cmd_crosscheck(problem.into(), n_max, trials, seed, algorithm)
        }
        Command::Bench { problem, sizes, reps, seed, csv, solver, median_of_3 } => {
            cmd_bench(problem.into(), sizes, reps, seed, csv.as_deref(), solver, median_of_3)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read_input(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Solver(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_solve(path: &Path, algorithm: Algorithm, out: Option<&Path>) -> Result<(), Failure> {
    let instance = load_instance(path)?;
    let solution: Solution = match algorithm {
        Algorithm::Dp => solve_default(&instance).map_err(|e| Failure::Solver(e.to_string()))?,
        Algorithm::Literal => {
            if instance.kind != ProblemKind::P2 {
                return Err(Failure::Usage("literal is p2-only".into()));
            }
            solve_p2_literal(&instance, instance.u).map_err(|e| Failure::Solver(e.to_string()))?
        }
        Algorithm::Oracle => {
            solve_oracle(&instance, instance.u).map_err(|e| Failure::Solver(e.to_string()))?
        }
    };
    eprintln!(
        "objective {} with rejection cost {} ({} accepted, {} rejected)",
        solution.objective,
        solution.rejection_cost,
        solution.accepted.len(),
        solution.rejected.len()
    );
    emit(&format_solution(&solution), out)
}

fn cmd_generate(kind: ProblemKind, n: usize, seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    let params = GenParams::new(kind, n, seed);
    let instance = generate(&params).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(&format_instance(&instance), out)
}

fn cmd_verify(instance_path: &Path, solution_path: &Path) -> Result<(), Failure> {
    let instance = load_instance(instance_path)?;
    let solution = parse_solution(&read_input(solution_path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", solution_path.display())))?;
    let report = verify(&instance, &solution);
    if report.is_valid() {
        Ok(())
    } else {
        for violation in &report.violations {
            println!("{violation}");
        }
        Err(Failure::Check)
    }
}

struct Mismatch {
    trial: usize,
    tested: i64,
    oracle: i64,
    instance: Instance,
}

fn cmd_crosscheck(
    kind: ProblemKind,
    n_max: usize,
    trials: usize,
    seed: u64,
    algorithm: CheckAlgorithm,
) -> Result<(), Failure> {
    if trials == 0 {
        return Err(Failure::Usage("trials must be >= 1".into()));
    }
    if !(2..=22).contains(&n_max) {
        return Err(Failure::Usage("n-max must be between 2 and 22".into()));
    }
    if matches!(algorithm, CheckAlgorithm::Literal) && kind != ProblemKind::P2 {
        return Err(Failure::Usage("literal is p2-only".into()));
    }

    // Pre-draw every trial's shape so the work items are independent.
    let mut rng = SplitMix64::seed_from_u64(seed);
    let span = n_max as u64 - 1;
    let plan: Vec<(usize, usize, u64)> = (0..trials)
        .map(|trial| {
            let n = 2 + (rng.next_u64() % span) as usize;
            (trial, n, rng.next_u64())
        })
        .collect();

    let check = |&(trial, n, inst_seed): &(usize, usize, u64)| -> Option<Result<Mismatch, Failure>> {
        let instance = match generate(&GenParams::new(kind, n, inst_seed)) {
            Ok(inst) => inst,
            Err(e) => return Some(Err(Failure::Solver(e.to_string()))),
        };
        let tested = match algorithm {
            CheckAlgorithm::Dp => solve_default(&instance).map_err(|e| e.to_string()),
            CheckAlgorithm::Literal => {
                solve_p2_literal(&instance, instance.u).map_err(|e| e.to_string())
            }
        };
        let tested = match tested {
            Ok(sol) => sol.objective,
            Err(e) => return Some(Err(Failure::Solver(e))),
        };
        let oracle = match solve_oracle(&instance, instance.u) {
            Ok(sol) => sol.objective,
            Err(e) => return Some(Err(Failure::Solver(e.to_string()))),
        };
        if tested != oracle {
            Some(Ok(Mismatch { trial, tested, oracle, instance }))
        } else {
            None
        }
    };

    #[cfg(feature = "parallel")]
    let first = {
        use rayon::prelude::*;
        plan.par_iter().find_map_first(check)
    };
    #[cfg(not(feature = "parallel"))]
    let first = plan.iter().find_map(check);

    match first {
        None => {
            println!("{trials} trials on {kind}, all objectives match the oracle");
            Ok(())
        }
        Some(Err(failure)) => Err(failure),
        Some(Ok(m)) => {
            println!(
                "mismatch on trial {}: solver objective {} vs oracle {}",
                m.trial, m.tested, m.oracle
            );
            print!("{}", format_instance(&m.instance));
            Err(Failure::Check)
        }
    }
}

fn cmd_bench(
    kind: ProblemKind,
    sizes: Vec<usize>,
    reps: usize,
    seed: u64,
    csv: Option<&Path>,
    solver: Solver,
    median_of_3: bool,
) -> Result<(), Failure> {
    let config = BenchConfig {
        kind,
        sizes,
        reps,
        seed,
        solver: match solver {
            Solver::Dp => SolverSelect::Dp,
            Solver::Literal => SolverSelect::Literal,
            Solver::Exact => SolverSelect::Exact,
        },
        median_of_3,
    };
    let records = run_bench(&config).map_err(|e| match e {
        BenchError::InvalidConfig(_) => Failure::Usage(e.to_string()),
        _ => Failure::Solver(e.to_string()),
    })?;

    let mut buf = Vec::new();
    write_csv(&config, &records, &mut buf).expect("write to memory");
    let text = String::from_utf8(buf).expect("csv is ascii");
    match csv {
        Some(path) => fs::write(path, &text)
            .map_err(|e| Failure::Solver(format!("cannot write {}: {e}", path.display())))?,
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
        }
    }
    if records.len() >= 2 {
        match scaling_report(kind, &records) {
            Ok(report) => eprintln!("{report}"),
            Err(e) => eprintln!("scaling fit unavailable: {e}"),
        }
    }
    Ok(())
}
