//! Wall-clock timing harness for the solvers.
//!
//! For each requested size it generates `reps` seeded instances, times the
//! solve call alone (generation and output excluded), and reports average
//! and worst milliseconds per size together with the budget window the
//! instances were drawn from. A small log-log regression then checks that
//! measured times grow roughly like the table sizes say they should.

use std::fmt;
use std::io;
use std::time::Instant;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::generator::{generate, GenParams};
use crate::instance::{Instance, ProblemKind, Solution};
use crate::solvers::{self, SolveError};

type SolverFn = fn(&Instance, u64) -> Result<Solution, SolveError>;

/// Which solver the harness times. `Dp` is the kind's default exact
/// solver; the other two select a P2 variant explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverSelect {
    Dp,
    Literal,
    Exact,
}

impl fmt::Display for SolverSelect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverSelect::Dp => write!(f, "dp"),
            SolverSelect::Literal => write!(f, "literal"),
            SolverSelect::Exact => write!(f, "exact"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub kind: ProblemKind,
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub solver: SolverSelect,
    /// Time each instance three times and keep the median, for noisy boxes.
    pub median_of_3: bool,
}

impl BenchConfig {
    pub fn new(kind: ProblemKind, sizes: Vec<usize>, reps: usize, seed: u64) -> Self {
        BenchConfig { kind, sizes, reps, seed, solver: SolverSelect::Dp, median_of_3: false }
    }
}

/// One report row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub u_lo: u64,
    pub u_hi: u64,
    pub avg_ms: f64,
    pub worst_ms: f64,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("config invalid: {0}")]
    InvalidConfig(String),
    #[error("n = {n}, rep {rep}: {source}")]
    Solve { n: usize, rep: usize, source: SolveError },
    #[error("scaling fit needs at least 2 records, got {0}")]
    TooFewRecords(usize),
}

fn pick_solver(kind: ProblemKind, select: SolverSelect) -> Result<SolverFn, BenchError> {
    match (kind, select) {
        (ProblemKind::P1, SolverSelect::Dp) => Ok(solvers::solve_p1),
        (ProblemKind::P2, SolverSelect::Dp | SolverSelect::Exact) => Ok(solvers::solve_p2_exact),
        (ProblemKind::P2, SolverSelect::Literal) => Ok(solvers::solve_p2_literal),
        (ProblemKind::P3, SolverSelect::Dp) => Ok(solvers::solve_p3),
        (kind, select) => Err(BenchError::InvalidConfig(format!(
            "solver `{select}` does not apply to {kind}"
        ))),
    }
}

/// Runs the whole grid; rows come back in ascending n. Any solver failure
/// aborts the affected row (and the run) with context.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    if config.sizes.is_empty() {
        return Err(BenchError::InvalidConfig("sizes must be non-empty".into()));
    }
    if config.reps == 0 {
        return Err(BenchError::InvalidConfig("reps must be >= 1".into()));
    }
    let solver = pick_solver(config.kind, config.solver)?;

    let mut sizes = config.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();

    let mut seeds = SplitMix64::seed_from_u64(config.seed);
    let mut records = Vec::with_capacity(sizes.len());
    for &n in &sizes {
        let params = GenParams::new(config.kind, n, 0);
        let (u_lo, u_hi) = params.u_interval();
        let mut total_ms = 0.0;
        let mut worst_ms: f64 = 0.0;
        for rep in 0..config.reps {
            let instance = generate(&GenParams { seed: seeds.next_u64(), ..params.clone() })
                .map_err(|e| BenchError::InvalidConfig(e.to_string()))?;
            let ms = time_solve(solver, &instance, config.median_of_3)
                .map_err(|source| BenchError::Solve { n, rep, source })?;
            total_ms += ms;
            worst_ms = worst_ms.max(ms);
        }
        records.push(BenchRecord {
            n,
            u_lo,
            u_hi,
            avg_ms: total_ms / config.reps as f64,
            worst_ms,
        });
    }
    Ok(records)
}

fn time_solve(solver: SolverFn, instance: &Instance, median_of_3: bool) -> Result<f64, SolveError> {
    let runs = if median_of_3 { 3 } else { 1 };
    let mut times = Vec::with_capacity(runs);
    for _ in 0..runs {
        let start = Instant::now();
        solver(instance, instance.u)?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
    }
    times.sort_by(|a, b| a.total_cmp(b));
    Ok(times[times.len() / 2])
}

/// Exact header the CSV output carries.
pub const CSV_HEADER: &str = "problem,n,u_lo,u_hi,reps,avg_ms,worst_ms";

pub fn write_csv(
    config: &BenchConfig,
    records: &[BenchRecord],
    out: &mut dyn io::Write,
) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for rec in records {
        writeln!(
            out,
            "{},{},{},{},{},{:.3},{:.3}",
            config.kind, rec.n, rec.u_lo, rec.u_hi, config.reps, rec.avg_ms, rec.worst_ms
        )?;
    }
    Ok(())
}

/// Slope of log(avg_ms) against the log of the expected table work:
/// n * U_mid for the budget-indexed tables, n^2 * U_mid for the
/// three-axis one (total processing grows linearly in n under the
/// generator design). Anything far from 1 is suspicious, hence the flag
/// band [0.6, 1.6].
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub slope: f64,
    pub flagged: bool,
}

pub const SLOPE_BAND: (f64, f64) = (0.6, 1.6);

impl fmt::Display for ScalingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = SLOPE_BAND;
        if self.flagged {
            write!(f, "FLAG: scaling slope {:.3} outside [{lo}, {hi}]", self.slope)
        } else {
            write!(f, "scaling slope {:.3} within [{lo}, {hi}]", self.slope)
        }
    }
}

pub fn scaling_report(kind: ProblemKind, records: &[BenchRecord]) -> Result<ScalingReport, BenchError> {
    if records.len() < 2 {
        return Err(BenchError::TooFewRecords(records.len()));
    }
    let points: Vec<(f64, f64)> = records
        .iter()
        .map(|rec| {
            let n = rec.n as f64;
            let u_mid = (rec.u_lo + rec.u_hi) as f64 / 2.0;
            let work = match kind {
                ProblemKind::P1 | ProblemKind::P2 => n * u_mid,
                ProblemKind::P3 => n * n * u_mid,
            };
            (work.ln(), rec.avg_ms.max(1e-9).ln())
        })
        .collect();
    let slope = least_squares_slope(&points);
    let (lo, hi) = SLOPE_BAND;
    Ok(ScalingReport { slope, flagged: !(lo..=hi).contains(&slope) })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in points {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    if den == 0.0 {
        0.0 // degenerate: all records at the same size
    } else {
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_rep_means_avg_equals_worst() {
        let config = BenchConfig::new(ProblemKind::P2, vec![10], 1, 9);
        let records = run_bench(&config).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].avg_ms, records[0].worst_ms);
        assert!(records[0].avg_ms > 0.0);
    }

    #[test]
    fn rows_come_back_in_ascending_n_with_design_intervals() {
        let config = BenchConfig::new(ProblemKind::P3, vec![20, 10], 2, 1);
        let records = run_bench(&config).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!((records[0].n, records[0].u_lo, records[0].u_hi), (10, 75, 100));
        assert_eq!((records[1].n, records[1].u_lo, records[1].u_hi), (20, 150, 200));
        assert!(records.iter().all(|r| r.worst_ms >= r.avg_ms));
    }

    #[test]
    fn csv_has_header_and_one_row_per_size() {
        let config = BenchConfig::new(ProblemKind::P2, vec![10, 15], 2, 3);
        let records = run_bench(&config).unwrap();
        let mut buf = Vec::new();
        write_csv(&config, &records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("p2,10,"));
        assert!(lines[2].starts_with("p2,15,"));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let config = BenchConfig::new(ProblemKind::P2, vec![], 1, 0);
        assert!(matches!(run_bench(&config), Err(BenchError::InvalidConfig(_))));
        let config = BenchConfig::new(ProblemKind::P2, vec![10], 0, 0);
        assert!(matches!(run_bench(&config), Err(BenchError::InvalidConfig(_))));
        let mut config = BenchConfig::new(ProblemKind::P1, vec![10], 1, 0);
        config.solver = SolverSelect::Literal;
        assert!(matches!(run_bench(&config), Err(BenchError::InvalidConfig(_))));
    }

    #[test]
    fn identical_records_give_flagged_zero_slope() {
        let rec = BenchRecord { n: 10, u_lo: 75, u_hi: 100, avg_ms: 5.0, worst_ms: 6.0 };
        let report = scaling_report(ProblemKind::P1, &[rec.clone(), rec]).unwrap();
        assert_eq!(report.slope, 0.0);
        assert!(report.flagged);
        assert!(report.to_string().starts_with("FLAG"));
    }

    #[test]
    fn superlinear_blowup_is_flagged() {
        let mk = |n: usize, ms: f64| BenchRecord {
            n,
            u_lo: 10 * n as u64,
            u_hi: 15 * n as u64,
            avg_ms: ms,
            worst_ms: ms,
        };
        // Times growing like the cube of the work term.
        let records = vec![mk(100, 1.0), mk(200, 64.0), mk(400, 4096.0)];
        let report = scaling_report(ProblemKind::P1, &records).unwrap();
        assert!(report.slope > 1.6);
        assert!(report.flagged);
    }

    #[test]
    fn linear_growth_sits_inside_the_band() {
        let mk = |n: usize, ms: f64| BenchRecord {
            n,
            u_lo: 10 * n as u64,
            u_hi: 15 * n as u64,
            avg_ms: ms,
            worst_ms: ms,
        };
        // Work term n * U_mid is quadratic in n; these times follow it.
        let records = vec![mk(500, 30.0), mk(1000, 120.0), mk(1500, 270.0), mk(2000, 480.0)];
        let report = scaling_report(ProblemKind::P1, &records).unwrap();
        assert!(!report.flagged, "slope {}", report.slope);
    }

    #[test]
    fn too_few_records_is_an_error() {
        assert!(matches!(
            scaling_report(ProblemKind::P1, &[]),
            Err(BenchError::TooFewRecords(0))
        ));
    }
}
