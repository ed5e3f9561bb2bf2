//! The dynamic programs.
//!
//! All four solvers share the same skeleton: sort jobs canonically, run a
//! table indexed by (job prefix, remaining budget), record each
//! accept/reject choice as one bit, and walk the bits back from the optimal
//! terminal cell to recover the partition.
//!
//! * [`solve_p1`] — makespan with release dates, table over (j, i).
//! * [`solve_p2_exact`] — total completion time; keeps a Pareto frontier of
//!   (total completion, makespan) pairs per cell, which makes it exact.
//! * [`solve_p2_literal`] — total completion time with a single scalar path
//!   per cell. Cheaper (same cell count as P1) but not guaranteed optimal;
//!   kept for comparison against the exact variant.
//! * [`solve_p3`] — weighted total completion time, table over (j, t, i)
//!   where t is the accepted-set makespan.

mod dp1;
mod dp2;
mod dp3;
mod frontier;

pub use dp2::solve_p2_exact_unpruned;
pub use frontier::{FrontierPoint, ParetoFrontier};

use thiserror::Error;

use crate::instance::{Instance, ProblemKind, Solution};

/// Objective values are non-negative 64-bit integers; the maximum value is
/// reserved as the infeasibility sentinel inside DP tables.
pub type Objective = i64;

/// Table marker for "no schedule reaches this state".
pub const INFEASIBLE: Objective = i64::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("solver expects a {expected} instance, got {got}")]
    WrongKind { expected: ProblemKind, got: ProblemKind },
}

/// Cell-visit counters, exposed so tests can pin the advertised
/// complexity: n*(B+1) cells for the budget-indexed tables and
/// n*(T+1)*(B+1) for the three-axis one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpStats {
    pub cells: u64,
}

/// Budget axis of a DP table: columns i = 0..=B with B = min(sum e_j, U).
/// Budgets above the total rejection cost buy nothing, so the axis is
/// capped before any allocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetAxis {
    b: u64,
}

impl BudgetAxis {
    pub fn new(instance: &Instance, budget: u64) -> Self {
        BudgetAxis { b: budget.min(instance.total_rejection_cost()) }
    }

    /// The effective budget B.
    pub fn bound(&self) -> u64 {
        self.b
    }

    /// Number of columns, B + 1.
    pub fn columns(&self) -> usize {
        self.b as usize + 1
    }
}

/// One bit per DP cell: set means the cell's optimal choice was "accept".
/// Rows are jobs in canonical order; columns flatten the remaining axes.
#[derive(Debug, Clone)]
pub struct DecisionMatrix {
    words: Vec<u64>,
    cols: usize,
}

impl DecisionMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let bits = rows
            .checked_mul(cols)
            .expect("decision matrix dimensions overflow");
        DecisionMatrix { words: vec![0; bits.div_ceil(64)], cols }
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, accept: bool) {
        debug_assert!(col < self.cols);
        let bit = row * self.cols + col;
        if accept {
            self.words[bit / 64] |= 1 << (bit % 64);
        }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(col < self.cols);
        let bit = row * self.cols + col;
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }
}

/// Infeasibility-aware addition: the sentinel absorbs, anything else must
/// stay clear of overflow (guaranteed by the instance magnitude caps).
#[inline]
pub(crate) fn add_guarded(a: Objective, b: u64) -> Objective {
    if a == INFEASIBLE {
        INFEASIBLE
    } else {
        debug_assert!(a.checked_add(b as i64).is_some());
        a + b as i64
    }
}

pub(crate) fn require_kind(instance: &Instance, expected: ProblemKind) -> Result<(), SolveError> {
    if instance.kind != expected {
        return Err(SolveError::WrongKind { expected, got: instance.kind });
    }
    if expected != ProblemKind::P1 && instance.jobs.iter().any(|j| j.r > 0) {
        log::warn!("release dates on a {} instance are ignored", instance.kind);
    }
    Ok(())
}

/// Jobs in canonical order, cloned so the DP can index positionally.
pub(crate) fn sorted_jobs(instance: &Instance) -> Vec<crate::instance::Job> {
    crate::order::canonical_order(instance)
        .into_iter()
        .map(|pos| instance.jobs[pos])
        .collect()
}

/// Walks a budget-indexed `DecisionMatrix` back from (n, B) to (0, .) and
/// assembles the partition in original-id terms.
pub(crate) fn reconstruct_budget_walk(
    decisions: &DecisionMatrix,
    jobs: &[crate::instance::Job],
    b: u64,
    objective: Objective,
) -> Solution {
    let mut i = b;
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    let mut rejection_cost = 0;
    for (row, job) in jobs.iter().enumerate().rev() {
        if decisions.get(row, i as usize) {
            accepted.push(job.id);
        } else {
            rejected.push(job.id);
            rejection_cost += job.e;
            debug_assert!(i >= job.e, "reject recorded without budget");
            i -= job.e;
        }
    }
    accepted.sort_unstable();
    rejected.sort_unstable();
    Solution { accepted, rejected, objective, rejection_cost }
}

/// Minimum makespan with release dates, spending at most `budget` on
/// rejections. The instance's own `u` is ignored in favor of `budget`.
pub fn solve_p1(instance: &Instance, budget: u64) -> Result<Solution, SolveError> {
    dp1::solve_with_stats(instance, budget).map(|(s, _)| s)
}

pub fn solve_p1_with_stats(instance: &Instance, budget: u64) -> Result<(Solution, DpStats), SolveError> {
    dp1::solve_with_stats(instance, budget)
}

/// Minimum total completion time; provably optimal via per-cell Pareto
/// frontiers.
pub fn solve_p2_exact(instance: &Instance, budget: u64) -> Result<Solution, SolveError> {
    dp2::solve_exact_with_stats(instance, budget).map(|(s, _)| s)
}

pub fn solve_p2_exact_with_stats(
    instance: &Instance,
    budget: u64,
) -> Result<(Solution, DpStats), SolveError> {
    dp2::solve_exact_with_stats(instance, budget)
}

/// Single-path total-completion recursion: always feasible, same table
/// size as [`solve_p1`], but not guaranteed optimal. Compare against
/// [`solve_p2_exact`].
pub fn solve_p2_literal(instance: &Instance, budget: u64) -> Result<Solution, SolveError> {
    dp2::solve_literal_with_stats(instance, budget).map(|(s, _)| s)
}

pub fn solve_p2_literal_with_stats(
    instance: &Instance,
    budget: u64,
) -> Result<(Solution, DpStats), SolveError> {
    dp2::solve_literal_with_stats(instance, budget)
}

/// Minimum weighted total completion time, table over (job, makespan,
/// budget).
pub fn solve_p3(instance: &Instance, budget: u64) -> Result<Solution, SolveError> {
    dp3::solve_with_stats(instance, budget).map(|(s, _)| s)
}

pub fn solve_p3_with_stats(instance: &Instance, budget: u64) -> Result<(Solution, DpStats), SolveError> {
    dp3::solve_with_stats(instance, budget)
}

/// Dispatches to the kind's default solver with the instance's own budget.
pub fn solve_default(instance: &Instance) -> Result<Solution, SolveError> {
    match instance.kind {
        ProblemKind::P1 => solve_p1(instance, instance.u),
        ProblemKind::P2 => solve_p2_exact(instance, instance.u),
        ProblemKind::P3 => solve_p3(instance, instance.u),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_axis_caps_at_total_rejection_cost() {
        let inst = Instance::p2(&[1, 2], &[3, 4], 100).unwrap();
        assert_eq!(BudgetAxis::new(&inst, 100).bound(), 7);
        assert_eq!(BudgetAxis::new(&inst, 5).bound(), 5);
        assert_eq!(BudgetAxis::new(&inst, 5).columns(), 6);
    }

    #[test]
    fn decision_matrix_round_trips_bits() {
        let mut m = DecisionMatrix::new(3, 70);
        m.set(0, 0, true);
        m.set(2, 69, true);
        m.set(1, 64, false);
        assert!(m.get(0, 0));
        assert!(m.get(2, 69));
        assert!(!m.get(1, 64));
        assert!(!m.get(0, 1));
    }

    #[test]
    fn sentinel_absorbs_additions() {
        assert_eq!(add_guarded(INFEASIBLE, 10), INFEASIBLE);
        assert_eq!(add_guarded(5, 10), 15);
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let inst = Instance::p2(&[1], &[1], 0).unwrap();
        assert!(matches!(
            solve_p1(&inst, 0),
            Err(SolveError::WrongKind { .. })
        ));
        assert!(matches!(
            solve_p3(&inst, 0),
            Err(SolveError::WrongKind { .. })
        ));
        let inst = Instance::p1(&[1], &[0], &[1], 0).unwrap();
        assert!(matches!(
            solve_p2_exact(&inst, 0),
            Err(SolveError::WrongKind { .. })
        ));
        assert!(matches!(
            solve_p2_literal(&inst, 0),
            Err(SolveError::WrongKind { .. })
        ));
    }
}
