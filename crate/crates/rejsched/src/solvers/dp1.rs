//! Makespan with release dates under a rejection budget.
//!
//! State: f(j, i) = minimum completion time of a feasible schedule of the
//! first j jobs (in earliest-release-date order) spending at most i on
//! rejections. Accepting job j completes at max(f(j-1, i), r_j) + p_j;
//! rejecting is allowed when e_j <= i and carries f(j-1, i - e_j) forward.

use crate::instance::{Instance, ProblemKind, Solution};
use crate::solvers::{
    reconstruct_budget_walk, require_kind, sorted_jobs, BudgetAxis, DecisionMatrix, DpStats,
    Objective, SolveError,
};

pub(super) fn solve_with_stats(
    instance: &Instance,
    budget: u64,
) -> Result<(Solution, DpStats), SolveError> {
    require_kind(instance, ProblemKind::P1)?;
    let jobs = sorted_jobs(instance);
    let n = jobs.len();
    let axis = BudgetAxis::new(instance, budget);
    let cols = axis.columns();

    let mut prev: Vec<Objective> = vec![0; cols];
    let mut cur: Vec<Objective> = vec![0; cols];
    let mut decisions = DecisionMatrix::new(n, cols);
    let mut cells = 0u64;

    for (row, job) in jobs.iter().enumerate() {
        let e = job.e as usize;
        for i in 0..cols {
            cells += 1;
            let accept = prev[i].max(job.r as i64) + job.p as i64;
            let value = if e <= i && prev[i - e] < accept {
                prev[i - e]
            } else {
                decisions.set(row, i, true);
                accept
            };
            cur[i] = value;
        }
        debug_assert!(cur.windows(2).all(|w| w[0] >= w[1]), "row not monotone in budget");
        std::mem::swap(&mut prev, &mut cur);
    }

    let objective = prev[cols - 1];
    let solution = reconstruct_budget_walk(&decisions, &jobs, axis.bound(), objective);
    debug_assert_eq!(
        crate::evaluate::evaluate_schedule(instance, &solution.accepted).unwrap(),
        objective
    );
    Ok((solution, DpStats { cells }))
}
