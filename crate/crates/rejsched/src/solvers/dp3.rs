//! Weighted total completion time under a rejection budget.
//!
//! Weights break the scalar-cell trick for good: the charge of accepting a
//! job is w_j times its completion time, so the table carries the
//! accepted-set makespan t as an explicit axis. State: f(j, t, i) =
//! minimum weighted completion sum over schedules of the first j jobs (in
//! weighted-shortest-processing-time order) whose accepted jobs finish
//! exactly at t, spending at most i on rejections. Four cases per cell:
//!
//! * p_j > t, e_j > i  — unreachable, sentinel
//! * p_j <= t, e_j > i — must accept: f(j-1, t-p_j, i) + w_j * t
//! * p_j > t, e_j <= i — must reject: f(j-1, t, i-e_j)
//! * otherwise         — min of both
//!
//! The answer is the best finite cell over t at the full budget column.

use crate::instance::{Instance, ProblemKind, Solution};
use crate::solvers::{
    add_guarded, require_kind, sorted_jobs, BudgetAxis, DecisionMatrix, DpStats, Objective,
    SolveError, INFEASIBLE,
};

pub(super) fn solve_with_stats(
    instance: &Instance,
    budget: u64,
) -> Result<(Solution, DpStats), SolveError> {
    require_kind(instance, ProblemKind::P3)?;
    let jobs = sorted_jobs(instance);
    let n = jobs.len();
    let axis = BudgetAxis::new(instance, budget);
    let cols = axis.columns();
    let horizon = instance.total_processing() as usize; // T
    let plane = (horizon + 1) * cols;

    let mut prev: Vec<Objective> = vec![INFEASIBLE; plane];
    let mut cur: Vec<Objective> = vec![INFEASIBLE; plane];
    prev[..cols].fill(0); // t = 0: empty schedule at any budget
    let mut decisions = DecisionMatrix::new(n, plane);
    let mut cells = 0u64;

    for (row, job) in jobs.iter().enumerate() {
        let p = job.p as usize;
        let e = job.e as usize;
        for t in 0..=horizon {
            for i in 0..cols {
                cells += 1;
                let accept = if p <= t {
                    add_guarded(prev[(t - p) * cols + i], job.w * t as u64)
                } else {
                    INFEASIBLE
                };
                let reject = if e <= i { prev[t * cols + (i - e)] } else { INFEASIBLE };
                if accept <= reject {
                    decisions.set(row, t * cols + i, true);
                    cur[t * cols + i] = accept;
                } else {
                    cur[t * cols + i] = reject;
                }
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }

    // Smallest finite value over t at the full-budget column; ties go to
    // the smallest t.
    let mut best_t = 0;
    let mut objective = INFEASIBLE;
    for t in 0..=horizon {
        let v = prev[t * cols + (cols - 1)];
        if v < objective {
            objective = v;
            best_t = t;
        }
    }
    debug_assert_ne!(objective, INFEASIBLE, "all-accept is always reachable");
    // Budget monotonicity makes the full scan over (t, i) redundant; check
    // that claim whenever assertions are on.
    debug_assert_eq!(objective, *prev.iter().min().unwrap());

    let mut t = best_t;
    let mut i = axis.bound() as usize;
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    let mut rejection_cost = 0;
    for (row, job) in jobs.iter().enumerate().rev() {
        if decisions.get(row, t * cols + i) {
            accepted.push(job.id);
            t -= job.p as usize;
        } else {
            rejected.push(job.id);
            rejection_cost += job.e;
            i -= job.e as usize;
        }
    }
    debug_assert_eq!(t, 0);
    accepted.sort_unstable();
    rejected.sort_unstable();

    let solution = Solution { accepted, rejected, objective, rejection_cost };
    debug_assert_eq!(
        crate::evaluate::evaluate_schedule(instance, &solution.accepted).unwrap(),
        objective
    );
    Ok((solution, DpStats { cells }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluate::{evaluate_schedule, verify};
    use crate::solvers::solve_p3;

    fn example3() -> Instance {
        Instance::p3(
            &[5, 20, 28, 13, 33, 35, 16, 35, 41, 48],
            &[8, 20, 24, 9, 18, 18, 8, 17, 19, 1],
            &[36, 23, 6, 31, 3, 40, 22, 10, 32, 21],
            88,
        )
        .unwrap()
    }

    #[test]
    fn known_ten_job_instance() {
        let inst = example3();
        let sol = solve_p3(&inst, inst.u).unwrap();
        assert_eq!(sol.objective, 1825);
        assert!(sol.rejection_cost <= 88);
        assert!(verify(&inst, &sol).is_valid());
    }

    #[test]
    fn zero_budget_accepts_everything() {
        let inst = example3().with_budget(0);
        let sol = solve_p3(&inst, 0).unwrap();
        assert!(sol.rejected.is_empty());
        assert_eq!(
            sol.objective,
            evaluate_schedule(&inst, &(1..=10).collect::<Vec<_>>()).unwrap()
        );
    }

    #[test]
    fn full_budget_rejects_everything() {
        let inst = example3();
        let total = inst.total_rejection_cost();
        assert_eq!(total, 224);
        let sol = solve_p3(&inst.with_budget(total), total).unwrap();
        assert_eq!(sol.objective, 0);
        assert!(sol.accepted.is_empty());
    }

    #[test]
    fn forced_acceptance_of_expensive_jobs() {
        // Rejection costs above the budget pin both jobs into the schedule.
        let inst = Instance::p3(&[3, 2], &[1, 5], &[50, 60], 10).unwrap();
        let sol = solve_p3(&inst, 10).unwrap();
        assert_eq!(sol.accepted, vec![1, 2]);
        // WSPT order: job 2 (2/5) before job 1 (3/1), so 5*2 + 1*5.
        assert_eq!(sol.objective, 15);
    }

    #[test]
    fn cell_count_within_table_bound() {
        let inst = example3();
        let (_, stats) = solve_with_stats(&inst, inst.u).unwrap();
        let t = inst.total_processing();
        assert_eq!(t, 274);
        assert_eq!(stats.cells, 10 * (t + 1) * 89);
    }
}
