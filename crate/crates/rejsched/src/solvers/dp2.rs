//! Total completion time under a rejection budget, two ways.
//!
//! The literal recursion keeps one (value, makespan) path per (j, i) cell
//! and charges an accepted job its recorded makespan plus p_j. That is the
//! cheap table — n*(B+1) cells — but committing to a single path can lock
//! out the true optimum (see `literal_is_suboptimal_on_witness` below).
//!
//! The exact variant replaces the scalar cell with a Pareto frontier of
//! (total completion, makespan) pairs and reconstructs through per-point
//! parent links.

use crate::instance::{Instance, ProblemKind, Solution};
use crate::solvers::frontier::{FrontierPoint, ParetoFrontier};
use crate::solvers::{
    reconstruct_budget_walk, require_kind, sorted_jobs, BudgetAxis, DecisionMatrix, DpStats,
    SolveError,
};

pub(super) fn solve_literal_with_stats(
    instance: &Instance,
    budget: u64,
) -> Result<(Solution, DpStats), SolveError> {
    require_kind(instance, ProblemKind::P2)?;
    let jobs = sorted_jobs(instance);
    let n = jobs.len();
    let axis = BudgetAxis::new(instance, budget);
    let cols = axis.columns();

    // (accumulated total completion, makespan) of the one recorded path.
    let mut prev: Vec<(i64, i64)> = vec![(0, 0); cols];
    let mut cur: Vec<(i64, i64)> = vec![(0, 0); cols];
    let mut decisions = DecisionMatrix::new(n, cols);
    let mut cells = 0u64;

    for (row, job) in jobs.iter().enumerate() {
        let e = job.e as usize;
        let p = job.p as i64;
        for i in 0..cols {
            cells += 1;
            let (value, makespan) = prev[i];
            let accept = (value + makespan + p, makespan + p);
            // Lexicographic on (value, makespan); accept wins full ties.
            let take_accept = e > i || accept <= prev[i - e];
            if take_accept {
                decisions.set(row, i, true);
                cur[i] = accept;
            } else {
                cur[i] = prev[i - e];
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }

    let objective = prev[cols - 1].0;
    let solution = reconstruct_budget_walk(&decisions, &jobs, axis.bound(), objective);
    debug_assert_eq!(
        crate::evaluate::evaluate_schedule(instance, &solution.accepted).unwrap(),
        objective
    );
    Ok((solution, DpStats { cells }))
}

/// Backtracking node: which choice produced a frontier point and where it
/// came from. Node 0 is the empty-prefix root.
#[derive(Debug, Clone, Copy)]
struct Link {
    parent: u32,
    accepted: bool,
}

pub(super) fn solve_exact_with_stats(
    instance: &Instance,
    budget: u64,
) -> Result<(Solution, DpStats), SolveError> {
    solve_exact_inner(instance, budget, true)
}

/// Exact solver with dominance pruning disabled; every reachable
/// (total completion, makespan) pair is kept. Exponentially wasteful, so
/// only suitable for small n — it exists to demonstrate that pruning never
/// changes the optimum.
pub fn solve_p2_exact_unpruned(instance: &Instance, budget: u64) -> Result<Solution, SolveError> {
    solve_exact_inner(instance, budget, false).map(|(s, _)| s)
}

fn solve_exact_inner(
    instance: &Instance,
    budget: u64,
    prune: bool,
) -> Result<(Solution, DpStats), SolveError> {
    require_kind(instance, ProblemKind::P2)?;
    let jobs = sorted_jobs(instance);
    let axis = BudgetAxis::new(instance, budget);
    let cols = axis.columns();

    let mut links: Vec<Link> = vec![Link { parent: u32::MAX, accepted: false }];
    let root = FrontierPoint { total_completion: 0, makespan: 0, payload: 0 };
    let mut prev: Vec<ParetoFrontier> = vec![ParetoFrontier::singleton(root); cols];
    let mut cells = 0u64;

    for job in &jobs {
        let e = job.e as usize;
        let p = job.p as i64;
        let mut cur: Vec<ParetoFrontier> = Vec::with_capacity(cols);
        for i in 0..cols {
            cells += 1;
            // Accept candidates first so full ties resolve toward accept.
            let mut meta: Vec<Link> = Vec::new();
            let mut candidates: Vec<FrontierPoint> = Vec::new();
            for pt in prev[i].points() {
                meta.push(Link { parent: pt.payload, accepted: true });
                candidates.push(FrontierPoint {
                    total_completion: pt.total_completion + pt.makespan + p,
                    makespan: pt.makespan + p,
                    payload: meta.len() as u32 - 1,
                });
            }
            if e <= i {
                for pt in prev[i - e].points() {
                    meta.push(Link { parent: pt.payload, accepted: false });
                    candidates.push(FrontierPoint { payload: meta.len() as u32 - 1, ..*pt });
                }
            }
            let survivors = if prune {
                ParetoFrontier::from_candidates(candidates)
            } else {
                dedup_only(candidates)
            };
            debug_assert!(!survivors.is_empty());
            debug_assert!(!prune || survivors.is_nondominated());
            let resolved: Vec<FrontierPoint> = survivors
                .points()
                .iter()
                .map(|pt| {
                    links.push(meta[pt.payload as usize]);
                    let node = u32::try_from(links.len() - 1)
                        .expect("backtracking arena exceeds u32 index space");
                    FrontierPoint { payload: node, ..*pt }
                })
                .collect();
            cur.push(if prune {
                ParetoFrontier::from_sorted(resolved)
            } else {
                ParetoFrontier::from_sorted_unchecked(resolved)
            });
        }
        prev = cur;
    }

    let best = prev[cols - 1].best().expect("frontier never empty");
    let objective = best.total_completion;

    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    let mut rejection_cost = 0;
    let mut node = best.payload;
    for job in jobs.iter().rev() {
        let link = links[node as usize];
        if link.accepted {
            accepted.push(job.id);
        } else {
            rejected.push(job.id);
            rejection_cost += job.e;
        }
        node = link.parent;
    }
    debug_assert_eq!(node, 0, "backtrack must end at the root");
    accepted.sort_unstable();
    rejected.sort_unstable();

    let solution = Solution { accepted, rejected, objective, rejection_cost };
    debug_assert_eq!(
        crate::evaluate::evaluate_schedule(instance, &solution.accepted).unwrap(),
        objective
    );
    Ok((solution, DpStats { cells }))
}

/// Keeps every distinct (S, M) pair, first emission winning, sorted the
/// same way as the pruned frontier.
fn dedup_only(mut candidates: Vec<FrontierPoint>) -> ParetoFrontier {
    candidates.sort_by(|a, b| {
        a.total_completion
            .cmp(&b.total_completion)
            .then(a.makespan.cmp(&b.makespan))
    });
    candidates.dedup_by_key(|p| (p.total_completion, p.makespan));
    ParetoFrontier::from_sorted_unchecked(candidates)
}
