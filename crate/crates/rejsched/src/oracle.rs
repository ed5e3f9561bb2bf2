//! Exhaustive ground truth: try every accept/reject partition.
//!
//! Deliberately naive — every subset is re-evaluated from scratch through
//! [`evaluate_schedule`] so the oracle shares no machinery with the DP
//! tables it cross-checks. With the `parallel` feature the 2^n mask range
//! is sharded across rayon workers; the reduction is associative and the
//! tie rule total, so the result is identical to the sequential pass.

use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::evaluate::evaluate_schedule;
use crate::instance::{Instance, Solution};
use crate::order::canonical_order;

/// Caps instance size; 2^n subsets stop being fun quickly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_n: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit { max_n: 22 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("INSTANCE_TOO_LARGE: n = {n} exceeds the oracle cap {max_n}")]
    InstanceTooLarge { n: usize, max_n: usize },
}

/// Minimizes over every subset whose rejection cost fits the budget.
/// Objective ties break toward the lexicographically smallest rejected id
/// list, making the output fully deterministic.
pub fn solve_oracle(instance: &Instance, budget: u64) -> Result<Solution, OracleError> {
    solve_oracle_limited(instance, budget, OracleLimit::default())
}

/// Always-sequential reference path, independent of the `parallel` feature.
pub fn solve_oracle_sequential(instance: &Instance, budget: u64) -> Result<Solution, OracleError> {
    let ctx = Context::new(instance, budget, OracleLimit::default())?;
    let best = (0..ctx.mask_count)
        .filter_map(|mask| ctx.candidate(mask))
        .reduce(better)
        .expect("mask 0 is always feasible");
    Ok(ctx.into_solution(best))
}

pub fn solve_oracle_limited(
    instance: &Instance,
    budget: u64,
    limit: OracleLimit,
) -> Result<Solution, OracleError> {
    let ctx = Context::new(instance, budget, limit)?;

    #[cfg(feature = "parallel")]
    let best = (0..ctx.mask_count as usize)
        .into_par_iter()
        .with_min_len(1 << 10)
        .filter_map(|mask| ctx.candidate(mask as u64))
        .reduce_with(better)
        .expect("mask 0 is always feasible");

    #[cfg(not(feature = "parallel"))]
    let best = (0..ctx.mask_count)
        .filter_map(|mask| ctx.candidate(mask))
        .reduce(better)
        .expect("mask 0 is always feasible");

    Ok(ctx.into_solution(best))
}

/// (objective, rejected ids ascending, rejection cost)
type Candidate = (i64, Vec<u32>, u64);

fn better(a: Candidate, b: Candidate) -> Candidate {
    if (b.0, &b.1) < (a.0, &a.1) {
        b
    } else {
        a
    }
}

struct Context<'a> {
    instance: &'a Instance,
    budget: u64,
    /// Ids in canonical order; mask bit k rejects the k-th of these.
    ids: Vec<u32>,
    /// Rejection cost of the k-th job in canonical order.
    costs: Vec<u64>,
    mask_count: u64,
}

impl<'a> Context<'a> {
    fn new(instance: &'a Instance, budget: u64, limit: OracleLimit) -> Result<Self, OracleError> {
        let n = instance.n();
        let max_n = limit.max_n.min(63); // mask arithmetic lives in u64
        if n > max_n {
            return Err(OracleError::InstanceTooLarge { n, max_n: limit.max_n });
        }
        let order = canonical_order(instance);
        let ids = order.iter().map(|&pos| instance.jobs[pos].id).collect();
        let costs = order.iter().map(|&pos| instance.jobs[pos].e).collect();
        Ok(Context { instance, budget, ids, costs, mask_count: 1u64 << n })
    }

    fn candidate(&self, mask: u64) -> Option<Candidate> {
        let mut cost = 0u64;
        let mut rejected = Vec::new();
        let mut accepted = Vec::new();
        for (k, &id) in self.ids.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rejected.push(id);
                cost += self.costs[k];
            } else {
                accepted.push(id);
            }
        }
        if cost > self.budget {
            return None;
        }
        let objective = evaluate_schedule(self.instance, &accepted)
            .expect("oracle uses only instance ids");
        rejected.sort_unstable();
        Some((objective, rejected, cost))
    }

    fn into_solution(self, best: Candidate) -> Solution {
        let (objective, rejected, rejection_cost) = best;
        let mut accepted: Vec<u32> = self
            .ids
            .iter()
            .copied()
            .filter(|id| !rejected.contains(id))
            .collect();
        accepted.sort_unstable();
        Solution { accepted, rejected, objective, rejection_cost }
    }
}
