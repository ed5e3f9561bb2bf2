//! Nondominated (total completion time, makespan) pairs for one DP state.
//!
//! A scalar value per (j, i) cell is not enough for the total-completion
//! objective: the cost of accepting a future job depends on the makespan
//! of the partial schedule, not just on its accumulated objective. Two
//! partial schedules are therefore incomparable when one has the smaller
//! sum and the other the smaller makespan, and the cell has to keep every
//! such pair.

use crate::solvers::Objective;

/// One candidate partial schedule: its objective so far, its makespan, and
/// an opaque payload (the solvers store backtracking links there).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrontierPoint {
    pub total_completion: Objective,
    pub makespan: Objective,
    pub payload: u32,
}

/// Invariant: points are sorted by strictly increasing `total_completion`
/// and strictly decreasing `makespan`, so no point dominates another.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParetoFrontier {
    points: Vec<FrontierPoint>,
}

impl ParetoFrontier {
    pub fn singleton(point: FrontierPoint) -> Self {
        ParetoFrontier { points: vec![point] }
    }

    pub fn points(&self) -> &[FrontierPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The point with the smallest objective; `None` on an empty frontier.
    pub fn best(&self) -> Option<&FrontierPoint> {
        self.points.first()
    }

    /// Builds a frontier from arbitrary candidates, dropping every
    /// dominated one. On full (S, M) ties the earliest candidate wins, so
    /// callers control tie preference by emission order.
    pub fn from_candidates(mut candidates: Vec<FrontierPoint>) -> Self {
        candidates.sort_by(|a, b| {
            a.total_completion
                .cmp(&b.total_completion)
                .then(a.makespan.cmp(&b.makespan))
        });
        let mut points: Vec<FrontierPoint> = Vec::new();
        for cand in candidates {
            match points.last() {
                Some(last) if cand.makespan >= last.makespan => {}
                _ => points.push(cand),
            }
        }
        ParetoFrontier { points }
    }

    /// Wraps points already sorted by ascending sum / descending makespan.
    pub(crate) fn from_sorted(points: Vec<FrontierPoint>) -> Self {
        let f = ParetoFrontier { points };
        debug_assert!(f.is_nondominated());
        f
    }

    /// Like `from_sorted` but tolerates dominated points; used by the
    /// pruning-disabled solver variant.
    pub(crate) fn from_sorted_unchecked(points: Vec<FrontierPoint>) -> Self {
        ParetoFrontier { points }
    }

    /// True when the sortedness invariant (and hence mutual
    /// nondominance) holds.
    pub fn is_nondominated(&self) -> bool {
        self.points.windows(2).all(|w| {
            w[0].total_completion < w[1].total_completion && w[0].makespan > w[1].makespan
        })
    }
}
