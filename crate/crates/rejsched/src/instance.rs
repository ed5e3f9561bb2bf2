use std::fmt;

use thiserror::Error;

/// Guard against objective overflow: inputs are validated so that every
/// objective value stays below 2^62, leaving headroom under `i64::MAX`
/// (which solvers reserve as an infeasibility sentinel).
pub const OBJECTIVE_CAP: u128 = 1 << 62;

/// Which of the three problems an instance belongs to.
///
/// * `P1` — minimize makespan; jobs carry release dates.
/// * `P2` — minimize total completion time.
/// * `P3` — minimize total weighted completion time.
///
/// In all three, a subset of jobs may be rejected as long as the summed
/// rejection costs stay within the instance budget `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    P1,
    P2,
    P3,
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemKind::P1 => write!(f, "p1"),
            ProblemKind::P2 => write!(f, "p2"),
            ProblemKind::P3 => write!(f, "p3"),
        }
    }
}

/// One schedulable unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Job {
    /// Original 1-based index; unique within an instance. Solvers re-sort
    /// jobs internally but always report results in terms of these ids.
    pub id: u32,
    /// Processing time, >= 1.
    pub p: u64,
    /// Release date; only meaningful for P1 (defaults to 0).
    pub r: u64,
    /// Weight; only meaningful for P3 (defaults to 1).
    pub w: u64,
    /// Rejection cost, >= 1.
    pub e: u64,
}

impl Job {
    pub fn new(id: u32, p: u64, e: u64) -> Self {
        Job { id, p, r: 0, w: 1, e }
    }

    pub fn with_release(mut self, r: u64) -> Self {
        self.r = r;
        self
    }

    pub fn with_weight(mut self, w: u64) -> Self {
        self.w = w;
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("instance has no jobs")]
    Empty,
    #[error("duplicate job id {0}")]
    DuplicateId(u32),
    #[error("job {id}: {what} must be >= 1")]
    NonPositiveField { id: u32, what: &'static str },
    #[error("instance magnitude exceeds the 2^62 objective cap")]
    TooLarge,
    #[error("unknown job id {0}")]
    UnknownId(u32),
}

/// A problem instance: kind, jobs, and the rejection budget `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub kind: ProblemKind,
    pub jobs: Vec<Job>,
    pub u: u64,
}

impl Instance {
    /// Validates field ranges, id uniqueness, and the overflow caps.
    ///
    /// Release dates on P2/P3 instances are legal but ignored by every
    /// solver; a warning is logged because the intent is usually a mistake.
    pub fn new(kind: ProblemKind, jobs: Vec<Job>, u: u64) -> Result<Self, CoreError> {
        if jobs.is_empty() {
            return Err(CoreError::Empty);
        }
        let mut ids: Vec<u32> = jobs.iter().map(|j| j.id).collect();
        ids.sort_unstable();
        for pair in ids.windows(2) {
            if pair[0] == pair[1] {
                return Err(CoreError::DuplicateId(pair[0]));
            }
        }
        for job in &jobs {
            if job.p == 0 {
                return Err(CoreError::NonPositiveField { id: job.id, what: "p" });
            }
            if job.w == 0 {
                return Err(CoreError::NonPositiveField { id: job.id, what: "w" });
            }
            if job.e == 0 {
                return Err(CoreError::NonPositiveField { id: job.id, what: "e" });
            }
        }
        let total_p: u128 = jobs.iter().map(|j| j.p as u128).sum();
        let max_w = jobs.iter().map(|j| j.w).max().unwrap_or(1) as u128;
        let max_r = jobs.iter().map(|j| j.r).max().unwrap_or(0) as u128;
        if (jobs.len() as u128) * max_w * total_p >= OBJECTIVE_CAP
            || max_r + total_p >= OBJECTIVE_CAP
        {
            return Err(CoreError::TooLarge);
        }
        if kind != ProblemKind::P1 && jobs.iter().any(|j| j.r > 0) {
            log::warn!("release dates on a {kind} instance are ignored");
        }
        Ok(Instance { kind, jobs, u })
    }

    /// P1 instance from parallel slices; ids are assigned 1..=n in order.
    pub fn p1(p: &[u64], r: &[u64], e: &[u64], u: u64) -> Result<Self, CoreError> {
        assert_eq!(p.len(), r.len());
        assert_eq!(p.len(), e.len());
        let jobs = p
            .iter()
            .zip(r)
            .zip(e)
            .enumerate()
            .map(|(k, ((&p, &r), &e))| Job::new(k as u32 + 1, p, e).with_release(r))
            .collect();
        Instance::new(ProblemKind::P1, jobs, u)
    }

    /// P2 instance from parallel slices; ids are assigned 1..=n in order.
    pub fn p2(p: &[u64], e: &[u64], u: u64) -> Result<Self, CoreError> {
        assert_eq!(p.len(), e.len());
        let jobs = p
            .iter()
            .zip(e)
            .enumerate()
            .map(|(k, (&p, &e))| Job::new(k as u32 + 1, p, e))
            .collect();
        Instance::new(ProblemKind::P2, jobs, u)
    }

    /// P3 instance from parallel slices; ids are assigned 1..=n in order.
    pub fn p3(p: &[u64], w: &[u64], e: &[u64], u: u64) -> Result<Self, CoreError> {
        assert_eq!(p.len(), w.len());
        assert_eq!(p.len(), e.len());
        let jobs = p
            .iter()
            .zip(w)
            .zip(e)
            .enumerate()
            .map(|(k, ((&p, &w), &e))| Job::new(k as u32 + 1, p, e).with_weight(w))
            .collect();
        Instance::new(ProblemKind::P3, jobs, u)
    }

    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    /// Sum of all rejection costs; rejecting every job costs this much.
    pub fn total_rejection_cost(&self) -> u64 {
        self.jobs.iter().map(|j| j.e).sum()
    }

    /// Sum of all processing times.
    pub fn total_processing(&self) -> u64 {
        self.jobs.iter().map(|j| j.p).sum()
    }

    /// Same instance with a different budget; handy for budget sweeps.
    pub fn with_budget(&self, u: u64) -> Self {
        Instance { u, ..self.clone() }
    }
}

/// An accept/reject partition together with its objective value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Ids of accepted jobs, ascending.
    pub accepted: Vec<u32>,
    /// Ids of rejected jobs, ascending.
    pub rejected: Vec<u32>,
    /// Objective of the accepted set under the instance kind.
    pub objective: i64,
    /// Sum of rejection costs over `rejected`.
    pub rejection_cost: u64,
}

/// Why a solution failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// An id appears in both lists, or twice in one list.
    PartitionOverlap,
    /// Some instance id appears in neither list.
    PartitionIncomplete,
    /// Recomputed rejection cost exceeds the budget, or the stated
    /// `rejection_cost` does not match the rejected set.
    BudgetExceeded,
    /// Stated objective differs from re-evaluating the accepted set.
    ObjectiveMismatch,
    /// A listed id does not exist in the instance.
    UnknownId,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Violation::PartitionOverlap => "PARTITION_OVERLAP",
            Violation::PartitionIncomplete => "PARTITION_INCOMPLETE",
            Violation::BudgetExceeded => "BUDGET_EXCEEDED",
            Violation::ObjectiveMismatch => "OBJECTIVE_MISMATCH",
            Violation::UnknownId => "UNKNOWN_ID",
        };
        f.write_str(s)
    }
}

/// Outcome of checking a `Solution` against its `Instance`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_instance() {
        assert_eq!(
            Instance::new(ProblemKind::P2, vec![], 10),
            Err(CoreError::Empty)
        );
    }

    #[test]
    fn rejects_duplicate_ids() {
        let jobs = vec![Job::new(1, 5, 3), Job::new(1, 2, 4)];
        assert_eq!(
            Instance::new(ProblemKind::P2, jobs, 10),
            Err(CoreError::DuplicateId(1))
        );
    }

    #[test]
    fn rejects_zero_fields() {
        let jobs = vec![Job::new(1, 0, 3)];
        assert!(matches!(
            Instance::new(ProblemKind::P2, jobs, 10),
            Err(CoreError::NonPositiveField { what: "p", .. })
        ));
        let jobs = vec![Job::new(1, 5, 0)];
        assert!(matches!(
            Instance::new(ProblemKind::P2, jobs, 10),
            Err(CoreError::NonPositiveField { what: "e", .. })
        ));
    }

    #[test]
    fn rejects_oversized_magnitudes() {
        // One huge release date blows the cap even with a single tiny job.
        let jobs = vec![Job::new(1, 1, 1).with_release(u64::MAX / 2)];
        assert_eq!(
            Instance::new(ProblemKind::P1, jobs, 10),
            Err(CoreError::TooLarge)
        );
    }

    #[test]
    fn slice_constructors_assign_ids_in_order() {
        let inst = Instance::p3(&[5, 20], &[8, 20], &[36, 23], 88).unwrap();
        assert_eq!(inst.jobs[0].id, 1);
        assert_eq!(inst.jobs[1].id, 2);
        assert_eq!(inst.jobs[1].w, 20);
        assert_eq!(inst.total_rejection_cost(), 59);
        assert_eq!(inst.total_processing(), 25);
    }
}
