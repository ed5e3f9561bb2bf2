use std::collections::HashSet;

use crate::instance::{CoreError, Instance, ProblemKind, Solution, VerificationReport, Violation};
use crate::order::canonical_order;

/// Objective of scheduling exactly the `accepted` jobs in canonical order.
///
/// P1: makespan with `C_j = max(C_prev, r_j) + p_j`. P2: sum of completion
/// times. P3: weighted sum of completion times. An empty set scores 0.
/// Duplicate ids are treated as set membership.
pub fn evaluate_schedule(instance: &Instance, accepted: &[u32]) -> Result<i64, CoreError> {
    let known: HashSet<u32> = instance.jobs.iter().map(|j| j.id).collect();
    for &id in accepted {
        if !known.contains(&id) {
            return Err(CoreError::UnknownId(id));
        }
    }
    let chosen: HashSet<u32> = accepted.iter().copied().collect();
    let mut completion: u64 = 0;
    let mut objective: i64 = 0;
    for pos in canonical_order(instance) {
        let job = &instance.jobs[pos];
        if !chosen.contains(&job.id) {
            continue;
        }
        match instance.kind {
            ProblemKind::P1 => {
                completion = completion.max(job.r) + job.p;
                objective = completion as i64;
            }
            ProblemKind::P2 => {
                completion += job.p;
                objective += completion as i64;
            }
            ProblemKind::P3 => {
                completion += job.p;
                objective += (job.w * completion) as i64;
            }
        }
    }
    Ok(objective)
}

/// Checks a solution against its instance. Never fails; every problem is
/// reported as a violation code. The codes are stable strings used by the
/// CLI, one per failed check:
///
/// * partition: `PARTITION_OVERLAP`, `PARTITION_INCOMPLETE`, `UNKNOWN_ID`
/// * budget: `BUDGET_EXCEEDED` (stated cost wrong, or over `U`)
/// * objective: `OBJECTIVE_MISMATCH`
pub fn verify(instance: &Instance, solution: &Solution) -> VerificationReport {
    let mut violations = Vec::new();
    let known: HashSet<u32> = instance.jobs.iter().map(|j| j.id).collect();

    let mut seen: HashSet<u32> = HashSet::new();
    let mut overlap = false;
    let mut unknown = false;
    for &id in solution.accepted.iter().chain(&solution.rejected) {
        if !known.contains(&id) {
            unknown = true;
            continue;
        }
        if !seen.insert(id) {
            overlap = true;
        }
    }
    if unknown {
        violations.push(Violation::UnknownId);
    }
    if overlap {
        violations.push(Violation::PartitionOverlap);
    }
    if known.iter().any(|id| !seen.contains(id)) {
        violations.push(Violation::PartitionIncomplete);
    }

    let recomputed_cost: u64 = instance
        .jobs
        .iter()
        .filter(|j| solution.rejected.contains(&j.id))
        .map(|j| j.e)
        .sum();
    if recomputed_cost != solution.rejection_cost || recomputed_cost > instance.u {
        violations.push(Violation::BudgetExceeded);
    }

    // Only meaningful when every accepted id resolves to a job.
    match evaluate_schedule(instance, &solution.accepted) {
        Ok(objective) if objective == solution.objective => {}
        Ok(_) => violations.push(Violation::ObjectiveMismatch),
        Err(_) => {} // already reported as UNKNOWN_ID
    }

    VerificationReport { violations }
}
