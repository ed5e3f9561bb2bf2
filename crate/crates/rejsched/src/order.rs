use std::cmp::Ordering;

use crate::instance::{Instance, Job, ProblemKind};

/// The sort each problem schedules accepted jobs by: earliest release date
/// for P1, shortest processing time for P2, shortest weighted processing
/// time for P3. Each rule is optimal for its problem once the accepted set
/// is fixed, so solvers and the evaluator agree on one canonical sequence.
///
/// Returns positions into `instance.jobs`. Ties break by ascending id,
/// which keeps the order stable under permutations of the job list.
pub fn canonical_order(instance: &Instance) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..instance.jobs.len()).collect();
    let jobs = &instance.jobs;
    match instance.kind {
        ProblemKind::P1 => idx.sort_by(|&a, &b| {
            jobs[a].r.cmp(&jobs[b].r).then(jobs[a].id.cmp(&jobs[b].id))
        }),
        ProblemKind::P2 => idx.sort_by(|&a, &b| {
            jobs[a].p.cmp(&jobs[b].p).then(jobs[a].id.cmp(&jobs[b].id))
        }),
        ProblemKind::P3 => idx.sort_by(|&a, &b| {
            wspt_cmp(&jobs[a], &jobs[b]).then(jobs[a].id.cmp(&jobs[b].id))
        }),
    }
    idx
}

/// Compares p_a/w_a against p_b/w_b by cross-multiplication so the order
/// never depends on floating-point rounding.
fn wspt_cmp(a: &Job, b: &Job) -> Ordering {
    let lhs = a.p as u128 * b.w as u128;
    let rhs = b.p as u128 * a.w as u128;
    lhs.cmp(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erd_order_of_presorted_release_dates_is_identity() {
        let inst = Instance::p1(
            &[47, 41, 20, 42, 31, 15, 12, 21, 18, 24],
            &[18, 70, 81, 102, 144, 302, 316, 354, 359, 365],
            &[44, 14, 20, 28, 16, 29, 46, 32, 38, 1],
            93,
        )
        .unwrap();
        assert_eq!(canonical_order(&inst), (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn wspt_order_of_presorted_ratios_is_identity() {
        let inst = Instance::p3(
            &[5, 20, 28, 13, 33, 35, 16, 35, 41, 48],
            &[8, 20, 24, 9, 18, 18, 8, 17, 19, 1],
            &[36, 23, 6, 31, 3, 40, 22, 10, 32, 21],
            88,
        )
        .unwrap();
        assert_eq!(canonical_order(&inst), (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn spt_breaks_ties_by_lower_id() {
        let inst = Instance::p2(&[7, 7, 3], &[1, 1, 1], 0).unwrap();
        assert_eq!(canonical_order(&inst), vec![2, 0, 1]);
    }

    #[test]
    fn wspt_equal_ratios_break_by_id() {
        // 2/4 and 1/2 are the same ratio; cross-multiplication sees the tie.
        let jobs = vec![
            Job::new(2, 2, 1).with_weight(4),
            Job::new(1, 1, 1).with_weight(2),
        ];
        let inst = Instance::new(ProblemKind::P3, jobs, 0).unwrap();
        assert_eq!(canonical_order(&inst), vec![1, 0]);
    }

    #[test]
    fn wspt_does_not_overflow_on_large_fields() {
        let jobs = vec![
            Job::new(1, 1_000_000, 1).with_weight(1),
            Job::new(2, 999_999, 1).with_weight(1_000_000),
        ];
        let inst = Instance::new(ProblemKind::P3, jobs, 0).unwrap();
        assert_eq!(canonical_order(&inst), vec![1, 0]);
    }
}
