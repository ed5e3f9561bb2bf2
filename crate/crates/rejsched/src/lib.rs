//! Exact solvers for single-machine scheduling with budgeted job rejection.
//!
//! Three problems, one knob: each job may be processed or rejected, and the
//! summed rejection costs of everything rejected must stay within a budget
//! `U`. The objective over the accepted jobs is, per problem kind:
//!
//! * **P1** — makespan, with per-job release dates
//! * **P2** — total completion time
//! * **P3** — total weighted completion time
//!
//! All three are solved exactly by pseudo-polynomial dynamic programs over
//! the rejection budget ([`solve_p1`], [`solve_p2_exact`], [`solve_p3`]),
//! with full solution reconstruction. P2 additionally ships a cheaper
//! single-path recursion ([`solve_p2_literal`]) that is *not* always
//! optimal; the crate keeps it because the exact frontier-based solver
//! makes it easy to measure how often and how badly the cheap one misses.
//!
//! A brute-force [`oracle`](crate::oracle), a seeded instance
//! [`generator`](crate::generator), a timing [`bench`](crate::bench)
//! harness, and a CLI (`rejsched`) round out the toolbox.
//!
//! ```
//! use rejsched::{solve_p1, Instance};
//!
//! // Two early jobs and a late expensive one; budget lets us drop it.
//! let inst = Instance::p1(&[4, 3, 9], &[0, 2, 80], &[5, 5, 6], 7).unwrap();
//! let sol = solve_p1(&inst, inst.u).unwrap();
//! assert_eq!(sol.rejected, vec![3]);
//! assert_eq!(sol.objective, 7);
//! ```
//!
//! With the default `parallel` feature the oracle enumerates subsets
//! across rayon workers; `--no-default-features` builds the fully
//! sequential fallback with identical results.

pub mod bench;
mod evaluate;
pub mod generator;
mod instance;
pub mod io;
mod order;
pub mod oracle;
pub mod solvers;

pub use evaluate::{evaluate_schedule, verify};
pub use instance::{
    CoreError, Instance, Job, ProblemKind, Solution, VerificationReport, Violation,
};
pub use order::canonical_order;
pub use oracle::{solve_oracle, solve_oracle_sequential, OracleLimit};
pub use solvers::{
    solve_default, solve_p1, solve_p2_exact, solve_p2_literal, solve_p3, Objective, SolveError,
    INFEASIBLE,
};
