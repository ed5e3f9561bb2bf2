//! Shared fixtures: the three known ten-job instances and the small
//! hand-checkable ones.
#![allow(dead_code)] // not every test binary uses every fixture

use rejsched::Instance;

/// Ten jobs, release dates, U = 93; optimal makespan 329.
pub fn example1() -> Instance {
    Instance::p1(
        &[47, 41, 20, 42, 31, 15, 12, 21, 18, 24],
        &[18, 70, 81, 102, 144, 302, 316, 354, 359, 365],
        &[44, 14, 20, 28, 16, 29, 46, 32, 38, 1],
        93,
    )
    .unwrap()
}

/// Ten jobs, U = 66; optimal total completion time 469.
pub fn example2() -> Instance {
    Instance::p2(
        &[15, 18, 23, 24, 28, 33, 36, 38, 46, 47],
        &[21, 46, 7, 10, 15, 32, 33, 10, 46, 29],
        66,
    )
    .unwrap()
}

/// Ten weighted jobs, U = 88; optimal weighted completion sum 1825.
pub fn example3() -> Instance {
    Instance::p3(
        &[5, 20, 28, 13, 33, 35, 16, 35, 41, 48],
        &[8, 20, 24, 9, 18, 18, 8, 17, 19, 1],
        &[36, 23, 6, 31, 3, 40, 22, 10, 32, 21],
        88,
    )
    .unwrap()
}

/// Five weighted jobs, U = 55; small enough to brute-force.
pub fn five_job_weighted() -> Instance {
    Instance::p3(
        &[24, 44, 34, 25, 47],
        &[16, 15, 11, 8, 5],
        &[19, 19, 36, 40, 34],
        55,
    )
    .unwrap()
}

/// The family where the single-path P2 recursion misses the optimum:
/// exact rejects job 3 for 41, literal rejects jobs 1 and 2 for 42.
pub fn literal_witness() -> Instance {
    Instance::p2(&[2, 4, 7, 7, 7], &[2, 2, 4, 100, 100], 4).unwrap()
}
