//! Seeded random instances following the numerical-study design.
//!
//! Processing times and rejection costs are uniform on [1, 50], weights
//! (P3) on [1, 25], release dates (P1) on [0, 0.80 * n * 50], and the
//! budget U on a problem-specific slice of [0, n * 50]:
//!
//! * P1: [0.20, 0.30] * n * 50
//! * P2: [0.10, 0.15] * n * 50
//! * P3: [0.15, 0.20] * n * 50
//!
//! Those windows keep the solved instances interesting — roughly as many
//! rejected as accepted jobs — instead of collapsing to all-accept or
//! all-reject.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::instance::{Instance, Job, ProblemKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

/// Everything `generate` needs; `new` fills the standard design for a
/// problem kind, and individual fields can be overridden afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub kind: ProblemKind,
    pub n: usize,
    pub seed: u64,
    pub p_lo: u64,
    pub p_hi: u64,
    pub e_lo: u64,
    pub e_hi: u64,
    /// Weight bounds; drawn for P3 only.
    pub w_lo: u64,
    pub w_hi: u64,
    /// Release dates are uniform on [0, r_hi_factor * n * p_hi]; P1 only.
    pub r_hi_factor: f64,
    /// U is uniform on [u_lo_factor, u_hi_factor] * n * e_hi.
    pub u_lo_factor: f64,
    pub u_hi_factor: f64,
}

impl GenParams {
    pub fn new(kind: ProblemKind, n: usize, seed: u64) -> Self {
        let (u_lo_factor, u_hi_factor) = match kind {
            ProblemKind::P1 => (0.20, 0.30),
            ProblemKind::P2 => (0.10, 0.15),
            ProblemKind::P3 => (0.15, 0.20),
        };
        GenParams {
            kind,
            n,
            seed,
            p_lo: 1,
            p_hi: 50,
            e_lo: 1,
            e_hi: 50,
            w_lo: 1,
            w_hi: 25,
            r_hi_factor: 0.80,
            u_lo_factor,
            u_hi_factor,
        }
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::InvalidParams("n must be >= 1".into()));
        }
        for (name, lo, hi) in [
            ("p", self.p_lo, self.p_hi),
            ("e", self.e_lo, self.e_hi),
            ("w", self.w_lo, self.w_hi),
        ] {
            if lo == 0 {
                return Err(GenError::InvalidParams(format!("{name}_lo must be >= 1")));
            }
            if lo > hi {
                return Err(GenError::InvalidParams(format!("{name}_lo > {name}_hi")));
            }
        }
        for (name, f) in [
            ("r_hi_factor", self.r_hi_factor),
            ("u_lo_factor", self.u_lo_factor),
            ("u_hi_factor", self.u_hi_factor),
        ] {
            if !(f > 0.0 && f <= 1.0) {
                return Err(GenError::InvalidParams(format!("{name} must be in (0, 1]")));
            }
        }
        if self.u_lo_factor > self.u_hi_factor {
            return Err(GenError::InvalidParams("u_lo_factor > u_hi_factor".into()));
        }
        Ok(())
    }

    /// Closed interval the budget is drawn from.
    pub fn u_interval(&self) -> (u64, u64) {
        let scale = (self.n as u64 * self.e_hi) as f64;
        (snap_ceil(self.u_lo_factor * scale), snap_floor(self.u_hi_factor * scale))
    }

    /// Upper end of the release-date interval (the lower end is 0).
    pub fn r_hi(&self) -> u64 {
        snap_floor(self.r_hi_factor * (self.n as u64 * self.p_hi) as f64)
    }
}

/// Deterministic: equal params (seed included) produce equal instances.
pub fn generate(params: &GenParams) -> Result<Instance, GenError> {
    params.validate()?;
    let mut rng = SplitMix64::seed_from_u64(params.seed);
    let n = params.n;

    let p: Vec<u64> = (0..n).map(|_| uniform(&mut rng, params.p_lo, params.p_hi)).collect();
    let r: Vec<u64> = match params.kind {
        ProblemKind::P1 => {
            let hi = params.r_hi();
            (0..n).map(|_| uniform(&mut rng, 0, hi)).collect()
        }
        _ => vec![0; n],
    };
    let w: Vec<u64> = match params.kind {
        ProblemKind::P3 => (0..n).map(|_| uniform(&mut rng, params.w_lo, params.w_hi)).collect(),
        _ => vec![1; n],
    };
    let e: Vec<u64> = (0..n).map(|_| uniform(&mut rng, params.e_lo, params.e_hi)).collect();
    let (u_lo, u_hi) = params.u_interval();
    let u = uniform(&mut rng, u_lo, u_hi);

    let jobs = (0..n)
        .map(|k| Job { id: k as u32 + 1, p: p[k], r: r[k], w: w[k], e: e[k] })
        .collect();
    Instance::new(params.kind, jobs, u)
        .map_err(|err| GenError::InvalidParams(format!("generated instance invalid: {err}")))
}

/// Unbiased draw from the closed range [lo, hi] by rejection sampling:
/// raw 64-bit words are discarded until one falls inside the largest
/// multiple of the span, then reduced.
fn uniform(rng: &mut SplitMix64, lo: u64, hi: u64) -> u64 {
    debug_assert!(lo <= hi);
    let span = hi - lo + 1; // hi = u64::MAX never occurs here
    if span == 1 {
        return lo;
    }
    let zone = u64::MAX - (u64::MAX - span + 1) % span;
    loop {
        let raw = rng.next_u64();
        if raw <= zone {
            return lo + raw % span;
        }
    }
}

/// Endpoints like 0.15 * 2000 * 50 are exact integers in intent but not in
/// f64 arithmetic; snap anything within 1e-6 of an integer before rounding
/// so the drawn interval matches the design exactly.
fn snap_floor(x: f64) -> u64 {
    let nearest = x.round();
    if (x - nearest).abs() < 1e-6 {
        nearest as u64
    } else {
        x.floor() as u64
    }
}

fn snap_ceil(x: f64) -> u64 {
    let nearest = x.round();
    if (x - nearest).abs() < 1e-6 {
        nearest as u64
    } else {
        x.ceil() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_intervals_match_the_design() {
        assert_eq!(GenParams::new(ProblemKind::P1, 500, 0).u_interval(), (5000, 7500));
        assert_eq!(GenParams::new(ProblemKind::P1, 2000, 0).u_interval(), (20000, 30000));
        assert_eq!(GenParams::new(ProblemKind::P2, 2000, 0).u_interval(), (10000, 15000));
        assert_eq!(GenParams::new(ProblemKind::P2, 1500, 0).u_interval(), (7500, 11250));
        assert_eq!(GenParams::new(ProblemKind::P3, 10, 0).u_interval(), (75, 100));
        assert_eq!(GenParams::new(ProblemKind::P3, 40, 0).u_interval(), (300, 400));
    }

    #[test]
    fn release_interval_matches_the_design() {
        assert_eq!(GenParams::new(ProblemKind::P1, 500, 0).r_hi(), 20000);
    }

    #[test]
    fn same_seed_same_instance() {
        let params = GenParams::new(ProblemKind::P3, 50, 1234);
        assert_eq!(generate(&params).unwrap(), generate(&params).unwrap());
        let other = GenParams { seed: 1235, ..params.clone() };
        assert_ne!(generate(&other).unwrap(), generate(&params).unwrap());
    }

    #[test]
    fn values_stay_inside_declared_intervals() {
        for seed in 0..50 {
            for kind in [ProblemKind::P1, ProblemKind::P2, ProblemKind::P3] {
                let params = GenParams::new(kind, 40, seed);
                let inst = generate(&params).unwrap();
                let (u_lo, u_hi) = params.u_interval();
                assert!(inst.u >= u_lo && inst.u <= u_hi);
                for job in &inst.jobs {
                    assert!(job.p >= 1 && job.p <= 50);
                    assert!(job.e >= 1 && job.e <= 50);
                    match kind {
                        ProblemKind::P1 => assert!(job.r <= params.r_hi()),
                        ProblemKind::P3 => assert!(job.w >= 1 && job.w <= 25),
                        ProblemKind::P2 => {
                            assert_eq!(job.r, 0);
                            assert_eq!(job.w, 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_params_are_rejected() {
        let mut params = GenParams::new(ProblemKind::P2, 0, 0);
        assert!(matches!(generate(&params), Err(GenError::InvalidParams(_))));
        params.n = 5;
        params.p_lo = 60;
        assert!(matches!(generate(&params), Err(GenError::InvalidParams(_))));
        let mut params = GenParams::new(ProblemKind::P1, 5, 0);
        params.u_lo_factor = 0.0;
        assert!(matches!(generate(&params), Err(GenError::InvalidParams(_))));
    }

    #[test]
    fn uniform_draw_covers_endpoints() {
        let mut rng = SplitMix64::seed_from_u64(7);
        let mut seen_lo = false;
        let mut seen_hi = false;
        for _ in 0..200 {
            let v = uniform(&mut rng, 3, 6);
            assert!((3..=6).contains(&v));
            seen_lo |= v == 3;
            seen_hi |= v == 6;
        }
        assert!(seen_lo && seen_hi);
    }
}
