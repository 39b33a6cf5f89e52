//! Seed sweeps. Each seed is independent and deterministic, so the sweep
//! runs on rayon when the `parallel` feature is on and in a plain loop
//! otherwise; both return results ordered by seed.

use serde::Serialize;

use crate::error::Error;
use crate::instance::{generate_verified, InstanceConfig, Kind};
use crate::report::TheoremReport;

#[derive(Clone, Debug, Serialize)]
pub struct SeedOutcome {
    pub seed: u64,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SeedOutcome {
    fn from_result(seed: u64, r: Result<TheoremReport, Error>) -> Self {
        match r {
            Ok(report) => SeedOutcome { seed, verdict: report.verdict, report: Some(report), error: None },
            Err(e) => SeedOutcome { seed, verdict: false, report: None, error: Some(e.to_string()) },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sweep {
    pub kind: Kind,
    pub first_seed: u64,
    pub trials: u64,
    pub bounds: u32,
    pub passed: u64,
    pub failed: u64,
    pub errors: u64,
    pub outcomes: Vec<SeedOutcome>,
}

impl Sweep {
    pub fn verdict(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}

fn one(kind: Kind, seed: u64, bounds: u32) -> SeedOutcome {
    let cfg = InstanceConfig::new(kind, seed).with_bounds(bounds);
    SeedOutcome::from_result(seed, generate_verified(&cfg).map(|(_, r)| r))
}

fn seeds(first: u64, trials: u64) -> impl Iterator<Item = u64> {
    (0..trials).map(move |i| first.wrapping_add(i))
}

pub fn map_seeds_sequential<T>(first: u64, trials: u64, f: impl Fn(u64) -> T) -> Vec<T> {
    seeds(first, trials).collect::<Vec<_>>().into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_seeds_parallel<T: Send>(first: u64, trials: u64, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    // indexed collect keeps seed order
    seeds(first, trials).collect::<Vec<_>>().into_par_iter().map(f).collect()
}

/// Parallel when the feature is on, sequential otherwise.
pub fn map_seeds<T: Send>(first: u64, trials: u64, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        map_seeds_parallel(first, trials, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seeds_sequential(first, trials, f)
    }
}

fn summarize(kind: Kind, first_seed: u64, trials: u64, bounds: u32, outcomes: Vec<SeedOutcome>) -> Sweep {
    let passed = outcomes.iter().filter(|o| o.verdict).count() as u64;
    let errors = outcomes.iter().filter(|o| o.error.is_some()).count() as u64;
    Sweep { kind, first_seed, trials, bounds, passed, failed: trials - passed - errors, errors, outcomes }
}

pub fn run_seeds_sequential(kind: Kind, first_seed: u64, trials: u64, bounds: u32) -> Sweep {
    summarize(kind, first_seed, trials, bounds, map_seeds_sequential(first_seed, trials, |s| one(kind, s, bounds)))
}

#[cfg(feature = "parallel")]
pub fn run_seeds_parallel(kind: Kind, first_seed: u64, trials: u64, bounds: u32) -> Sweep {
    summarize(kind, first_seed, trials, bounds, map_seeds_parallel(first_seed, trials, |s| one(kind, s, bounds)))
}

pub fn run_seeds(kind: Kind, first_seed: u64, trials: u64, bounds: u32) -> Sweep {
    summarize(kind, first_seed, trials, bounds, map_seeds(first_seed, trials, |s| one(kind, s, bounds)))
}
