//! Seeded random sweeps over SL(2,Z).
//!
//! Matrix `i` of a sweep is drawn from its own ChaCha stream (`seed`, stream
//! `i`), so results do not depend on evaluation order or thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::mapclass::MappingClass;
use crate::oracle::{agree, brute_force, DEFAULT_BOUND, DEFAULT_ITERATION_CAP};
use crate::solver::{check_class_bound, solve, TheoremReport, TheoremStatus};

/// `T = [[1,1],[0,1]]`.
pub fn twist() -> MappingClass {
    MappingClass::new(1, 1, 0, 1).unwrap()
}

/// `S = [[0,-1],[1,0]]`.
pub fn rotation() -> MappingClass {
    MappingClass::new(0, -1, 1, 0).unwrap()
}

/// A uniform word in `T` and `S` of uniform length in `[1, max_len]`,
/// redrawn until it is not `±identity`.
pub fn random_word<R: Rng>(rng: &mut R, max_len: u32) -> MappingClass {
    let (t, s) = (twist(), rotation());
    loop {
        let len = rng.random_range(1..=max_len.max(1));
        let mut m = MappingClass::identity();
        for _ in 0..len {
            let g = if rng.random_bool(0.5) { &t } else { &s };
            m = m.compose(g);
        }
        if !m.is_trivial() {
            return m;
        }
    }
}

/// The `index`-th matrix of the sweep seeded by `seed`.
pub fn sweep_matrix(seed: u64, index: u64, max_len: u32) -> MappingClass {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    random_word(&mut rng, max_len)
}

#[derive(Clone, Debug)]
pub struct SweepParams {
    pub count: u64,
    pub word_length: u32,
    pub seed: u64,
    pub bound: u32,
    pub iteration_cap: u32,
    /// Run the oracle on every matrix whose index is a multiple of this.
    pub oracle_every: u64,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            count: 10_000,
            word_length: 20,
            seed: 0,
            bound: DEFAULT_BOUND,
            iteration_cap: DEFAULT_ITERATION_CAP,
            oracle_every: 100,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub index: u64,
    pub mapping_class: MappingClass,
    pub report: TheoremReport,
    pub oracle_agrees: Option<bool>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.report.status != TheoremStatus::Violation && self.oracle_agrees != Some(false)
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub outcomes: Vec<SweepOutcome>,
}

impl SweepReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed()).count()
    }

    pub fn failures(&self) -> Vec<&SweepOutcome> {
        self.outcomes.iter().filter(|o| !o.passed()).collect()
    }

    pub fn oracle_checked(&self) -> usize {
        self.outcomes
            .iter()
            .filter(|o| o.oracle_agrees.is_some())
            .count()
    }
}

pub fn check_one(params: &SweepParams, index: u64) -> SweepOutcome {
    let m = sweep_matrix(params.seed, index, params.word_length);
    let report = check_class_bound(&m);
    let oracle_agrees = (params.oracle_every > 0 && index.is_multiple_of(params.oracle_every))
        .then(|| {
            match (
                solve(&m),
                brute_force(&m, params.bound, params.iteration_cap),
            ) {
                (Ok(set), Ok(oracle)) => agree(&set, &oracle),
                _ => false,
            }
        });
    SweepOutcome {
        index,
        mapping_class: m,
        report,
        oracle_agrees,
    }
}

pub fn run_sweep(params: &SweepParams) -> SweepReport {
    SweepReport {
        outcomes: (0..params.count).map(|i| check_one(params, i)).collect(),
    }
}

/// Same result as [`run_sweep`], fanned out over the current rayon pool.
pub fn run_sweep_parallel(params: &SweepParams) -> SweepReport {
    SweepReport {
        outcomes: (0..params.count)
            .into_par_iter()
            .map(|i| check_one(params, i))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_are_reproducible_and_nontrivial() {
        for i in 0..200 {
            let a = sweep_matrix(7, i, 20);
            assert_eq!(a, sweep_matrix(7, i, 20));
            assert!(!a.is_trivial());
        }
        assert_ne!(
            (0..20).map(|i| sweep_matrix(1, i, 20)).collect::<Vec<_>>(),
            (0..20).map(|i| sweep_matrix(2, i, 20)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn small_sweep_passes() {
        let params = SweepParams {
            count: 300,
            oracle_every: 50,
            ..SweepParams::default()
        };
        let report = run_sweep(&params);
        assert_eq!(report.passed(), 300);
        assert_eq!(report.oracle_checked(), 6);
    }
}
