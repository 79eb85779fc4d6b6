//! Tunable limits shared by the computations.

use crate::decompose;

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub rounds: usize,
    /// Maximal number of resolution steps before giving up.
    pub resolution_cap: usize,
    /// Caps for enumerating indecomposables.
    pub max_modules: usize,
    pub max_dim: usize,
    /// Random combinations used by sampled closure checks.
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: decompose::DEFAULT_SEED,
            rounds: decompose::DEFAULT_ROUNDS,
            resolution_cap: 64,
            max_modules: 10_000,
            max_dim: 512,
            samples: 16,
        }
    }
}

impl Config {
    pub fn decompose(&self) -> decompose::Options {
        decompose::Options { seed: self.seed, rounds: self.rounds }
    }
}
