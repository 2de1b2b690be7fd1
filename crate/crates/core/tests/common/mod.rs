#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use thompson_core::sample::{random_aut_word, random_dyadic, random_fmap, random_tlike, SampleConfig};
use thompson_core::{AutWord, Dyadic, FMap, TLikeMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fmap(seed: u64) -> FMap {
    random_fmap(&mut rng(seed), &SampleConfig::default())
}

pub fn tlike(seed: u64) -> TLikeMap {
    random_tlike(&mut rng(seed), &SampleConfig::default())
}

pub fn word(seed: u64, max_len: usize) -> AutWord {
    random_aut_word(&mut rng(seed), max_len, &SampleConfig::default())
}

/// Dyadic probe points spread well past the sampling window, so tails and
/// periodic regions get exercised.
pub fn probes(seed: u64, n: usize) -> Vec<Dyadic> {
    let mut r = rng(seed ^ 0x5eed);
    (0..n).map(|_| random_dyadic(&mut r, -40, 40, 6)).collect()
}
