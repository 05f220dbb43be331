//! Fixtures for the benchmarks.

use std::sync::Arc;

use poset_forge::enumerate::random_coloured;
use poset_forge::{ColouredPoset, QuasiOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn palette() -> Arc<QuasiOrder> {
    Arc::new(QuasiOrder::new(["lo", "mid", "hi"], [("lo", "mid"), ("mid", "hi")]).expect("palette"))
}

/// `count` seeded random coloured posets, each with exactly `size` elements.
pub fn random_posets(seed: u64, count: usize, size: usize) -> Vec<ColouredPoset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pal = palette();
    (0..count)
        .map(|_| {
            let d = rng.gen_range(0.2..0.6);
            random_coloured(&mut rng, size, d, &pal)
        })
        .collect()
}
