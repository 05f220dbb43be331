#![allow(dead_code)]

use std::sync::Arc;

use poset_forge::coloured::ColouredPoset;
use poset_forge::enumerate::{posets_up_to, random_coloured};
use poset_forge::{Poset, QuasiOrder, Relation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uncoloured_up_to(n: usize) -> Vec<ColouredPoset> {
    posets_up_to(n).into_iter().map(ColouredPoset::uncoloured).collect()
}

/// A three-colour palette with `lo <= mid <= hi` and `odd` apart.
pub fn palette() -> Arc<QuasiOrder> {
    Arc::new(QuasiOrder::new(["lo", "mid", "hi", "odd"], [("lo", "mid"), ("mid", "hi")]).unwrap())
}

pub fn random_coloured_up_to(rng: &mut ChaCha8Rng, count: usize, max: usize) -> Vec<ColouredPoset> {
    use rand::Rng;
    let pal = palette();
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max);
            let d = rng.gen_range(0.1..0.7);
            random_coloured(rng, n, d, &pal)
        })
        .collect()
}

/// Direct definition: every outside point relates identically to all members.
pub fn brute_is_interval(p: &Poset, members: &[usize]) -> bool {
    !members.is_empty()
        && (0..p.len()).filter(|x| !members.contains(x)).all(|x| {
            let r: Vec<Relation> = members.iter().map(|&m| p.relation(x, m)).collect();
            r.windows(2).all(|w| w[0] == w[1])
        })
}

pub fn brute_intervals(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out: Vec<Vec<usize>> = (1u64..1 << n)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<usize>>())
        .filter(|s| brute_is_interval(p, s))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn brute_indecomposable(p: &Poset) -> bool {
    brute_intervals(p).iter().all(|s| s.len() == 1 || s.len() == p.len())
}
