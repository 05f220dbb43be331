//! Exhaustive and random generation of small posets, used as test oracles
//! and benchmark corpora.

use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloured::ColouredPoset;
use crate::poset::Poset;
use crate::quasi::QuasiOrder;

fn numeric_ids(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Canonical code: the lexicographically least relation matrix over all
/// relabellings that respect the (down-degree, up-degree) signature order.
pub fn canonical_code(p: &Poset) -> Vec<bool> {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    let sig = |i: usize| (p.down_degree(i), p.up_degree(i));
    order.sort_by_key(|&i| sig(i));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match blocks.last_mut() {
            Some(b) if sig(b[0]) == sig(i) => b.push(i),
            _ => blocks.push(vec![i]),
        }
    }
    let mut best: Option<Vec<bool>> = None;
    let mut perm = Vec::with_capacity(n);
    permute_blocks(p, &mut blocks, 0, &mut perm, &mut best);
    best.unwrap_or_default()
}

fn permute_blocks(p: &Poset, blocks: &mut [Vec<usize>], b: usize, perm: &mut Vec<usize>, best: &mut Option<Vec<bool>>) {
    if b == blocks.len() {
        let code: Vec<bool> = perm.iter().flat_map(|&i| perm.iter().map(move |&j| p.lt(i, j))).collect();
        if best.as_ref().is_none_or(|c| code < *c) {
            *best = Some(code);
        }
        return;
    }
    let block = blocks[b].clone();
    heap_permutations(block, &mut |arrangement| {
        let base = perm.len();
        perm.extend_from_slice(arrangement);
        permute_blocks(p, blocks, b + 1, perm, best);
        perm.truncate(base);
    });
}

fn heap_permutations(mut items: Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0; n];
    visit(&items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// One representative per isomorphism class of posets on exactly `n`
/// elements, with element ids `"0"..`.
pub fn posets_of_size(n: usize) -> Vec<Poset> {
    if n == 0 {
        return vec![Poset::empty()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in posets_of_size(n - 1) {
        let m = n - 1;
        for mask in 0u64..(1u64 << m) {
            // the new maximal element sits above a down-closed set
            let down_closed =
                (0..m).all(|i| mask >> i & 1 == 0 || (0..m).all(|j| !base.lt(j, i) || mask >> j & 1 == 1));
            if !down_closed {
                continue;
            }
            let pairs = base.pairs().chain((0..m).filter(|&i| mask >> i & 1 == 1).map(|i| (i, m)));
            let p = Poset::from_index_pairs(numeric_ids(n), pairs).expect("acyclic by construction");
            if seen.insert(canonical_code(&p)) {
                out.push(p);
            }
        }
    }
    out
}

/// Representatives for every size `1..=n`.
pub fn posets_up_to(n: usize) -> Vec<Poset> {
    (1..=n).flat_map(posets_of_size).collect()
}

/// A random poset on `n` elements: each forward pair of a random linear
/// extension is related with probability `density`, then closed.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut positions: Vec<usize> = (0..n).collect();
    positions.shuffle(rng);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                pairs.push((positions[a], positions[b]));
            }
        }
    }
    Poset::from_index_pairs(numeric_ids(n), pairs).expect("acyclic by construction")
}

/// A random poset with colours drawn uniformly from `palette`.
pub fn random_coloured<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    density: f64,
    palette: &Arc<QuasiOrder>,
) -> ColouredPoset {
    let p = random_poset(rng, n, density);
    let colours = (0..n).map(|_| rng.gen_range(0..palette.len())).collect();
    ColouredPoset::from_indices(p, colours, Arc::clone(palette)).expect("colours drawn from palette")
}
