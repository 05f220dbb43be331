mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::*;
use poset_forge::canonical::Canonical;
use poset_forge::composition::verify_maximal;
use poset_forge::embed::{coloured_embed, coloured_isomorphism, embed};
use poset_forge::enumerate::{posets_of_size, posets_up_to, random_coloured};
use poset_forge::{
    canonical, decomposition_function, eval_f_eta, eval_g, h_eta, maximal_decomposition, split_assoc_check, Arguments,
    ColouredPoset, CompositionSequence, Error, Poset, Position,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[test]
fn round_trip_exhaustive() {
    for x in uncoloured_up_to(6) {
        let (set, leaves) = decomposition_function(&x).unwrap();
        assert_eq!(leaves.len(), x.len());
        assert!(coloured_isomorphism(&eval_g(&set, &leaves).unwrap(), &x).is_some(), "{x:?}");
    }
}

#[test]
fn round_trip_random_coloured() {
    for x in random_coloured_up_to(&mut rng(5), 300, 9) {
        let (set, leaves) = decomposition_function(&x).unwrap();
        assert!(coloured_isomorphism(&eval_g(&set, &leaves).unwrap(), &x).is_some(), "{x:?}");
    }
}

#[test]
fn maximal_decompositions_verify() {
    for x in uncoloured_up_to(6) {
        let md = maximal_decomposition(&x).unwrap();
        verify_maximal(&x, &md).unwrap_or_else(|e| panic!("{x:?}: {e}"));
        for step in md.sequence.steps() {
            assert!(brute_indecomposable(step.arity()));
        }
    }
}

#[test]
fn arguments_embed_into_the_evaluation() {
    for x in random_coloured_up_to(&mut rng(8), 100, 7) {
        let md = maximal_decomposition(&x).unwrap();
        let whole = eval_f_eta(&md.sequence, &md.arguments).unwrap();
        for q in md.arguments.values() {
            assert!(coloured_embed(q, &whole).unwrap().is_some());
        }
    }
}

fn small_arities() -> Vec<Poset> {
    posets_up_to(4)
}

pub fn random_instance(rng: &mut ChaCha8Rng, arities: &[Poset]) -> (CompositionSequence, Arguments) {
    let pal = palette();
    let len = rng.gen_range(1..=4);
    let steps: Vec<(Poset, String)> = (0..len)
        .map(|_| {
            let a = arities.choose(rng).unwrap().clone();
            let s = a.id(rng.gen_range(0..a.len())).to_string();
            (a, s)
        })
        .collect();
    let eta = CompositionSequence::from_pairs(steps).unwrap();
    let k = eta
        .positions()
        .into_iter()
        .map(|p| {
            let n = rng.gen_range(1..=3);
            (p, random_coloured(rng, n, 0.5, &pal))
        })
        .collect();
    (eta, k)
}

#[test]
fn splitting_is_associative() {
    let arities = small_arities();
    let mut rng = rng(21);
    for _ in 0..300 {
        let (eta, k) = random_instance(&mut rng, &arities);
        let j = rng.gen_range(0..eta.len());
        assert!(split_assoc_check(&eta, &k, j).unwrap(), "{eta} j={j}");
    }
}

#[test]
fn h_eta_avoids_pathological_prefixes() {
    let arities: Vec<Poset> = vec![
        Poset::singleton("a"),
        canonical(Canonical::Chain, 2).unwrap(),
        canonical(Canonical::Antichain, 2).unwrap(),
        canonical(Canonical::N, 0).unwrap(),
    ];
    let prefixes: Vec<Poset> =
        [Canonical::BinaryTreePrefix, Canonical::ReversedBinaryTreePrefix, Canonical::PerpPrefix]
            .into_iter()
            .map(|c| canonical(c, 3).unwrap())
            .collect();
    let mut rng = rng(4);
    for _ in 0..100 {
        let (eta, _) = random_instance(&mut rng, &arities);
        let h = h_eta(&eta);
        for m in &prefixes {
            if eta.steps().iter().all(|s| embed(m, s.arity()).is_none()) {
                assert!(embed(m, &h).is_none(), "{eta}");
            }
        }
    }
}

#[test]
fn h_eta_sizes() {
    let n = canonical(Canonical::N, 0).unwrap();
    let eta = CompositionSequence::from_pairs([(n.clone(), "3"), (n, "3")]).unwrap();
    assert_eq!(h_eta(&eta).len(), 7);
    for arity in posets_of_size(3) {
        let eta = CompositionSequence::from_pairs([(arity.clone(), "0"), (arity, "1")]).unwrap();
        assert_eq!(h_eta(&eta).len(), 5);
    }
}

#[test]
fn palettes_must_agree() {
    let eta = CompositionSequence::from_pairs([(canonical(Canonical::Chain, 2).unwrap(), "a")]).unwrap();
    let other = Arc::new(poset_forge::QuasiOrder::discrete(["x"]).unwrap());
    let k: Arguments = BTreeMap::from([
        (Position::new(0, "b"), ColouredPoset::uncoloured(Poset::singleton("p"))),
        (Position::new(0, "a"), ColouredPoset::monochrome(Poset::singleton("q"), other, 0)),
    ]);
    assert_eq!(eval_f_eta(&eta, &k).unwrap_err(), Error::PaletteMismatch);
}
