mod common;

use common::*;
use poset_forge::embed::coloured_embed;
use poset_forge::interval::is_indecomposable;
use poset_forge::{
    bad_pair_search, class_check, embeddability_matrix, fence_antichain, is_n_free, Allowed, Bounds, ClassSpec,
    ColouredPoset, Family,
};

#[test]
fn n_free_equivalence() {
    let spec = ClassSpec::n_free(2).unwrap();
    for x in uncoloured_up_to(6) {
        let report = class_check(&x, &spec, &Bounds::default()).unwrap();
        assert_eq!(is_n_free(x.poset()), report.passes(), "{x:?}");
    }
}

#[test]
fn bound_classes_are_monotone_and_hereditary() {
    let b = Bounds::default();
    let xs = uncoloured_up_to(5);
    for x in &xs {
        for n in 1..5 {
            let small = ClassSpec::new(Allowed::MaxSize(n), 1).unwrap();
            let big = ClassSpec::new(Allowed::MaxSize(n + 1), 1).unwrap();
            if class_check(x, &small, &b).unwrap().passes() {
                assert!(class_check(x, &big, &b).unwrap().passes());
                let n_elems = x.len();
                for mask in 1u32..(1 << n_elems) {
                    let members: Vec<usize> = (0..n_elems).filter(|&i| mask >> i & 1 == 1).collect();
                    assert!(class_check(&x.induced(&members), &small, &b).unwrap().passes());
                }
            }
        }
    }
}

#[test]
fn fence_antichain_is_an_antichain() {
    let fam = fence_antichain(8).unwrap();
    let m = embeddability_matrix(&fam, &Bounds::default()).unwrap();
    assert!(m.is_identity());
    for (k, z) in fam.members().iter().enumerate() {
        // the three-point fence is a sum over a 2-chain; longer fences are prime
        assert_eq!(is_indecomposable(z.poset()).unwrap(), k > 0, "Z{}", k + 1);
        assert!(brute_indecomposable(z.poset()) == (k > 0));
    }
}

#[test]
fn bad_pairs_agree_with_matrices() {
    let b = Bounds::default();
    let mut rng = rng(12);
    for round in 0..30 {
        let members: Vec<(String, ColouredPoset)> = random_coloured_up_to(&mut rng, 2 + round % 5, 6)
            .into_iter()
            .enumerate()
            .map(|(i, x)| (format!("x{i}"), x))
            .collect();
        let fam = Family::new(members).unwrap();
        let m = embeddability_matrix(&fam, &b).unwrap();
        assert_eq!(bad_pair_search(&fam, &b).unwrap(), m.first_bad_pair());
        for i in 0..fam.len() {
            assert!(m.get(i, i));
            for j in 0..fam.len() {
                assert_eq!(m.get(i, j), coloured_embed(fam.get(i), fam.get(j)).unwrap().is_some());
            }
        }
    }
}
