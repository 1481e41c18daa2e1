//! Braid-action invariants and orbit determinism on random tuples.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use splitjac::hurwitz::{
    all_perms, braid_move, braid_move_inv, braid_orbits, nielsen_enumerate, NielsenClass, PermTuple,
};

/// A product-one tuple of `len` permutations of degree `n`: random first
/// entries, the last one closing the product.
fn product_one_tuple() -> impl Strategy<Value = PermTuple> {
    (3usize..=6, 3usize..=5).prop_flat_map(|(n, len)| {
        let perms = all_perms(n);
        prop::collection::vec(0..perms.len(), len - 1).prop_map(move |idx| {
            let mut entries: Vec<_> = idx.iter().map(|&i| perms[i].clone()).collect();
            let prod = entries.iter().fold(perms[0].clone(), |acc, p| acc.mul(p));
            entries.push(prod.inv());
            PermTuple::new(entries).unwrap()
        })
    })
}

fn sorted_types(t: &PermTuple) -> Vec<Vec<u32>> {
    let mut c = t.cycle_types();
    c.sort();
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn braid_moves_preserve_invariants(t in product_one_tuple(), moves in prop::collection::vec((0usize..4, any::<bool>()), 1..12)) {
        let group = t.group();
        let mut cur = t.clone();
        for (i, forward) in moves {
            let i = i % (cur.len() - 1);
            cur = if forward { braid_move(&cur, i) } else { braid_move_inv(&cur, i) };
            prop_assert!(cur.is_product_one());
            prop_assert_eq!(sorted_types(&cur), sorted_types(&t));
            prop_assert_eq!(cur.is_transitive(), t.is_transitive());
        }
        let after = cur.group();
        prop_assert_eq!(after.order, group.order);
        prop_assert_eq!(after.transitive, group.transitive);
    }

    #[test]
    fn move_and_inverse_cancel(t in product_one_tuple(), i in 0usize..4) {
        let i = i % (t.len() - 1);
        prop_assert_eq!(braid_move_inv(&braid_move(&t, i), i), t.clone());
        prop_assert_eq!(braid_move(&braid_move_inv(&t, i), i), t);
    }

    #[test]
    fn moves_commute_with_conjugation(t in product_one_tuple(), g in 0usize..24, i in 0usize..4) {
        let perms = all_perms(t.degree());
        let g = &perms[g % perms.len()];
        let i = i % (t.len() - 1);
        prop_assert_eq!(braid_move(&t.conj(g), i), braid_move(&t, i).conj(g));
    }

    /// The orbit partition does not depend on the order in which class
    /// representatives are visited.
    #[test]
    fn orbits_ignore_representative_order(seed in any::<u64>()) {
        let base = nielsen_enumerate(4, &[vec![2], vec![2], vec![2], vec![2, 2], vec![2]]).unwrap();
        let mut reps = base.representatives.clone();
        reps.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let shuffled = NielsenClass { representatives: reps, ..base.clone() };
        let key = |nc: &NielsenClass| -> BTreeSet<Vec<PermTuple>> {
            braid_orbits(nc).into_iter().map(|o| o.members).collect()
        };
        prop_assert_eq!(key(&shuffled), key(&base));
    }
}

#[test]
fn enumeration_is_deterministic() {
    let types = [vec![2, 2], vec![2, 2], vec![4], vec![2]];
    let a = nielsen_enumerate(5, &types).unwrap();
    let b = nielsen_enumerate(5, &types).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 8);
}
