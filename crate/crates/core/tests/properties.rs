//! Property tests for the group kernel and the index combinatorics.

use std::sync::Arc;

use proptest::prelude::*;

use peiffer::fingroup::{direct_product, FiniteGroup, Perm, Subgroup};
use peiffer::surjections::{canonicalize, eval_word, SurjectionTuple};

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just(degree).prop_perturb(move |d, mut rng| {
        let mut images: Vec<usize> = (0..d).collect();
        for i in (1..d).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            images.swap(i, j);
        }
        Perm::new(images).unwrap()
    })
}

fn arb_group(degree: usize, max_gens: usize) -> impl Strategy<Value = Arc<FiniteGroup>> {
    proptest::collection::vec(arb_perm(degree), 0..=max_gens)
        .prop_map(move |gens| FiniteGroup::closure(gens, degree, 50_000).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_closed_under_product_and_inverse(g in arb_group(5, 3)) {
        for a in 0..g.order() as u32 {
            prop_assert!(g.order() > g.inv(a) as usize || g.inv(a) == 0);
            let b = (a * 7 + 3) % g.order() as u32;
            let _ = g.mul(a, b); // panics on a closure defect
        }
        prop_assert!(g.contains(&Perm::identity(5)));
    }

    #[test]
    fn normal_closure_is_idempotent_and_monotone(g in arb_group(5, 3), seed in 0u32..120) {
        let seed = seed % g.order() as u32;
        let small = Subgroup::generated(g.clone(), &[seed]);
        let nc = small.normal_closure();
        let twice = nc.normal_closure();
        prop_assert_eq!(twice.members(), nc.members());
        prop_assert!(small.members().iter().all(|&m| nc.contains(m)));
        prop_assert!(nc.is_normal());
    }

    #[test]
    fn commutator_subgroup_is_symmetric(g in arb_group(4, 3), a in 0u32..24, b in 0u32..24) {
        let a = a % g.order() as u32;
        let b = b % g.order() as u32;
        let sa = Subgroup::generated(g.clone(), &[a]);
        let sb = Subgroup::generated(g.clone(), &[b]);
        let ab = sa.commutator_with(&sb);
        let ba = sb.commutator_with(&sa);
        prop_assert_eq!(ab.members(), ba.members());
    }

    #[test]
    fn direct_product_order_multiplies(a in arb_group(4, 2), b in arb_group(3, 2)) {
        let p = direct_product(&a, &b, 200_000).unwrap();
        prop_assert_eq!(p.group.order(), a.order() * b.order());
    }

    #[test]
    fn canonicalize_matches_the_function_oracle(
        n in 1usize..7,
        raw in proptest::collection::vec(0usize..6, 0..6),
    ) {
        // clamp the word into validity: letter at position pos acts at level n-k+pos
        let k = raw.len().min(n);
        let word: Vec<usize> = raw
            .iter()
            .take(k)
            .enumerate()
            .map(|(pos, &a)| a % (n - k + pos + 1))
            .collect();
        let t = canonicalize(&word, n).unwrap();
        for p in 0..=n {
            prop_assert_eq!(t.eval(p), eval_word(&word, n, p));
        }
        let again = canonicalize(t.indices(), n).unwrap();
        prop_assert_eq!(again, t);
    }

    #[test]
    fn surjection_leq_is_reflexive_and_antisymmetric(n in 0usize..5, mask_a in 0u32..32, mask_b in 0u32..32) {
        let take = |mask: u32| -> SurjectionTuple {
            let indices: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            SurjectionTuple::new(n, indices).unwrap()
        };
        let a = take(mask_a);
        let b = take(mask_b);
        prop_assert!(a.leq(&a).unwrap());
        if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }
}
