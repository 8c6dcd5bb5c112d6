use std::collections::BTreeSet;

use gradeforge_core::algebra::span::verify;
use gradeforge_core::algebra::{
    grading_from_relation, relation_from_filter, AlgebraPresentation, ElementaryFamily, Property, Target,
};
use gradeforge_core::io::{parse_magma, print_magma};
use gradeforge_core::magma::{
    are_isomorphic, canonical_form, enumerate_homs, enumerate_product_submagmas, enumerate_submagmas,
    enumerate_zero_homs, is_hom, FiniteMagma,
};
use gradeforge_core::{Budget, ElementSet};
use proptest::prelude::*;

fn magma(max_order: usize) -> impl Strategy<Value = FiniteMagma> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |t| FiniteMagma::from_flat(n, t, None).unwrap())
    })
}

/// A magma of order `n + 1` whose last element is absorbing.
fn zero_magma(max_order: usize) -> impl Strategy<Value = FiniteMagma> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(0..=n, n * n).prop_map(move |t| {
            let z = n;
            let table = (0..=n)
                .flat_map(|a| (0..=n).map(move |b| (a, b)))
                .map(|(a, b)| if a == z || b == z { z } else { t[a * n + b] })
                .collect();
            FiniteMagma::from_flat(n + 1, table, Some(z)).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m.pow(n as u32)).map(move |code| (0..n).map(|i| (code / m.pow(i as u32)) % m).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_relabelling((g, p) in magma(4).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let budget = Budget::default();
        let h = g.relabel(&p);
        prop_assert_eq!(canonical_form(&g, &budget).unwrap(), canonical_form(&h, &budget).unwrap());
        prop_assert!(are_isomorphic(&g, &h, &budget).unwrap());
    }

    #[test]
    fn homs_match_exhaustive_search(g in magma(3), h in magma(3)) {
        let found = enumerate_homs(&g, &h, &Budget::default()).unwrap();
        let expected: Vec<Vec<usize>> = all_maps(g.order(), h.order())
            .filter(|f| (0..g.order()).all(|a| (0..g.order()).all(|b| f[g.op(a, b)] == h.op(f[a], f[b]))))
            .collect();
        let found_set: BTreeSet<_> = found.iter().cloned().collect();
        prop_assert_eq!(found_set, expected.iter().cloned().collect::<BTreeSet<_>>());
        prop_assert_eq!(found.len(), expected.len());
        prop_assert!(found.iter().all(|f| is_hom(&g, &h, f)));
    }

    #[test]
    fn zero_homs_match_exhaustive_search(g in zero_magma(3), h in zero_magma(2)) {
        let (zg, zh) = (g.zero().unwrap(), h.zero().unwrap());
        let found: BTreeSet<_> = enumerate_zero_homs(&g, &h, &Budget::default()).unwrap().into_iter().collect();
        let expected: BTreeSet<Vec<usize>> = all_maps(g.order(), h.order())
            .filter(|f| (0..g.order()).all(|x| (f[x] == zh) == (x == zg)))
            .filter(|f| {
                (0..g.order()).all(|a| {
                    (0..g.order()).all(|b| g.op(a, b) == zg || f[g.op(a, b)] == h.op(f[a], f[b]))
                })
            })
            .collect();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn submagmas_are_the_closed_subsets(g in magma(5)) {
        let n = g.order();
        let found: BTreeSet<Vec<usize>> =
            enumerate_submagmas(&g, &Budget::default()).unwrap().iter().map(ElementSet::to_vec).collect();
        let expected: BTreeSet<Vec<usize>> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.op(a, b)))))
            .collect();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn magma_text_round_trips(g in magma(5)) {
        let text = print_magma(&g);
        let back = parse_magma(&text).unwrap();
        prop_assert_eq!(print_magma(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn filters_and_relations_are_inverse(g in magma(3), h in magma(2)) {
        let budget = Budget::default();
        let a = AlgebraPresentation::magma(g.clone());
        let t = Target::Magma(h.clone());
        for f in enumerate_product_submagmas(&g, &h, &budget).unwrap() {
            let w = grading_from_relation(&a, &t, &f).unwrap();
            let back = relation_from_filter(&a, &t, &w).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(grading_from_relation(&a, &t, &back).unwrap(), w);
        }
    }

    #[test]
    fn span_oracle_agrees_with_set_checks(
        g in magma(3),
        h in magma(2),
        assignment in prop::collection::vec(prop::collection::vec(any::<bool>(), 2), 3),
        seed in any::<u64>(),
    ) {
        let parts: Vec<Vec<usize>> = (0..h.order())
            .map(|k| (0..g.order()).filter(|&x| assignment[x][k]).collect())
            .collect();
        let w = ElementaryFamily::from_indices(g.order(), &parts).unwrap();
        let a = AlgebraPresentation::magma(g);
        let t = Target::Magma(h);
        // `verify` errors out if the set and span verdicts disagree
        let mod2: Vec<bool> = verify(&a, &t, &w, seed).unwrap().iter().map(|v| v.holds).collect();
        let a5 = a.with_modulus(5).unwrap();
        let mod5: Vec<bool> = verify(&a5, &t, &w, seed).unwrap().iter().map(|v| v.holds).collect();
        prop_assert_eq!(mod2.len(), Property::ALL.len());
        prop_assert_eq!(mod2, mod5);
    }
}
