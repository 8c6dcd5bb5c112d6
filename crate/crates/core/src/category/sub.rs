use super::FinitePrecategory;
use crate::magma::zero_submagmas_with;
use crate::magma::PairRelation;
use crate::search::closed_subsets;
use crate::{Budget, ElementSet, Result};

/// `true` when the relation is closed under composition in `Γ × Λ`, where
/// `(s, x) ∘ (t, y)` is defined exactly when both `s ∘ t` and `x ∘ y` are.
pub fn is_subprecategory(g: &FinitePrecategory, l: &FinitePrecategory, rel: &PairRelation) -> bool {
    rel.left_size() == g.morphism_count()
        && rel.right_size() == l.morphism_count()
        && rel.pairs().all(|(s, x)| {
            rel.pairs().all(|(t, y)| match (g.compose(s, t), l.compose(x, y)) {
                (Some(st), Some(xy)) => rel.contains(st, xy),
                _ => true,
            })
        })
}

/// All subprecategories of `Γ × Λ` (the empty one included) as relations
/// between morphisms, sorted by bit pattern.
pub fn enumerate_subprecategories(
    g: &FinitePrecategory,
    l: &FinitePrecategory,
    budget: &Budget,
) -> Result<Vec<PairRelation>> {
    let m = l.morphism_count();
    let size = g.morphism_count() * m;
    budget.check_order("product morphisms", size)?;
    let op = |a: usize, b: usize| Some(g.compose(a / m, b / m)? * m + l.compose(a % m, b % m)?);
    let none = ElementSet::empty(size);
    Ok(closed_subsets(size, &op, &none, &none, budget)?
        .into_iter()
        .map(|s| PairRelation::from_encoded(g.morphism_count(), m, s))
        .collect())
}

/// Relations read off the zero submagmas of `(Γ ∪ {0}) × (Λ ∪ {0})` that
/// pair zero only with zero, with `(0, 0)` removed.
///
/// These are the relations closed in `Γ × Λ` that in addition send every
/// composable pair to a composable pair. When `Λ` has one object the extra
/// condition is vacuous and the result equals
/// [`enumerate_subprecategories`].
pub fn enumerate_subprecategories_via_zero_submagmas(
    g: &FinitePrecategory,
    l: &FinitePrecategory,
    budget: &Budget,
) -> Result<Vec<PairRelation>> {
    let (gz, lz) = (g.adjoin_zero(), l.adjoin_zero());
    let (mg, ml) = (g.morphism_count(), l.morphism_count());
    let mut out: Vec<PairRelation> = zero_submagmas_with(&gz, &lz, mg, ml, true, budget)?
        .into_iter()
        .map(|f| PairRelation::from_pairs(mg, ml, f.pairs().filter(|&(s, _)| s != mg)).expect("pairs in range"))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{group_as_category, matrix_groupoid};
    use crate::fixtures;
    use crate::magma::cyclic_group;

    fn brute_force(g: &FinitePrecategory, l: &FinitePrecategory) -> Vec<PairRelation> {
        let size = g.morphism_count() * l.morphism_count();
        let mut out: Vec<PairRelation> = (0u64..1 << size)
            .map(|mask| {
                let set = ElementSet::from_indices(size, (0..size).filter(|i| mask >> i & 1 == 1));
                PairRelation::from_encoded(g.morphism_count(), l.morphism_count(), set)
            })
            .filter(|r| is_subprecategory(g, l, r))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn example_against_z2_matches_brute_force() {
        let b = Budget::default();
        let (g, z2) = (fixtures::two_object_category(), fixtures::z2_category());
        let direct = enumerate_subprecategories(&g, &z2, &b).unwrap();
        assert_eq!(direct, brute_force(&g, &z2));
        assert_eq!(
            enumerate_subprecategories_via_zero_submagmas(&g, &z2, &b).unwrap(),
            direct
        );
    }

    #[test]
    fn one_object_targets_agree() {
        let b = Budget::default();
        let targets = [
            fixtures::z2_category(),
            fixtures::idempotent_monoid_category(),
            group_as_category(&cyclic_group(3)).unwrap(),
        ];
        for src in [fixtures::two_object_category(), matrix_groupoid(2, &b).unwrap()] {
            for l in &targets {
                assert_eq!(
                    enumerate_subprecategories(&src, l, &b).unwrap(),
                    enumerate_subprecategories_via_zero_submagmas(&src, l, &b).unwrap()
                );
            }
        }
    }

    #[test]
    fn several_objects_reduction_is_stricter() {
        let b = Budget::default();
        let t2 = matrix_groupoid(2, &b).unwrap();
        let direct = enumerate_subprecategories(&t2, &t2, &b).unwrap();
        let via = enumerate_subprecategories_via_zero_submagmas(&t2, &t2, &b).unwrap();
        assert!(via.len() < direct.len());
        assert!(via.iter().all(|r| direct.contains(r)));
        // e22 ∘ e22 is defined but e12 ∘ e12 is not
        let r = PairRelation::from_pairs(4, 4, [(0, 0), (3, 1)]).unwrap();
        assert!(direct.contains(&r));
        assert!(!via.contains(&r));
    }
}
