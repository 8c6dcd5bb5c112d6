use std::cmp::Ordering;

use itertools::Itertools;

use super::FiniteMagma;
use crate::{Budget, Error, Result};

fn check_permutation_budget(order: usize, budget: &Budget) -> Result<()> {
    if order > budget.max_permutation_order {
        return Err(Error::SizeOverflow {
            what: "permutation scan",
            size: order as u64,
            limit: budget.max_permutation_order as u64,
        });
    }
    Ok(())
}

/// Compares the table relabelled by `perm` against `reference`, entry by
/// entry in row-major order.
fn compare_relabelled(g: &FiniteMagma, perm: &[usize], inverse: &[usize], reference: &[usize]) -> Ordering {
    let n = g.order();
    for i in 0..n {
        for j in 0..n {
            let entry = perm[g.op(inverse[i], inverse[j])];
            match entry.cmp(&reference[i * n + j]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
    }
    Ordering::Equal
}

fn inverse_of(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// The lexicographically least relabelling of the Cayley table over all
/// element permutations. A designated zero is carried along; ties on the
/// table are broken by the smaller zero index.
pub fn canonical_form(g: &FiniteMagma, budget: &Budget) -> Result<FiniteMagma> {
    let n = g.order();
    check_permutation_budget(n, budget)?;
    let mut best = g.clone();
    for perm in (0..n).permutations(n) {
        let inverse = inverse_of(&perm);
        let ord = compare_relabelled(g, &perm, &inverse, best.table());
        let zero_smaller = || match (g.zero().map(|z| perm[z]), best.zero()) {
            (Some(a), Some(b)) => a < b,
            _ => false,
        };
        if ord == Ordering::Less || (ord == Ordering::Equal && zero_smaller()) {
            best = g.relabel(&perm);
        }
    }
    Ok(best)
}

pub fn are_isomorphic(g: &FiniteMagma, h: &FiniteMagma, budget: &Budget) -> Result<bool> {
    if g.order() != h.order() || g.zero().is_some() != h.zero().is_some() {
        return Ok(false);
    }
    Ok(canonical_form(g, budget)? == canonical_form(h, budget)?)
}

/// `true` when no relabelling produces a smaller table.
fn is_canonical(g: &FiniteMagma) -> bool {
    let n = g.order();
    (0..n).permutations(n).all(|perm| {
        let inverse = inverse_of(&perm);
        compare_relabelled(g, &perm, &inverse, g.table()) != Ordering::Less
    })
}

/// One canonical representative per isomorphism class of magmas of the
/// given order, in lexicographic order of their tables.
pub fn census(order: usize, budget: &Budget) -> Result<Vec<FiniteMagma>> {
    if order > budget.max_census_order {
        return Err(Error::SizeOverflow {
            what: "census order",
            size: order as u64,
            limit: budget.max_census_order as u64,
        });
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    let cells = order * order;
    let mut table = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        let magma = FiniteMagma::from_flat(order, table.clone(), None)?;
        if is_canonical(&magma) {
            out.push(magma);
        }
        // odometer, last cell fastest
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < order {
                break;
            }
            table[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::{cyclic_group, matrix_unit_zero_magma};

    fn w(s: &str) -> FiniteMagma {
        FiniteMagma::from_word(s).unwrap()
    }

    #[test]
    fn transposition_rule_matches_relabelling() {
        let b = Budget::default();
        // t : x1 x2 x3 x4 -> t(x4) t(x3) t(x2) t(x1)
        let t = |c: char| if c == 'a' { 'b' } else { 'a' };
        for word in ["baaa", "abaa", "aabb", "abba"] {
            let x: Vec<char> = word.chars().collect();
            let y: String = [t(x[3]), t(x[2]), t(x[1]), t(x[0])].iter().collect();
            assert_eq!(w(word).relabel(&[1, 0]), w(&y));
            assert!(are_isomorphic(&w(word), &w(&y), &b).unwrap());
        }
        assert_eq!(w("baaa").relabel(&[1, 0]), w("bbba"));
        // both are listed as separate class representatives
        assert!(!are_isomorphic(&w("baaa"), &w("aaab"), &b).unwrap());
    }

    #[test]
    fn constant_and_group_are_not_isomorphic() {
        assert!(!are_isomorphic(&w("aaaa"), &w("abba"), &Budget::default()).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let b = Budget::default();
        for word in ["baaa", "abcbcacab", "bcaabccab"] {
            let c = canonical_form(&w(word), &b).unwrap();
            assert_eq!(canonical_form(&c, &b).unwrap(), c);
        }
    }

    #[test]
    fn canonical_form_tracks_zero() {
        let b = Budget::default();
        let g2 = matrix_unit_zero_magma(2, &b).unwrap();
        let c = canonical_form(&g2, &b).unwrap();
        assert!(c.zero().is_some());
        let z = c.zero().unwrap();
        assert!(c.with_zero(z).is_ok());
    }

    #[test]
    fn census_sizes() {
        let b = Budget::default();
        assert_eq!(census(1, &b).unwrap().len(), 1);
        assert_eq!(census(2, &b).unwrap().len(), 10);
    }

    #[test]
    fn census_budget_guard() {
        assert!(matches!(census(4, &Budget::default()), Err(Error::SizeOverflow { .. })));
    }

    #[test]
    fn permutation_budget_guard() {
        let z = cyclic_group(9);
        assert!(canonical_form(&z, &Budget::default()).is_err());
    }
}
