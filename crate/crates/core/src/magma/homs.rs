use super::FiniteMagma;
use crate::search::solve_maps;
use crate::{Budget, ElementSet, Result};

pub fn is_hom(g: &FiniteMagma, h: &FiniteMagma, f: &[usize]) -> bool {
    f.len() == g.order()
        && f.iter().all(|&x| x < h.order())
        && (0..g.order()).all(|a| (0..g.order()).all(|b| f[g.op(a, b)] == h.op(f[a], f[b])))
}

/// `f^{-1}(0_H) = {0_G}` and `f(ab) = f(a)f(b)` whenever `ab ≠ 0_G`.
pub fn is_zero_hom(g: &FiniteMagma, h: &FiniteMagma, f: &[usize]) -> bool {
    let (Some(zg), Some(zh)) = (g.zero(), h.zero()) else {
        return false;
    };
    f.len() == g.order()
        && f.iter().all(|&x| x < h.order())
        && (0..g.order()).all(|a| (f[a] == zh) == (a == zg))
        && (0..g.order()).all(|a| {
            (0..g.order()).all(|b| {
                let ab = g.op(a, b);
                ab == zg || f[ab] == h.op(f[a], f[b])
            })
        })
}

/// All magma homomorphisms `G → H` as image vectors, in lexicographic order.
pub fn enumerate_homs(g: &FiniteMagma, h: &FiniteMagma, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    budget.check_order("domain magma", g.order())?;
    budget.check_order("codomain magma", h.order())?;
    let candidates = vec![ElementSet::full(h.order()); g.order()];
    let dom = |a: usize, b: usize| Some(g.op(a, b));
    let cod = |a: usize, b: usize| Some(h.op(a, b));
    let order: Vec<usize> = (0..g.order()).collect();
    solve_maps(&candidates, &dom, &cod, &order, budget)
}

/// All zero magma homomorphisms `G → H`, in lexicographic order.
pub fn enumerate_zero_homs(g: &FiniteMagma, h: &FiniteMagma, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let zg = g.require_zero()?;
    let zh = h.require_zero()?;
    budget.check_order("domain magma", g.order())?;
    budget.check_order("codomain magma", h.order())?;
    let mut nonzero = ElementSet::full(h.order());
    nonzero.remove(zh);
    let candidates: Vec<ElementSet> = (0..g.order())
        .map(|a| {
            if a == zg {
                ElementSet::from_indices(h.order(), [zh])
            } else {
                nonzero.clone()
            }
        })
        .collect();
    let dom = |a: usize, b: usize| {
        let ab = g.op(a, b);
        (ab != zg).then_some(ab)
    };
    let cod = |a: usize, b: usize| Some(h.op(a, b));
    let order: Vec<usize> = (0..g.order()).collect();
    solve_maps(&candidates, &dom, &cod, &order, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::{cyclic_group, group_with_zero, matrix_unit_zero_magma};
    use itertools::Itertools;

    fn w(s: &str) -> FiniteMagma {
        FiniteMagma::from_word(s).unwrap()
    }

    fn brute_force(g: &FiniteMagma, h: &FiniteMagma, zero: bool) -> Vec<Vec<usize>> {
        (0..g.order())
            .map(|_| 0..h.order())
            .multi_cartesian_product()
            .filter(|f| if zero { is_zero_hom(g, h, f) } else { is_hom(g, h, f) })
            .collect()
    }

    #[test]
    fn census_table_samples() {
        let b = Budget::default();
        let id = vec![0, 1];
        let ca = vec![0, 0];
        let cb = vec![1, 1];
        assert_eq!(
            enumerate_homs(&w("aaaa"), &w("aaaa"), &b).unwrap(),
            vec![ca.clone(), id.clone()]
        );
        assert!(enumerate_homs(&w("aaaa"), &w("baaa"), &b).unwrap().is_empty());
        assert_eq!(enumerate_homs(&w("aaab"), &w("aaab"), &b).unwrap(), vec![ca, id, cb]);
    }

    #[test]
    fn cyclic_hom_counts_are_gcds() {
        let b = Budget::default();
        for m in 1..=8 {
            for n in 1..=8 {
                let homs = enumerate_homs(&cyclic_group(m), &cyclic_group(n), &b).unwrap();
                assert_eq!(homs.len(), num_integer_gcd(m, n), "Z_{m} -> Z_{n}");
            }
        }
    }

    fn num_integer_gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            num_integer_gcd(b, a % b)
        }
    }

    #[test]
    fn remark_map_is_zero_hom_but_not_hom() {
        let b = Budget::default();
        let g = FiniteMagma::validate(3, vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]], Some(2)).unwrap();
        let h = FiniteMagma::validate(2, vec![vec![0, 1], vec![1, 1]], Some(1)).unwrap();
        let f = vec![0, 0, 1];
        assert!(enumerate_zero_homs(&g, &h, &b).unwrap().contains(&f));
        assert!(!enumerate_homs(&g, &h, &b).unwrap().contains(&f));
    }

    #[test]
    fn zero_homs_between_matrix_units() {
        let b = Budget::default();
        for m in 1..=3 {
            for n in 1..=3 {
                let gm = matrix_unit_zero_magma(m, &b).unwrap();
                let gn = matrix_unit_zero_magma(n, &b).unwrap();
                let homs = enumerate_zero_homs(&gm, &gn, &b).unwrap();
                assert_eq!(homs.len(), n.pow(m as u32));
            }
        }
    }

    #[test]
    fn zero_homs_into_group_with_zero() {
        let b = Budget::default();
        for n in 1..=3 {
            for q in 1..=4 {
                let gn = matrix_unit_zero_magma(n, &b).unwrap();
                let h = group_with_zero(&cyclic_group(q));
                let homs = enumerate_zero_homs(&gn, &h, &b).unwrap();
                assert_eq!(homs.len(), q.pow(n as u32 - 1));
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_order_three() {
        let b = Budget::default();
        let words = ["abcbcacab", "aaaaaaaab", "abcabcabc", "cccccccca", "abcbbbcbc"];
        for x in words {
            for y in words {
                let (g, h) = (w(x), w(y));
                assert_eq!(enumerate_homs(&g, &h, &b).unwrap(), brute_force(&g, &h, false));
            }
        }
    }

    #[test]
    fn missing_zero_is_an_error() {
        let err = enumerate_zero_homs(&w("aaaa"), &w("aaaa"), &Budget::default()).unwrap_err();
        assert_eq!(err, crate::Error::MissingZero);
    }
}
