use std::collections::BTreeSet;

use super::FiniteMagma;
use crate::{Budget, Error, Result};

/// `Z_n` under addition mod `n`.
pub fn cyclic_group(n: usize) -> FiniteMagma {
    assert!(n >= 1, "cyclic group needs a positive order");
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    FiniteMagma::from_flat(n, table, None).expect("cyclic table is valid")
}

/// `Z_{n_1} × … × Z_{n_k}`; the empty list gives the trivial group.
pub fn abelian_group(cyclic_orders: &[usize], budget: &Budget) -> Result<FiniteMagma> {
    cyclic_orders.iter().try_fold(cyclic_group(1), |acc, &n| {
        if n == 0 {
            return Err(Error::NotAGroup("cyclic factor of order 0".into()));
        }
        if acc.order() == 1 {
            return Ok(cyclic_group(n));
        }
        acc.product(&cyclic_group(n), budget)
    })
}

/// The group generated by permutations of `0..degree`, with
/// `(p · q)(x) = p(q(x))`. Elements are numbered in lexicographic order of
/// their images, so the identity is element 0.
pub fn permutation_group(degree: usize, generators: &[Vec<usize>], budget: &Budget) -> Result<FiniteMagma> {
    let identity: Vec<usize> = (0..degree).collect();
    for g in generators {
        let image: BTreeSet<usize> = g.iter().copied().collect();
        if g.len() != degree || image != identity.iter().copied().collect() {
            return Err(Error::NotAGroup(format!("{g:?} is not a permutation of 0..{degree}")));
        }
    }
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
    let mut elements: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let next = compose(g, &p);
            if elements.insert(next.clone()) {
                budget.check_order("permutation group", elements.len())?;
                frontier.push(next);
            }
        }
    }
    let elements: Vec<Vec<usize>> = elements.into_iter().collect();
    let index = |p: &Vec<usize>| elements.binary_search(p).expect("group is closed");
    let n = elements.len();
    let table = elements
        .iter()
        .flat_map(|p| elements.iter().map(|q| index(&compose(p, q))))
        .collect();
    FiniteMagma::from_flat(n, table, None)
}

pub fn symmetric_group(degree: usize, budget: &Budget) -> Result<FiniteMagma> {
    if degree < 2 {
        return Ok(cyclic_group(1));
    }
    let transposition: Vec<usize> = (0..degree)
        .map(|x| match x {
            0 => 1,
            1 => 0,
            _ => x,
        })
        .collect();
    let cycle: Vec<usize> = (0..degree).map(|x| (x + 1) % degree).collect();
    permutation_group(degree, &[transposition, cycle], budget)
}

/// Symmetries of a regular `k`-gon, order `2k`.
pub fn dihedral_group(k: usize, budget: &Budget) -> Result<FiniteMagma> {
    if k < 3 {
        return Err(Error::NotAGroup("dihedral group needs k >= 3".into()));
    }
    let rotation: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
    let reflection: Vec<usize> = (0..k).map(|x| (k - x) % k).collect();
    permutation_group(k, &[rotation, reflection], budget)
}

/// `Q_8 = {±1, ±i, ±j, ±k}`; element `4s + u` is `(-1)^s` times unit `u`
/// with units ordered `1, i, j, k`.
pub fn quaternion_group() -> FiniteMagma {
    // (sign, unit) of unit products, row = left factor
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = (0..8)
        .flat_map(|a| {
            (0..8).map(move |b| {
                let (s, u) = UNITS[a % 4][b % 4];
                ((a / 4 + b / 4 + s) % 2) * 4 + u
            })
        })
        .collect();
    FiniteMagma::from_flat(8, table, None).expect("quaternion table is valid")
}

/// Adjoins a new absorbing element (index `order`) and designates it zero.
pub fn group_with_zero(group: &FiniteMagma) -> FiniteMagma {
    let n = group.order();
    let z = n;
    let table = (0..=n)
        .flat_map(|a| (0..=n).map(move |b| if a == z || b == z { z } else { group.op(a, b) }))
        .collect();
    FiniteMagma::from_flat(n + 1, table, Some(z)).expect("adjoined zero is absorbing")
}

/// The zero magma `G_n` of matrix units `e_{i,j}` and `0`.
///
/// `e_{i,j}` (1-based) is element `(i-1) * n + (j-1)`; zero is element `n²`.
/// `e_{i,j} e_{k,l} = e_{i,l}` if `j = k`, else `0`.
pub fn matrix_unit_zero_magma(n: usize, budget: &Budget) -> Result<FiniteMagma> {
    if n == 0 {
        return Err(Error::BadShape {
            row: 0,
            expected: 1,
            found: 0,
        });
    }
    let order = n * n + 1;
    budget.check_order("matrix unit magma", order)?;
    let zero = n * n;
    let table = (0..order)
        .flat_map(|a| {
            (0..order).map(move |b| {
                if a == zero || b == zero || a % n != b / n {
                    zero
                } else {
                    (a / n) * n + b % n
                }
            })
        })
        .collect();
    FiniteMagma::from_flat(order, table, Some(zero))
}
