//! Finite magmas and zero magmas.
//!
//! Elements are the dense indices `0..order`; the Cayley table is stored
//! row-major so `op(a, b)` is a single lookup. No axiom beyond closure is
//! assumed. A magma may carry a designated absorbing element, which turns
//! it into a zero magma.

mod constructions;
mod homs;
mod iso;
mod submagma;

pub use constructions::{
    abelian_group, cyclic_group, dihedral_group, group_with_zero, matrix_unit_zero_magma, permutation_group,
    quaternion_group, symmetric_group,
};
pub use homs::{enumerate_homs, enumerate_zero_homs, is_hom, is_zero_hom};
pub use iso::{are_isomorphic, canonical_form, census};
pub(crate) use submagma::zero_submagmas_with;
pub use submagma::{enumerate_product_submagmas, enumerate_submagmas, enumerate_zero_submagmas, is_zero_submagma};

use crate::{Budget, ElementSet, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMagma {
    order: usize,
    table: Vec<usize>,
    zero: Option<usize>,
}

impl FiniteMagma {
    /// Validates a Cayley table given as rows, with an optional zero.
    pub fn validate(order: usize, rows: Vec<Vec<usize>>, zero: Option<usize>) -> Result<Self> {
        if rows.len() != order {
            return Err(Error::BadShape {
                row: rows.len().min(order),
                expected: order,
                found: rows.len(),
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::BadShape {
                    row: r,
                    expected: order,
                    found: row.len(),
                });
            }
            table.extend(row);
        }
        Self::from_flat(order, table, zero)
    }

    /// Validates a row-major table of length `order * order`.
    pub fn from_flat(order: usize, table: Vec<usize>, zero: Option<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadShape {
                row: 0,
                expected: 1,
                found: 0,
            });
        }
        if table.len() != order * order {
            return Err(Error::BadShape {
                row: table.len() / order,
                expected: order,
                found: table.len() % order,
            });
        }
        if let Some((i, &value)) = table.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::IndexOutOfRange {
                row: i / order,
                col: i % order,
                value,
                order,
            });
        }
        let magma = FiniteMagma {
            order,
            table,
            zero: None,
        };
        match zero {
            Some(z) => magma.with_zero(z),
            None => Ok(magma),
        }
    }

    /// Parses the letter notation used for small magmas: `"abba"` is the
    /// order-2 magma with `aa = a`, `ab = b`, `ba = b`, `bb = a`.
    pub fn from_word(word: &str) -> Result<Self> {
        let letters: Vec<char> = word.chars().collect();
        let order = (letters.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != letters.len() {
            return Err(Error::BadShape {
                row: 0,
                expected: order.max(1),
                found: letters.len(),
            });
        }
        let table = letters
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let v = (c as usize).wrapping_sub('a' as usize);
                if v >= order {
                    Err(Error::IndexOutOfRange {
                        row: i / order,
                        col: i % order,
                        value: v,
                        order,
                    })
                } else {
                    Ok(v)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_flat(order, table, None)
    }

    /// Letter notation of the table, for orders up to 26.
    pub fn word(&self) -> Option<String> {
        (self.order <= 26).then(|| self.table.iter().map(|&v| (b'a' + v as u8) as char).collect())
    }

    /// Designates `zero` as the absorbing element.
    pub fn with_zero(mut self, zero: usize) -> Result<Self> {
        if zero >= self.order {
            return Err(Error::IndexOutOfRange {
                row: zero,
                col: zero,
                value: zero,
                order: self.order,
            });
        }
        for g in 0..self.order {
            if self.op(zero, g) != zero {
                return Err(Error::NotAbsorbing {
                    zero,
                    left: zero,
                    right: g,
                });
            }
            if self.op(g, zero) != zero {
                return Err(Error::NotAbsorbing {
                    zero,
                    left: g,
                    right: zero,
                });
            }
        }
        self.zero = Some(zero);
        Ok(self)
    }

    pub fn without_zero(&self) -> Self {
        FiniteMagma {
            zero: None,
            ..self.clone()
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub(crate) fn require_zero(&self) -> Result<usize> {
        self.zero.ok_or(Error::MissingZero)
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c)))))
    }

    /// Two-sided identity, if any.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|g| self.op(e, g) == g && self.op(g, e) == g))
    }

    pub fn is_group(&self) -> bool {
        self.check_group().is_ok()
    }

    /// Fails with [`Error::NotAGroup`] unless the table is a group.
    pub fn check_group(&self) -> Result<usize> {
        if !self.is_associative() {
            return Err(Error::NotAGroup("operation is not associative".into()));
        }
        let e = self
            .identity()
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for g in 0..self.order {
            if !(0..self.order).any(|h| self.op(g, h) == e && self.op(h, g) == e) {
                return Err(Error::NotAGroup(format!("element {g} has no inverse")));
            }
        }
        Ok(e)
    }

    /// Idempotent elements `g` with `gg = g`.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&g| self.op(g, g) == g).collect()
    }

    /// Componentwise product; the pair `(g, h)` is element `g * |H| + h`.
    /// No zero is designated on the result.
    pub fn product(&self, other: &FiniteMagma, budget: &Budget) -> Result<FiniteMagma> {
        let order = self.order.checked_mul(other.order).ok_or(Error::SizeOverflow {
            what: "product magma",
            size: u64::MAX,
            limit: budget.max_order as u64,
        })?;
        budget.check_order("product magma", order)?;
        let m = other.order;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let (g, h) = (x / m, x % m);
                let (g2, h2) = (y / m, y % m);
                table.push(self.op(g, g2) * m + other.op(h, h2));
            }
        }
        Ok(FiniteMagma {
            order,
            table,
            zero: None,
        })
    }

    /// Smallest submagma containing `seed`.
    pub fn closure(&self, seed: &ElementSet) -> ElementSet {
        let op = |a: usize, b: usize| Some(self.op(a, b));
        crate::search::closure(self.order, &op, seed)
    }

    pub fn is_closed(&self, set: &ElementSet) -> bool {
        set.iter().all(|a| set.iter().all(|b| set.contains(self.op(a, b))))
    }

    /// Restricts the table to a closed subset, relabelling its elements
    /// `0..len` in increasing order.
    pub fn restrict(&self, set: &ElementSet) -> Option<FiniteMagma> {
        if set.is_empty() || !self.is_closed(set) {
            return None;
        }
        let elems = set.to_vec();
        let index = |x: usize| elems.binary_search(&x).expect("closed subset");
        let order = elems.len();
        let table = elems
            .iter()
            .flat_map(|&a| elems.iter().map(move |&b| (a, b)))
            .map(|(a, b)| index(self.op(a, b)))
            .collect();
        let zero = self.zero.filter(|z| set.contains(*z)).map(index);
        Some(FiniteMagma { order, table, zero })
    }

    /// Relabels element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteMagma {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        FiniteMagma {
            order: n,
            table,
            zero: self.zero.map(|z| perm[z]),
        }
    }
}

/// A subset of `G × H`, stored as a bit set over the encoding `g * |H| + h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairRelation {
    left: usize,
    right: usize,
    pairs: ElementSet,
}

impl PairRelation {
    pub fn empty(left: usize, right: usize) -> Self {
        PairRelation {
            left,
            right,
            pairs: ElementSet::empty(left * right),
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(left: usize, right: usize, pairs: I) -> Result<Self> {
        let mut rel = PairRelation::empty(left, right);
        for (g, h) in pairs {
            if g >= left || h >= right {
                return Err(Error::IndexOutOfRange {
                    row: g,
                    col: h,
                    value: if g >= left { g } else { h },
                    order: if g >= left { left } else { right },
                });
            }
            rel.insert(g, h);
        }
        Ok(rel)
    }

    /// Wraps a bit set over the pair encoding.
    pub fn from_encoded(left: usize, right: usize, pairs: ElementSet) -> Self {
        assert_eq!(pairs.capacity(), left * right, "pair set capacity mismatch");
        PairRelation { left, right, pairs }
    }

    /// Graph `{(g, f(g))}` of a map.
    pub fn graph(map: &[usize], right: usize) -> Self {
        let mut rel = PairRelation::empty(map.len(), right);
        for (g, &h) in map.iter().enumerate() {
            rel.insert(g, h);
        }
        rel
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn encoded(&self) -> &ElementSet {
        &self.pairs
    }

    pub fn insert(&mut self, g: usize, h: usize) {
        self.pairs.insert(g * self.right + h);
    }

    pub fn contains(&self, g: usize, h: usize) -> bool {
        g < self.left && h < self.right && self.pairs.contains(g * self.right + h)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let right = self.right;
        self.pairs.iter().map(move |x| (x / right, x % right))
    }

    /// `f^{-1}(h)`: all `g` with `(g, h)` in the relation.
    pub fn preimage(&self, h: usize) -> ElementSet {
        ElementSet::from_indices(self.left, (0..self.left).filter(|&g| self.contains(g, h)))
    }

    pub fn is_subset(&self, other: &PairRelation) -> bool {
        self.left == other.left && self.right == other.right && self.pairs.is_subset(&other.pairs)
    }

    /// The relation as a total function, if it is the graph of one.
    pub fn as_map(&self) -> Option<Vec<usize>> {
        let mut map = vec![None; self.left];
        for (g, h) in self.pairs() {
            if map[g].replace(h).is_some() {
                return None;
            }
        }
        map.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn remark_g() -> FiniteMagma {
        // a = 0, b = 1, 0 = 2
        FiniteMagma::validate(3, vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]], Some(2)).unwrap()
    }

    #[test]
    fn trivial_magma_validates() {
        let m = FiniteMagma::validate(1, vec![vec![0]], None).unwrap();
        assert_eq!(m.order(), 1);
        assert_eq!(m.op(0, 0), 0);
    }

    #[test]
    fn remark_magma_validates_with_zero() {
        let g = remark_g();
        assert_eq!(g.zero(), Some(2));
        assert_eq!(g.op(0, 1), 2);
        assert_eq!(g.op(0, 0), 0);
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let err = FiniteMagma::validate(2, vec![vec![0, 2], vec![0, 0]], None).unwrap_err();
        assert_eq!(
            err,
            Error::IndexOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                order: 2
            }
        );
    }

    #[test]
    fn non_absorbing_zero_is_rejected() {
        let err = FiniteMagma::from_word("abba").unwrap().with_zero(0).unwrap_err();
        assert!(matches!(err, Error::NotAbsorbing { zero: 0, .. }));
    }

    #[test]
    fn ragged_table_is_rejected() {
        let err = FiniteMagma::validate(2, vec![vec![0, 1], vec![0]], None).unwrap_err();
        assert!(matches!(err, Error::BadShape { row: 1, .. }));
    }

    #[test]
    fn product_of_trivial_magmas_is_trivial() {
        let t = FiniteMagma::validate(1, vec![vec![0]], None).unwrap();
        let p = t.product(&t, &Budget::default()).unwrap();
        assert_eq!(p, t);
    }

    #[test]
    fn product_of_constant_magmas_is_constant() {
        let a = FiniteMagma::from_word("aaaa").unwrap();
        let p = a.product(&a, &Budget::default()).unwrap();
        assert_eq!(p.order(), 4);
        assert!(p.table().iter().all(|&v| v == 0));
    }

    #[test]
    fn product_of_z2_with_itself_is_klein_four() {
        let z2 = FiniteMagma::from_word("abba").unwrap();
        let p = z2.product(&z2, &Budget::default()).unwrap();
        // hand-computed componentwise table: (g,h) -> 2g + h, xor in both coordinates
        let expected: Vec<usize> = (0..4).flat_map(|x| (0..4).map(move |y| x ^ y)).collect();
        assert_eq!(p.table(), expected.as_slice());
        assert!(p.is_group());
    }

    #[test]
    fn product_respects_budget() {
        let z = cyclic_group(9);
        let budget = Budget::default();
        assert!(matches!(z.product(&z, &budget), Err(Error::SizeOverflow { .. })));
    }

    #[test]
    fn closure_of_empty_seed_is_empty() {
        let g = FiniteMagma::from_word("baaa").unwrap();
        assert!(g.closure(&ElementSet::empty(2)).is_empty());
    }

    #[test]
    fn closure_in_matrix_units() {
        let g2 = matrix_unit_zero_magma(2, &Budget::default()).unwrap();
        // e_{1,2} has index 1, zero has index 4
        let c = g2.closure(&ElementSet::from_indices(5, [1]));
        assert_eq!(c.to_vec(), vec![1, 4]);
    }

    #[test]
    fn closure_in_group_is_cyclic_subgroup() {
        let z = cyclic_group(12);
        let c = z.closure(&ElementSet::from_indices(12, [8]));
        assert_eq!(c.to_vec(), vec![0, 4, 8]);
    }

    #[test]
    fn relation_preimage_and_map() {
        let f = PairRelation::from_pairs(2, 2, [(0, 0), (1, 0)]).unwrap();
        assert_eq!(f.preimage(0).to_vec(), vec![0, 1]);
        assert!(f.preimage(1).is_empty());
        assert_eq!(f.as_map(), Some(vec![0, 0]));
        let g = PairRelation::from_pairs(2, 2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.as_map(), None);
        assert!(PairRelation::from_pairs(2, 2, [(2, 0)]).is_err());
    }

    #[test]
    fn word_round_trip() {
        for w in ["aaaa", "abba", "baaa", "abcbcacab"] {
            assert_eq!(FiniteMagma::from_word(w).unwrap().word().unwrap(), w);
        }
        assert!(FiniteMagma::from_word("abc").is_err());
        assert!(FiniteMagma::from_word("acaa").is_err());
    }
}
