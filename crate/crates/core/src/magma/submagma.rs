use super::{FiniteMagma, PairRelation};
use crate::search::closed_subsets;
use crate::{Budget, ElementSet, Result};

/// All submagmas of `G`, the empty set included, ordered by bit pattern.
pub fn enumerate_submagmas(g: &FiniteMagma, budget: &Budget) -> Result<Vec<ElementSet>> {
    budget.check_order("magma", g.order())?;
    let op = |a: usize, b: usize| Some(g.op(a, b));
    let none = ElementSet::empty(g.order());
    closed_subsets(g.order(), &op, &none, &none, budget)
}

/// All submagmas of `G × H`, as relations.
pub fn enumerate_product_submagmas(g: &FiniteMagma, h: &FiniteMagma, budget: &Budget) -> Result<Vec<PairRelation>> {
    let product = g.product(h, budget)?;
    Ok(enumerate_submagmas(&product, budget)?
        .into_iter()
        .map(|s| PairRelation::from_encoded(g.order(), h.order(), s))
        .collect())
}

pub fn is_zero_submagma(g: &FiniteMagma, h: &FiniteMagma, f: &PairRelation) -> bool {
    let (Some(zg), Some(zh)) = (g.zero(), h.zero()) else {
        return false;
    };
    if f.left_size() != g.order() || f.right_size() != h.order() {
        return false;
    }
    let preimage_ok = f.preimage(zh).to_vec() == vec![zg];
    preimage_ok
        && f.pairs().all(|(a, x)| {
            f.pairs().all(|(b, y)| {
                let ab = g.op(a, b);
                ab == zg || f.contains(ab, h.op(x, y))
            })
        })
}

/// All zero submagmas of `G × H`: relations with `f^{-1}(0_H) = {0_G}`
/// closed under componentwise products whose `G`-component is nonzero.
pub fn enumerate_zero_submagmas(g: &FiniteMagma, h: &FiniteMagma, budget: &Budget) -> Result<Vec<PairRelation>> {
    let zg = g.require_zero()?;
    let zh = h.require_zero()?;
    zero_submagmas_with(g, h, zg, zh, false, budget)
}

/// Shared by the category reduction, which additionally forbids `(0_G, h)`
/// for `h ≠ 0_H` so each subprecategory is hit once.
pub(crate) fn zero_submagmas_with(
    g: &FiniteMagma,
    h: &FiniteMagma,
    zg: usize,
    zh: usize,
    forbid_zero_row: bool,
    budget: &Budget,
) -> Result<Vec<PairRelation>> {
    budget.check_order("domain magma", g.order())?;
    budget.check_order("codomain magma", h.order())?;
    let m = h.order();
    let size = g.order() * m;
    let op = |x: usize, y: usize| {
        let ab = g.op(x / m, y / m);
        (ab != zg).then(|| ab * m + h.op(x % m, y % m))
    };
    let required = ElementSet::from_indices(size, [zg * m + zh]);
    let mut forbidden = ElementSet::empty(size);
    for a in (0..g.order()).filter(|&a| a != zg) {
        forbidden.insert(a * m + zh);
    }
    if forbid_zero_row {
        for x in (0..m).filter(|&x| x != zh) {
            forbidden.insert(zg * m + x);
        }
    }
    Ok(closed_subsets(size, &op, &required, &forbidden, budget)?
        .into_iter()
        .map(|s| PairRelation::from_encoded(g.order(), m, s))
        .collect())
}
