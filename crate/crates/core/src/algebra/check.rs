use std::fmt;

use super::{AlgebraPresentation, ElementaryFamily, Target};
use crate::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Filter,
    Grading,
    Strong,
    Nonzero,
    Elementary,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Filter,
        Property::Grading,
        Property::Strong,
        Property::Nonzero,
        Property::Elementary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Filter => "filter",
            Property::Grading => "grading",
            Property::Strong => "strong",
            Property::Nonzero => "nonzero",
            Property::Elementary => "elementary",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a check failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// target elements `(h, h')` whose parts multiply badly
    Pair(usize, usize),
    /// a target element whose part is wrong
    Element(usize),
    /// a basis element lying in no part
    Basis(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub(crate) fn pass(property: Property) -> Self {
        Verdict {
            property,
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn fail(property: Property, witness: Option<Witness>) -> Self {
        Verdict {
            property,
            holds: false,
            witness,
        }
    }

    fn relabel(self, property: Property) -> Self {
        Verdict { property, ..self }
    }
}

pub(crate) fn sizes_match(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> bool {
    w.basis_size() == a.basis_size() && w.target_size() == target.size()
}

/// Parts with null basis elements removed.
pub(crate) fn effective_parts(a: &AlgebraPresentation, w: &ElementaryFamily) -> Vec<ElementSet> {
    w.parts()
        .iter()
        .map(|p| {
            let mut p = p.clone();
            if let Some(z) = a.null_basis() {
                p.remove(z);
            }
            p
        })
        .collect()
}

/// The part the zero-magma variant requires at the target's zero.
pub(crate) fn required_zero_part(a: &AlgebraPresentation) -> Option<ElementSet> {
    let z = a.zero_basis()?;
    let mut part = ElementSet::from_indices(a.basis_size(), [z]);
    if a.null_basis() == Some(z) {
        part.remove(z);
    }
    Some(part)
}

fn products(a: &AlgebraPresentation, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(a.basis_size());
    for g in x.iter() {
        for h in y.iter() {
            if let Some(gh) = a.product(g, h) {
                out.insert(gh);
            }
        }
    }
    out
}

/// `W_h W_{h'} ⊆ W_{hh'}`, and `= {0}` when `hh'` is undefined; in the
/// zero-magma variant also `W_0 = V_0`.
pub fn is_filter(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> Verdict {
    let p = Property::Filter;
    if !sizes_match(a, target, w) {
        return Verdict::fail(p, None);
    }
    let parts = effective_parts(a, w);
    if let Some(z) = target.exempt_zero() {
        if required_zero_part(a).as_ref() != Some(&parts[z]) {
            return Verdict::fail(p, Some(Witness::Element(z)));
        }
    }
    for h in 0..parts.len() {
        for k in 0..parts.len() {
            let prod = products(a, &parts[h], &parts[k]);
            let ok = match target.op(h, k) {
                Some(hk) => prod.is_subset(&parts[hk]),
                None => prod.is_empty(),
            };
            if !ok {
                return Verdict::fail(p, Some(Witness::Pair(h, k)));
            }
        }
    }
    Verdict::pass(p)
}

/// A filter with `W_h W_{h'} = W_{hh'}` wherever `hh'` is defined.
pub fn is_strong(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> Verdict {
    let p = Property::Strong;
    let filter = is_filter(a, target, w);
    if !filter.holds {
        return filter.relabel(p);
    }
    let parts = effective_parts(a, w);
    for h in 0..parts.len() {
        for k in 0..parts.len() {
            if let Some(hk) = target.op(h, k) {
                if products(a, &parts[h], &parts[k]) != parts[hk] {
                    return Verdict::fail(p, Some(Witness::Pair(h, k)));
                }
            }
        }
    }
    Verdict::pass(p)
}

/// A filter whose parts decompose the algebra as a direct sum.
pub fn is_grading(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> Verdict {
    let p = Property::Grading;
    let filter = is_filter(a, target, w);
    if !filter.holds {
        return filter.relabel(p);
    }
    let mut covered = ElementSet::empty(a.basis_size());
    for (h, part) in effective_parts(a, w).iter().enumerate() {
        if covered.intersects(part) {
            return Verdict::fail(p, Some(Witness::Element(h)));
        }
        covered.union_with(part);
    }
    if let Some(g) = a.effective_basis().iter().find(|&g| !covered.contains(g)) {
        return Verdict::fail(p, Some(Witness::Basis(g)));
    }
    Verdict::pass(p)
}

/// Every part is nonzero, except the zero's in the zero-magma variant.
pub fn is_nonzero(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> Verdict {
    let p = Property::Nonzero;
    if !sizes_match(a, target, w) {
        return Verdict::fail(p, None);
    }
    let exempt = target.exempt_zero();
    match effective_parts(a, w)
        .iter()
        .enumerate()
        .position(|(h, part)| Some(h) != exempt && part.is_empty())
    {
        Some(h) => Verdict::fail(p, Some(Witness::Element(h))),
        None => Verdict::pass(p),
    }
}

/// Every part is the span of the base parts it contains. Families stored
/// as basis subsets always are; the span oracle checks this independently.
pub fn is_elementary(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> Verdict {
    if sizes_match(a, target, w) {
        Verdict::pass(Property::Elementary)
    } else {
        Verdict::fail(Property::Elementary, None)
    }
}

pub(crate) fn check(property: Property, a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> Verdict {
    match property {
        Property::Filter => is_filter(a, target, w),
        Property::Grading => is_grading(a, target, w),
        Property::Strong => is_strong(a, target, w),
        Property::Nonzero => is_nonzero(a, target, w),
        Property::Elementary => is_elementary(a, target, w),
    }
}
