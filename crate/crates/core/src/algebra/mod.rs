//! Magma and category algebras with their fixed one-dimensional base
//! grading `V_g = K g`, the maps `F` (relations to families) and `M`
//! (families to relations), and checks of the filter and grading axioms.
//!
//! Families are stored as basis subsets. Every check is done twice: on the
//! subsets directly, and by exact linear algebra over `F_p` in [`span`].

mod check;
pub mod span;

pub use check::{is_elementary, is_filter, is_grading, is_nonzero, is_strong, Property, Verdict, Witness};

use crate::category::{
    enumerate_functors, enumerate_prefunctors, enumerate_subprecategories_via_zero_submagmas, FinitePrecategory,
};
use crate::magma::{
    enumerate_homs, enumerate_product_submagmas, enumerate_zero_homs, enumerate_zero_submagmas, FiniteMagma,
    PairRelation,
};
use crate::{Budget, ElementSet, Error, Result};

/// What the algebra is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// `K[G]`: every product of basis elements is a basis element.
    Magma(FiniteMagma),
    /// `K[G]` with `V_0 = {0}`: products landing on the zero of `G` are the
    /// ring's zero.
    Contracted(FiniteMagma),
    /// `K[Γ]`: non-composable products are the ring's zero.
    Category(FinitePrecategory),
}

/// The index set of a family: a magma, a zero magma (with `W_0 = V_0`
/// required and the zero exempt from nonzeroness), or a category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Magma(FiniteMagma),
    ZeroMagma(FiniteMagma),
    Category(FinitePrecategory),
}

impl Target {
    pub fn zero_magma(h: FiniteMagma) -> Result<Self> {
        h.require_zero()?;
        Ok(Target::ZeroMagma(h))
    }

    pub fn size(&self) -> usize {
        match self {
            Target::Magma(h) | Target::ZeroMagma(h) => h.order(),
            Target::Category(l) => l.morphism_count(),
        }
    }

    /// `h h'`, undefined for non-composable morphisms.
    pub fn op(&self, h: usize, k: usize) -> Option<usize> {
        match self {
            Target::Magma(m) | Target::ZeroMagma(m) => Some(m.op(h, k)),
            Target::Category(l) => l.compose(h, k),
        }
    }

    /// The zero exempted from nonzeroness, for the zero-magma variant.
    pub fn exempt_zero(&self) -> Option<usize> {
        match self {
            Target::ZeroMagma(h) => h.zero(),
            _ => None,
        }
    }
}

/// Product of basis elements: a basis index, or the ring's zero.
pub const RING_ZERO: Option<usize> = None;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    source: Source,
    basis_size: usize,
    /// row-major products, [`RING_ZERO`] where the product vanishes
    structure: Vec<Option<usize>>,
    /// basis index `g` with `V_g = {0}`
    null_basis: Option<usize>,
    /// zero of the source magma, whose part the zero-magma variant fixes
    zero_basis: Option<usize>,
    scalar_modulus: u32,
}

impl AlgebraPresentation {
    pub fn magma(g: FiniteMagma) -> Self {
        let n = g.order();
        let structure = g.table().iter().map(|&x| Some(x)).collect();
        AlgebraPresentation {
            basis_size: n,
            structure,
            null_basis: None,
            zero_basis: g.zero(),
            source: Source::Magma(g),
            scalar_modulus: 2,
        }
    }

    pub fn contracted(g: FiniteMagma) -> Result<Self> {
        let z = g.require_zero()?;
        let structure = g.table().iter().map(|&x| (x != z).then_some(x)).collect();
        Ok(AlgebraPresentation {
            basis_size: g.order(),
            structure,
            null_basis: Some(z),
            zero_basis: Some(z),
            source: Source::Contracted(g),
            scalar_modulus: 2,
        })
    }

    pub fn category(c: FinitePrecategory) -> Self {
        let m = c.morphism_count();
        let structure = (0..m)
            .flat_map(|s| (0..m).map(move |t| (s, t)))
            .map(|(s, t)| c.compose(s, t))
            .collect();
        AlgebraPresentation {
            basis_size: m,
            structure,
            null_basis: None,
            zero_basis: None,
            source: Source::Category(c),
            scalar_modulus: 2,
        }
    }

    /// Sets the prime used by the span oracle.
    pub fn with_modulus(mut self, p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::BasisMismatch(format!("scalar modulus {p} is not prime")));
        }
        self.scalar_modulus = p;
        Ok(self)
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn basis_size(&self) -> usize {
        self.basis_size
    }

    pub fn scalar_modulus(&self) -> u32 {
        self.scalar_modulus
    }

    #[inline]
    pub fn product(&self, g: usize, h: usize) -> Option<usize> {
        self.structure[g * self.basis_size + h]
    }

    pub fn null_basis(&self) -> Option<usize> {
        self.null_basis
    }

    pub fn zero_basis(&self) -> Option<usize> {
        self.zero_basis
    }

    /// Basis indices with `V_g ≠ {0}`.
    pub fn effective_basis(&self) -> ElementSet {
        let mut all = ElementSet::full(self.basis_size);
        if let Some(z) = self.null_basis {
            all.remove(z);
        }
        all
    }

    /// The base family `V_g = K g` indexed by the source itself.
    pub fn base_family(&self) -> (ElementaryFamily, Target) {
        let n = self.basis_size;
        let parts = (0..n)
            .map(|g| {
                if Some(g) == self.null_basis {
                    ElementSet::empty(n)
                } else {
                    ElementSet::from_indices(n, [g])
                }
            })
            .collect();
        let target = match &self.source {
            Source::Magma(g) => Target::Magma(g.clone()),
            Source::Contracted(g) => Target::ZeroMagma(g.clone()),
            Source::Category(c) => Target::Category(c.clone()),
        };
        (ElementaryFamily { basis_size: n, parts }, target)
    }
}

/// `(W_h)_h` with `W_h` spanned by the `V_g`, `g ∈ parts[h]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryFamily {
    basis_size: usize,
    parts: Vec<ElementSet>,
}

impl ElementaryFamily {
    pub fn new(basis_size: usize, parts: Vec<ElementSet>) -> Result<Self> {
        if let Some(h) = parts.iter().position(|p| p.capacity() != basis_size) {
            return Err(Error::BasisMismatch(format!(
                "part {h} is over {} basis elements, expected {basis_size}",
                parts[h].capacity()
            )));
        }
        Ok(ElementaryFamily { basis_size, parts })
    }

    pub fn from_indices(basis_size: usize, parts: &[Vec<usize>]) -> Result<Self> {
        for (h, p) in parts.iter().enumerate() {
            if let Some(&g) = p.iter().find(|&&g| g >= basis_size) {
                return Err(Error::BasisMismatch(format!(
                    "part {h} lists basis index {g}, basis has {basis_size} elements"
                )));
            }
        }
        Self::new(
            basis_size,
            parts
                .iter()
                .map(|p| ElementSet::from_indices(basis_size, p.iter().copied()))
                .collect(),
        )
    }

    pub fn zero(basis_size: usize, target_size: usize) -> Self {
        ElementaryFamily {
            basis_size,
            parts: vec![ElementSet::empty(basis_size); target_size],
        }
    }

    pub fn basis_size(&self) -> usize {
        self.basis_size
    }

    pub fn target_size(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, h: usize) -> &ElementSet {
        &self.parts[h]
    }

    pub fn parts(&self) -> &[ElementSet] {
        &self.parts
    }

    /// Pointwise inclusion of parts.
    pub fn is_below(&self, other: &ElementaryFamily) -> bool {
        self.parts.len() == other.parts.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a.is_subset(b))
    }
}

fn check_sizes(a: &AlgebraPresentation, target: &Target, basis: usize, target_size: usize) -> Result<()> {
    if basis != a.basis_size() || target_size != target.size() {
        return Err(Error::BasisMismatch(format!(
            "expected {} basis and {} target elements, found {basis} and {target_size}",
            a.basis_size(),
            target.size()
        )));
    }
    Ok(())
}

/// `F(f)_h = Σ_{g ∈ f⁻¹(h)} V_g`, stored as `f⁻¹(h)` without null basis
/// elements.
pub fn grading_from_relation(a: &AlgebraPresentation, target: &Target, f: &PairRelation) -> Result<ElementaryFamily> {
    check_sizes(a, target, f.left_size(), f.right_size())?;
    let mut parts = vec![ElementSet::empty(a.basis_size()); target.size()];
    for (g, h) in f.pairs() {
        if Some(g) != a.null_basis() {
            parts[h].insert(g);
        }
    }
    Ok(ElementaryFamily {
        basis_size: a.basis_size(),
        parts,
    })
}

/// `M(W) = {(g, h) : V_g ⊆ W_h}`. A null basis element lies in every part.
pub fn relation_from_filter(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily) -> Result<PairRelation> {
    check_sizes(a, target, w.basis_size(), w.target_size())?;
    let mut rel = PairRelation::empty(a.basis_size(), target.size());
    for (h, part) in w.parts.iter().enumerate() {
        for g in part.iter() {
            rel.insert(g, h);
        }
        if let Some(z) = a.null_basis() {
            rel.insert(z, h);
        }
    }
    Ok(rel)
}

fn unsupported(a: &AlgebraPresentation, target: &Target) -> Error {
    let src = match a.source() {
        Source::Magma(_) => "magma algebra",
        Source::Contracted(_) => "contracted magma algebra",
        Source::Category(_) => "category algebra",
    };
    let tgt = match target {
        Target::Magma(_) => "magma",
        Target::ZeroMagma(_) => "zero magma",
        Target::Category(_) => "category",
    };
    Error::BasisMismatch(format!("no elementary correspondence for a {src} graded by a {tgt}"))
}

/// Maps underlying the elementary gradings: homomorphisms, zero
/// homomorphisms, or prefunctors (functors when `functors_only`).
pub fn grading_relations(
    a: &AlgebraPresentation,
    target: &Target,
    functors_only: bool,
    budget: &Budget,
) -> Result<Vec<PairRelation>> {
    let graphs = |maps: Vec<Vec<usize>>, right: usize| maps.iter().map(|f| PairRelation::graph(f, right)).collect();
    match (a.source(), target) {
        (Source::Magma(g), Target::Magma(h)) => Ok(graphs(enumerate_homs(g, h, budget)?, h.order())),
        (Source::Magma(g), Target::ZeroMagma(h)) => {
            let (zg, zh) = (g.require_zero()?, h.require_zero()?);
            let homs = enumerate_homs(g, h, budget)?
                .into_iter()
                .filter(|f| (0..g.order()).all(|x| (f[x] == zh) == (x == zg)))
                .collect();
            Ok(graphs(homs, h.order()))
        }
        (Source::Contracted(g), Target::ZeroMagma(h)) => Ok(graphs(enumerate_zero_homs(g, h, budget)?, h.order())),
        (Source::Category(g), Target::Category(l)) => {
            let maps = if functors_only {
                enumerate_functors(g, l, budget)?
            } else {
                enumerate_prefunctors(g, l, budget)?
            };
            Ok(maps
                .iter()
                .map(|f| PairRelation::graph(&f.morphism_map, l.morphism_count()))
                .collect())
        }
        _ => Err(unsupported(a, target)),
    }
}

/// Relations underlying the elementary filters: submagmas, zero
/// submagmas, or subprecategories compatible with composition.
pub fn filter_relations(a: &AlgebraPresentation, target: &Target, budget: &Budget) -> Result<Vec<PairRelation>> {
    match (a.source(), target) {
        (Source::Magma(g), Target::Magma(h)) => enumerate_product_submagmas(g, h, budget),
        (Source::Magma(g), Target::ZeroMagma(h)) => {
            let (zg, zh) = (g.require_zero()?, h.require_zero()?);
            let zero_part = ElementSet::from_indices(g.order(), [zg]);
            Ok(enumerate_product_submagmas(g, h, budget)?
                .into_iter()
                .filter(|f| f.preimage(zh) == zero_part)
                .collect())
        }
        (Source::Contracted(g), Target::ZeroMagma(h)) => enumerate_zero_submagmas(g, h, budget),
        (Source::Category(g), Target::Category(l)) => enumerate_subprecategories_via_zero_submagmas(g, l, budget),
        _ => Err(unsupported(a, target)),
    }
}

/// `F` applied to every map from [`grading_relations`].
pub fn enumerate_elementary_gradings(
    a: &AlgebraPresentation,
    target: &Target,
    functors_only: bool,
    budget: &Budget,
) -> Result<Vec<ElementaryFamily>> {
    grading_relations(a, target, functors_only, budget)?
        .iter()
        .map(|f| grading_from_relation(a, target, f))
        .collect()
}

/// `F` applied to every relation from [`filter_relations`]; the zero
/// filter (from the empty relation) is included when it qualifies.
pub fn enumerate_elementary_filters(
    a: &AlgebraPresentation,
    target: &Target,
    budget: &Budget,
) -> Result<Vec<ElementaryFamily>> {
    filter_relations(a, target, budget)?
        .iter()
        .map(|f| grading_from_relation(a, target, f))
        .collect()
}
