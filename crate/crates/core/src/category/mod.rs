//! Finite precategories, categories and groupoids.
//!
//! Morphisms are the primary carrier: a morphism is an index with a domain
//! and a codomain object, and `compose(s, t)` is `s ∘ t`, defined exactly
//! when `dom(s) = cod(t)`. Identities are optional per object; when every
//! object has one the precategory is a category.

mod functor;
mod sub;

pub use functor::{
    enumerate_functors, enumerate_prefunctors, enumerate_prefunctors_via_zero_magmas, generating_set, MorphismMap,
    ReductionOutcome,
};
pub use sub::{enumerate_subprecategories, enumerate_subprecategories_via_zero_submagmas, is_subprecategory};

use crate::magma::FiniteMagma;
use crate::{Budget, ElementSet, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePrecategory {
    object_count: usize,
    /// `(dom, cod)` per morphism
    morphisms: Vec<(usize, usize)>,
    /// row-major `s ∘ t`
    comp: Vec<Option<usize>>,
    identity_at: Vec<Option<usize>>,
}

/// A connected component, with the original indices of its objects and
/// morphisms (both increasing) and the component relabelled from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
    pub category: FinitePrecategory,
}

impl FinitePrecategory {
    /// Validates a precategory given by its morphisms, one `(s, t, s∘t)`
    /// triple per composable pair, and `(object, morphism)` identities.
    pub fn validate(
        object_count: usize,
        morphisms: Vec<(usize, usize)>,
        compositions: &[(usize, usize, usize)],
        identities: &[(usize, usize)],
    ) -> Result<Self> {
        let m = morphisms.len();
        for (s, &(d, c)) in morphisms.iter().enumerate() {
            if d >= object_count || c >= object_count {
                return Err(Error::BadComposition {
                    left: s,
                    right: s,
                    reason: format!("morphism {s} has an endpoint outside 0..{object_count}"),
                });
            }
        }
        let mut comp = vec![None; m * m];
        for &(s, t, st) in compositions {
            if s >= m || t >= m || st >= m {
                return Err(Error::BadComposition {
                    left: s,
                    right: t,
                    reason: format!("morphism index out of range 0..{m}"),
                });
            }
            if morphisms[s].0 != morphisms[t].1 {
                return Err(Error::BadComposition {
                    left: s,
                    right: t,
                    reason: "pair is not composable".into(),
                });
            }
            match comp[s * m + t] {
                Some(prev) if prev != st => {
                    return Err(Error::BadComposition {
                        left: s,
                        right: t,
                        reason: format!("composite given as both {prev} and {st}"),
                    })
                }
                _ => comp[s * m + t] = Some(st),
            }
        }
        let mut identity_at = vec![None; object_count];
        for &(e, i) in identities {
            if e >= object_count || i >= m {
                return Err(Error::BadIdentity {
                    object: e,
                    reason: format!("identity {i} out of range"),
                });
            }
            if identity_at[e].replace(i).is_some_and(|prev| prev != i) {
                return Err(Error::BadIdentity {
                    object: e,
                    reason: "two identities declared".into(),
                });
            }
        }
        FinitePrecategory {
            object_count,
            morphisms,
            comp,
            identity_at,
        }
        .checked()
    }

    fn checked(self) -> Result<Self> {
        let m = self.morphisms.len();
        let mut touched = vec![false; self.object_count];
        for &(d, c) in &self.morphisms {
            touched[d] = true;
            touched[c] = true;
        }
        if let Some(e) = touched.iter().position(|&t| !t) {
            return Err(Error::IsolatedObject(e));
        }
        for s in 0..m {
            for t in 0..m {
                let composable = self.dom(s) == self.cod(t);
                match (composable, self.comp[s * m + t]) {
                    (true, None) => {
                        return Err(Error::BadComposition {
                            left: s,
                            right: t,
                            reason: "missing composite for a composable pair".into(),
                        })
                    }
                    (false, Some(_)) => {
                        return Err(Error::BadComposition {
                            left: s,
                            right: t,
                            reason: "pair is not composable".into(),
                        })
                    }
                    (true, Some(st)) => {
                        if self.dom(st) != self.dom(t) || self.cod(st) != self.cod(s) {
                            return Err(Error::BadComposition {
                                left: s,
                                right: t,
                                reason: format!("composite {st} has the wrong domain or codomain"),
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for s in 0..m {
            for t in 0..m {
                let Some(st) = self.compose(s, t) else { continue };
                for u in 0..m {
                    let Some(tu) = self.compose(t, u) else { continue };
                    if self.compose(st, u) != self.compose(s, tu) {
                        return Err(Error::NotAssociative(s, t, u));
                    }
                }
            }
        }
        for (e, id) in self.identity_at.iter().enumerate() {
            let Some(i) = *id else { continue };
            if self.dom(i) != e || self.cod(i) != e {
                return Err(Error::BadIdentity {
                    object: e,
                    reason: format!("morphism {i} is not an endomorphism of {e}"),
                });
            }
            for s in 0..m {
                if self.dom(s) == e && self.compose(s, i) != Some(s) {
                    return Err(Error::BadIdentity {
                        object: e,
                        reason: format!("{s} ∘ {i} != {s}"),
                    });
                }
                if self.cod(s) == e && self.compose(i, s) != Some(s) {
                    return Err(Error::BadIdentity {
                        object: e,
                        reason: format!("{i} ∘ {s} != {s}"),
                    });
                }
            }
        }
        Ok(self)
    }

    fn from_parts(
        object_count: usize,
        morphisms: Vec<(usize, usize)>,
        compose: impl Fn(usize, usize) -> Option<usize>,
        identity_at: Vec<Option<usize>>,
    ) -> Result<Self> {
        let m = morphisms.len();
        let comp = (0..m)
            .flat_map(|s| (0..m).map(move |t| (s, t)))
            .map(|(s, t)| compose(s, t))
            .collect();
        FinitePrecategory {
            object_count,
            morphisms,
            comp,
            identity_at,
        }
        .checked()
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn dom(&self, s: usize) -> usize {
        self.morphisms[s].0
    }

    pub fn cod(&self, s: usize) -> usize {
        self.morphisms[s].1
    }

    /// `s ∘ t`, defined when `dom(s) = cod(t)`.
    #[inline]
    pub fn compose(&self, s: usize, t: usize) -> Option<usize> {
        self.comp[s * self.morphisms.len() + t]
    }

    pub fn identity(&self, e: usize) -> Option<usize> {
        self.identity_at[e]
    }

    pub fn is_identity(&self, s: usize) -> bool {
        self.identity_at[self.dom(s)] == Some(s)
    }

    /// `true` when every object has an identity.
    pub fn is_category(&self) -> bool {
        self.identity_at.iter().all(Option::is_some)
    }

    /// Morphisms `x → y`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphism_count())
            .filter(|&s| self.morphisms[s] == (x, y))
            .collect()
    }

    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.morphism_count();
        (0..m).flat_map(move |s| (0..m).filter_map(move |t| self.compose(s, t).map(|st| (s, t, st))))
    }

    pub fn inverse(&self, s: usize) -> Option<usize> {
        let (d, c) = self.morphisms[s];
        let (id_d, id_c) = (self.identity(d)?, self.identity(c)?);
        self.hom(c, d)
            .into_iter()
            .find(|&t| self.compose(s, t) == Some(id_c) && self.compose(t, s) == Some(id_d))
    }

    pub fn is_groupoid(&self) -> bool {
        self.is_category() && (0..self.morphism_count()).all(|s| self.inverse(s).is_some())
    }

    /// At most one morphism between any ordered pair of objects.
    pub fn is_thin(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.morphisms.iter().all(|p| seen.insert(*p))
    }

    /// At least one morphism between any ordered pair of objects.
    pub fn is_connected(&self) -> bool {
        let n = self.object_count;
        let mut present = vec![false; n * n];
        for &(d, c) in &self.morphisms {
            present[d * n + c] = true;
        }
        present.into_iter().all(|p| p)
    }

    /// Restriction to a set of morphisms closed under composition, on the
    /// objects they touch. Identities are kept when they are in the set.
    pub fn restrict(&self, morphisms: &ElementSet) -> Result<Component> {
        let kept = morphisms.to_vec();
        let mut objects: Vec<usize> = kept.iter().flat_map(|&s| [self.dom(s), self.cod(s)]).collect();
        objects.sort_unstable();
        objects.dedup();
        let obj_index = |x: usize| objects.binary_search(&x).expect("touched object");
        let mor_index = |s: usize| kept.binary_search(&s).ok();
        let local: Vec<(usize, usize)> = kept
            .iter()
            .map(|&s| (obj_index(self.dom(s)), obj_index(self.cod(s))))
            .collect();
        let m = kept.len();
        let mut comp = vec![None; m * m];
        for a in 0..m {
            for b in 0..m {
                if let Some(st) = self.compose(kept[a], kept[b]) {
                    comp[a * m + b] = Some(mor_index(st).ok_or_else(|| Error::BadComposition {
                        left: kept[a],
                        right: kept[b],
                        reason: "morphism set is not closed under composition".into(),
                    })?);
                }
            }
        }
        let identity_at = objects.iter().map(|&e| self.identity(e).and_then(mor_index)).collect();
        let category = FinitePrecategory {
            object_count: objects.len(),
            morphisms: local,
            comp,
            identity_at,
        }
        .checked()?;
        Ok(Component {
            objects,
            morphisms: kept,
            category,
        })
    }

    /// Components of the underlying undirected graph, ordered by their
    /// smallest object.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.object_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for &(d, c) in &self.morphisms {
            let (a, b) = (find(&mut parent, d), find(&mut parent, c));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let mut components = Vec::new();
        let mut seen = roots.clone();
        seen.sort_unstable();
        seen.dedup();
        for root in seen {
            let set = ElementSet::from_indices(
                self.morphism_count(),
                (0..self.morphism_count()).filter(|&s| roots[self.dom(s)] == root),
            );
            components.push(self.restrict(&set).expect("components are closed"));
        }
        roots.clear();
        components
    }

    /// The monoid of endomorphisms of `e`, as a magma on its morphisms in
    /// increasing index order.
    pub fn vertex_monoid(&self, e: usize) -> Option<FiniteMagma> {
        let endo = self.hom(e, e);
        if endo.is_empty() {
            return None;
        }
        let index = |s: usize| endo.binary_search(&s).expect("endomorphisms are closed");
        let table = endo
            .iter()
            .flat_map(|&s| endo.iter().map(move |&t| (s, t)))
            .map(|(s, t)| index(self.compose(s, t).expect("endomorphisms compose")))
            .collect();
        Some(FiniteMagma::from_flat(endo.len(), table, None).expect("closed table"))
    }

    /// The magma `mor ∪ {0}` with `s · t = s ∘ t` when composable and `0`
    /// otherwise. Zero is the last element.
    pub fn adjoin_zero(&self) -> FiniteMagma {
        let m = self.morphism_count();
        let table = (0..=m)
            .flat_map(|s| (0..=m).map(move |t| (s, t)))
            .map(|(s, t)| {
                if s == m || t == m {
                    m
                } else {
                    self.compose(s, t).unwrap_or(m)
                }
            })
            .collect();
        FiniteMagma::from_flat(m + 1, table, Some(m)).expect("adjoined zero is absorbing")
    }
}

/// The thin connected groupoid on `n` objects; morphism `(i-1) n + (j-1)`
/// is `e_{i,j} : j → i`.
pub fn matrix_groupoid(n: usize, budget: &Budget) -> Result<FinitePrecategory> {
    connected_groupoid(&crate::magma::cyclic_group(1), n, budget)
}

/// The connected groupoid on `objects` objects with vertex group `group`.
///
/// Morphism `(c * objects + d) * |G| + g` goes `d → c` and carries `g`;
/// `(c, d, g) ∘ (d, e, h) = (c, e, gh)`.
pub fn connected_groupoid(group: &FiniteMagma, objects: usize, budget: &Budget) -> Result<FinitePrecategory> {
    let unit = group.check_group()?;
    let q = group.order();
    let m = objects * objects * q;
    budget.check_order("groupoid morphisms", m)?;
    let decode = |s: usize| (s / q / objects, s / q % objects, s % q);
    let morphisms = (0..m)
        .map(|s| {
            let (c, d, _) = decode(s);
            (d, c)
        })
        .collect();
    let compose = |s: usize, t: usize| {
        let (c, d, g) = decode(s);
        let (d2, e, h) = decode(t);
        (d == d2).then(|| (c * objects + e) * q + group.op(g, h))
    };
    let identity_at = (0..objects).map(|e| Some((e * objects + e) * q + unit)).collect();
    FinitePrecategory::from_parts(objects, morphisms, compose, identity_at)
}

/// A group as a one-object category.
pub fn group_as_category(group: &FiniteMagma) -> Result<FinitePrecategory> {
    group.check_group()?;
    monoid_as_category(group)
}

/// A monoid (associative with identity) as a one-object category.
pub fn monoid_as_category(monoid: &FiniteMagma) -> Result<FinitePrecategory> {
    if !monoid.is_associative() {
        return Err(Error::NotAssociative(0, 0, 0));
    }
    let unit = monoid.identity().ok_or_else(|| Error::BadIdentity {
        object: 0,
        reason: "monoid has no identity".into(),
    })?;
    FinitePrecategory::from_parts(
        1,
        vec![(0, 0); monoid.order()],
        |s, t| Some(monoid.op(s, t)),
        vec![Some(unit)],
    )
}

/// Componentwise product; object `(x, y)` is `x * |ob Λ| + y` and morphism
/// `(s, t)` is `s * |mor Λ| + t`.
pub fn product_category(
    left: &FinitePrecategory,
    right: &FinitePrecategory,
    budget: &Budget,
) -> Result<FinitePrecategory> {
    let (n, m) = (right.object_count(), right.morphism_count());
    let count = left.morphism_count() * m;
    budget.check_order("product morphisms", count)?;
    let morphisms = (0..count)
        .map(|x| {
            let (s, t) = (x / m, x % m);
            (left.dom(s) * n + right.dom(t), left.cod(s) * n + right.cod(t))
        })
        .collect();
    let compose = |x: usize, y: usize| {
        let st = left.compose(x / m, y / m)?;
        let uv = right.compose(x % m, y % m)?;
        Some(st * m + uv)
    };
    let identity_at = (0..left.object_count() * n)
        .map(|o| Some(left.identity(o / n)? * m + right.identity(o % n)?))
        .collect();
    FinitePrecategory::from_parts(left.object_count() * n, morphisms, compose, identity_at)
}

/// Disjoint union, objects and morphisms of each part appended in order.
pub fn disjoint_union(parts: &[&FinitePrecategory]) -> Result<FinitePrecategory> {
    let mut morphisms = Vec::new();
    let mut identity_at = Vec::new();
    let mut offsets = Vec::new();
    let (mut obj_off, mut mor_off) = (0, 0);
    for part in parts {
        offsets.push((obj_off, mor_off));
        morphisms.extend((0..part.morphism_count()).map(|s| (part.dom(s) + obj_off, part.cod(s) + obj_off)));
        identity_at.extend((0..part.object_count()).map(|e| part.identity(e).map(|i| i + mor_off)));
        obj_off += part.object_count();
        mor_off += part.morphism_count();
    }
    let owner = |s: usize| {
        offsets
            .iter()
            .rposition(|&(_, off)| off <= s)
            .expect("morphism belongs to a part")
    };
    let compose = |s: usize, t: usize| {
        let (i, j) = (owner(s), owner(t));
        if i != j {
            return None;
        }
        let off = offsets[i].1;
        parts[i].compose(s - off, t - off).map(|st| st + off)
    };
    FinitePrecategory::from_parts(obj_off, morphisms, compose, identity_at)
}
