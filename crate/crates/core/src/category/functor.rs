use super::FinitePrecategory;
use crate::magma::enumerate_zero_homs;
use crate::search::{closure, solve_maps};
use crate::{Budget, ElementSet, Error, Result};

/// A map of precategories: an object map and a morphism map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorphismMap {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl MorphismMap {
    /// Endpoints are respected and `f(s ∘ t) = f(s) ∘ f(t)` for every
    /// composable pair.
    pub fn is_prefunctor(&self, g: &FinitePrecategory, l: &FinitePrecategory) -> bool {
        let (ob, mor) = (&self.object_map, &self.morphism_map);
        ob.len() == g.object_count()
            && mor.len() == g.morphism_count()
            && ob.iter().all(|&x| x < l.object_count())
            && mor.iter().all(|&s| s < l.morphism_count())
            && (0..g.morphism_count()).all(|s| l.dom(mor[s]) == ob[g.dom(s)] && l.cod(mor[s]) == ob[g.cod(s)])
            && g.composable_pairs()
                .all(|(s, t, st)| l.compose(mor[s], mor[t]) == Some(mor[st]))
    }

    /// A prefunctor that also sends identities to identities.
    pub fn is_functor(&self, g: &FinitePrecategory, l: &FinitePrecategory) -> bool {
        self.is_prefunctor(g, l)
            && (0..g.object_count()).all(|e| match (g.identity(e), l.identity(self.object_map[e])) {
                (Some(i), Some(j)) => self.morphism_map[i] == j,
                (Some(_), None) => false,
                (None, _) => true,
            })
    }
}

/// Morphisms whose closure under composition is everything, found by
/// dropping redundant morphisms in index order.
pub fn generating_set(g: &FinitePrecategory) -> Vec<usize> {
    let m = g.morphism_count();
    let op = |s: usize, t: usize| g.compose(s, t);
    let mut gens = ElementSet::full(m);
    for s in 0..m {
        gens.remove(s);
        if closure(m, &op, &gens).len() < m {
            gens.insert(s);
        }
    }
    gens.to_vec()
}

fn object_maps(from: usize, to: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let total = (to as u64).checked_pow(from as u32).unwrap_or(u64::MAX);
    if total > budget.max_nodes {
        return Err(Error::SizeOverflow {
            what: "object maps",
            size: total,
            limit: budget.max_nodes,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    if to == 0 && from > 0 {
        return Ok(out);
    }
    let mut map = vec![0; from];
    loop {
        out.push(map.clone());
        let mut pos = from;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            map[pos] += 1;
            if map[pos] < to {
                break;
            }
            map[pos] = 0;
        }
    }
}

fn enumerate_maps(
    g: &FinitePrecategory,
    l: &FinitePrecategory,
    functors: bool,
    budget: &Budget,
) -> Result<Vec<MorphismMap>> {
    budget.check_order("domain morphisms", g.morphism_count())?;
    budget.check_order("codomain morphisms", l.morphism_count())?;
    let gens = generating_set(g);
    let mut order = gens.clone();
    order.extend((0..g.morphism_count()).filter(|s| !gens.contains(s)));
    let dom_op = |s: usize, t: usize| g.compose(s, t);
    let cod_op = |s: usize, t: usize| l.compose(s, t);
    let mut out = Vec::new();
    'maps: for phi in object_maps(g.object_count(), l.object_count(), budget)? {
        let mut candidates = Vec::with_capacity(g.morphism_count());
        for s in 0..g.morphism_count() {
            let allowed = match g.identity(g.dom(s)) {
                Some(i) if functors && i == s => vec![l.identity(phi[g.dom(s)]).expect("checked category")],
                _ => l.hom(phi[g.dom(s)], phi[g.cod(s)]),
            };
            if allowed.is_empty() {
                continue 'maps;
            }
            candidates.push(ElementSet::from_indices(l.morphism_count(), allowed));
        }
        for morphism_map in solve_maps(&candidates, &dom_op, &cod_op, &order, budget)? {
            out.push(MorphismMap {
                object_map: phi.clone(),
                morphism_map,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// All prefunctors `Γ → Λ`, sorted by object map then morphism map.
pub fn enumerate_prefunctors(
    g: &FinitePrecategory,
    l: &FinitePrecategory,
    budget: &Budget,
) -> Result<Vec<MorphismMap>> {
    enumerate_maps(g, l, false, budget)
}

/// All functors `Γ → Λ`; both sides must be categories.
pub fn enumerate_functors(g: &FinitePrecategory, l: &FinitePrecategory, budget: &Budget) -> Result<Vec<MorphismMap>> {
    if !g.is_category() || !l.is_category() {
        return Err(Error::NotACategory);
    }
    enumerate_maps(g, l, true, budget)
}

/// Result of enumerating prefunctors through zero homomorphisms of the
/// adjoined-zero magmas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutcome {
    /// Zero homomorphisms whose induced object map is well defined.
    pub maps: Vec<MorphismMap>,
    /// Morphism maps of zero homomorphisms that send two morphisms sharing
    /// an endpoint to morphisms that do not.
    pub inconsistent: Vec<Vec<usize>>,
}

/// Prefunctors `Γ → Λ` read off the zero homomorphisms
/// `Γ ∪ {0} → Λ ∪ {0}`.
pub fn enumerate_prefunctors_via_zero_magmas(
    g: &FinitePrecategory,
    l: &FinitePrecategory,
    budget: &Budget,
) -> Result<ReductionOutcome> {
    let (gz, lz) = (g.adjoin_zero(), l.adjoin_zero());
    let mut outcome = ReductionOutcome {
        maps: Vec::new(),
        inconsistent: Vec::new(),
    };
    for f in enumerate_zero_homs(&gz, &lz, budget)? {
        let morphism_map = f[..g.morphism_count()].to_vec();
        let mut object_map: Vec<Option<usize>> = vec![None; g.object_count()];
        let mut consistent = true;
        for (s, &t) in morphism_map.iter().enumerate() {
            for (x, y) in [(g.dom(s), l.dom(t)), (g.cod(s), l.cod(t))] {
                match object_map[x] {
                    Some(prev) if prev != y => consistent = false,
                    _ => object_map[x] = Some(y),
                }
            }
        }
        if consistent {
            outcome.maps.push(MorphismMap {
                object_map: object_map
                    .into_iter()
                    .map(|x| x.expect("no isolated objects"))
                    .collect(),
                morphism_map,
            });
        } else {
            outcome.inconsistent.push(morphism_map);
        }
    }
    outcome.maps.sort();
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{group_as_category, matrix_groupoid};
    use crate::fixtures;
    use crate::magma::cyclic_group;
    use itertools::Itertools;

    fn brute_force(g: &FinitePrecategory, l: &FinitePrecategory, functors: bool) -> Vec<MorphismMap> {
        let objects = (0..g.object_count())
            .map(|_| 0..l.object_count())
            .multi_cartesian_product();
        let mut out = Vec::new();
        for object_map in objects {
            for morphism_map in (0..g.morphism_count())
                .map(|_| 0..l.morphism_count())
                .multi_cartesian_product()
            {
                let f = MorphismMap {
                    object_map: object_map.clone(),
                    morphism_map,
                };
                if if functors {
                    f.is_functor(g, l)
                } else {
                    f.is_prefunctor(g, l)
                } {
                    out.push(f);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn example_functors_to_z2() {
        let b = Budget::default();
        let (g, z2) = (fixtures::two_object_category(), fixtures::z2_category());
        let functors = enumerate_functors(&g, &z2, &b).unwrap();
        assert_eq!(functors.len(), 4);
        assert_eq!(functors, brute_force(&g, &z2, true));
    }

    #[test]
    fn example_prefunctors_to_idempotent_monoid() {
        let b = Budget::default();
        let (g, m) = (fixtures::two_object_category(), fixtures::idempotent_monoid_category());
        let pre = enumerate_prefunctors(&g, &m, &b).unwrap();
        assert_eq!(pre, brute_force(&g, &m, false));
        assert_eq!(pre.len(), 5);
        let via = enumerate_prefunctors_via_zero_magmas(&g, &m, &b).unwrap();
        assert_eq!(via.maps, pre);
        assert!(via.inconsistent.is_empty());
    }

    #[test]
    fn generating_set_generates() {
        let g = fixtures::two_object_category();
        let gens = generating_set(&g);
        assert_eq!(gens, vec![1, 2, 4]);
        let groupoid = matrix_groupoid(3, &Budget::default()).unwrap();
        assert!(generating_set(&groupoid).len() <= 6);
    }

    #[test]
    fn direct_and_reduction_agree_on_small_groupoids() {
        let b = Budget::default();
        let cats = [
            matrix_groupoid(1, &b).unwrap(),
            matrix_groupoid(2, &b).unwrap(),
            group_as_category(&cyclic_group(2)).unwrap(),
            fixtures::idempotent_monoid_category(),
        ];
        for g in &cats {
            for l in &cats {
                let direct = enumerate_prefunctors(g, l, &b).unwrap();
                let via = enumerate_prefunctors_via_zero_magmas(g, l, &b).unwrap();
                assert_eq!(via.maps, direct);
            }
        }
    }

    #[test]
    fn functors_between_matrix_groupoids() {
        let b = Budget::default();
        for m in 1..=3 {
            for n in 1..=3 {
                let f =
                    enumerate_functors(&matrix_groupoid(m, &b).unwrap(), &matrix_groupoid(n, &b).unwrap(), &b).unwrap();
                assert_eq!(f.len(), n.pow(m as u32));
            }
        }
    }

    #[test]
    fn functors_need_identities() {
        let no_id = FinitePrecategory::validate(1, vec![(0, 0)], &[(0, 0, 0)], &[]).unwrap();
        assert_eq!(
            enumerate_functors(&no_id, &fixtures::z2_category(), &Budget::default()).unwrap_err(),
            Error::NotACategory
        );
        assert_eq!(
            enumerate_prefunctors(&no_id, &fixtures::z2_category(), &Budget::default())
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn inconsistent_object_maps_are_flagged() {
        // two parallel morphisms 0 -> 1 and two idempotent loops on separate objects
        let g = FinitePrecategory::validate(2, vec![(0, 1), (0, 1)], &[], &[]).unwrap();
        let l = FinitePrecategory::validate(2, vec![(0, 0), (1, 1)], &[(0, 0, 0), (1, 1, 1)], &[]).unwrap();
        let b = Budget::default();
        let via = enumerate_prefunctors_via_zero_magmas(&g, &l, &b).unwrap();
        assert_eq!(via.maps, enumerate_prefunctors(&g, &l, &b).unwrap());
        assert_eq!(via.maps.len(), 2);
        assert_eq!(via.inconsistent, vec![vec![0, 1], vec![1, 0]]);
    }
}
