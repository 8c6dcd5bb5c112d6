//! Search kernels shared by the magma and category enumerators.
//!
//! Two problems show up everywhere: finding all maps `f` with
//! `f(x * y) = f(x) * f(y)` on a set of constrained pairs, and finding all
//! subsets closed under a (possibly partial) binary operation.

use crate::{Budget, ElementSet, Error, Result};

pub(crate) type PartialOp<'a> = &'a dyn Fn(usize, usize) -> Option<usize>;

struct NodeCounter {
    visited: u64,
    limit: u64,
}

impl NodeCounter {
    fn new(budget: &Budget) -> Self {
        NodeCounter {
            visited: 0,
            limit: budget.max_nodes,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::SizeOverflow {
                what: "search frontier",
                size: self.visited,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// All maps `f` on `0..candidates.len()` with `f(x) ∈ candidates[x]` and,
/// whenever `domain_op(x, y) = Some(z)`, `codomain_op(f(x), f(y)) = Some(f(z))`.
///
/// Variables are branched on in `order`; every other value is forced by
/// propagation as soon as both factors of a constrained pair are known.
/// Solutions are returned sorted.
pub(crate) fn solve_maps(
    candidates: &[ElementSet],
    domain_op: PartialOp<'_>,
    codomain_op: PartialOp<'_>,
    order: &[usize],
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let n = candidates.len();
    // adjacency[x] holds (partner, product, x_is_left)
    let mut adjacency: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            if let Some(z) = domain_op(x, y) {
                adjacency[x].push((y, z, true));
                if x != y {
                    adjacency[y].push((x, z, false));
                }
            }
        }
    }
    let mut state = MapState {
        candidates,
        codomain_op,
        adjacency,
        assigned: vec![None; n],
        trail: Vec::with_capacity(n),
        queue: Vec::new(),
    };
    let mut counter = NodeCounter::new(budget);
    let mut out = Vec::new();
    state.branch(order, 0, &mut counter, &mut out)?;
    out.sort();
    Ok(out)
}

struct MapState<'a> {
    candidates: &'a [ElementSet],
    codomain_op: PartialOp<'a>,
    adjacency: Vec<Vec<(usize, usize, bool)>>,
    assigned: Vec<Option<usize>>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl MapState<'_> {
    fn set(&mut self, var: usize, value: usize) -> bool {
        match self.assigned[var] {
            Some(v) => v == value,
            None => {
                if !self.candidates[var].contains(value) {
                    return false;
                }
                self.assigned[var] = Some(value);
                self.trail.push(var);
                self.queue.push(var);
                true
            }
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            let fx = self.assigned[x].expect("queued variables are assigned");
            for i in 0..self.adjacency[x].len() {
                let (y, z, x_left) = self.adjacency[x][i];
                let Some(fy) = self.assigned[y] else { continue };
                let (l, r) = if x_left { (fx, fy) } else { (fy, fx) };
                match (self.codomain_op)(l, r) {
                    Some(v) if self.set(z, v) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let var = self.trail.pop().expect("trail is non-empty");
            self.assigned[var] = None;
        }
        self.queue.clear();
    }

    fn branch(
        &mut self,
        order: &[usize],
        mut pos: usize,
        counter: &mut NodeCounter,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        while pos < order.len() && self.assigned[order[pos]].is_some() {
            pos += 1;
        }
        if pos == order.len() {
            out.push(
                self.assigned
                    .iter()
                    .map(|v| v.expect("all variables assigned"))
                    .collect(),
            );
            return Ok(());
        }
        let var = order[pos];
        let values: Vec<usize> = self.candidates[var].iter().collect();
        for value in values {
            counter.tick()?;
            let mark = self.trail.len();
            if self.set(var, value) && self.propagate() {
                self.branch(order, pos + 1, counter, out)?;
            }
            self.undo(mark);
        }
        Ok(())
    }
}

/// Smallest superset of `seed` closed under `op`.
pub(crate) fn closure(size: usize, op: PartialOp<'_>, seed: &ElementSet) -> ElementSet {
    let mut set = ElementSet::empty(size);
    let mut members = Vec::new();
    for x in seed.iter() {
        set.insert(x);
        members.push(x);
    }
    saturate(op, &mut set, &mut members, 0, None);
    set
}

/// Closes `set` under `op`, treating `members[..start]` as already closed.
/// Returns `false` as soon as an element of `forbidden` is produced.
fn saturate(
    op: PartialOp<'_>,
    set: &mut ElementSet,
    members: &mut Vec<usize>,
    start: usize,
    forbidden: Option<&ElementSet>,
) -> bool {
    let mut i = start;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for product in [op(x, y), op(y, x)].into_iter().flatten() {
                if set.insert(product) {
                    if forbidden.is_some_and(|f| f.contains(product)) {
                        return false;
                    }
                    members.push(product);
                }
            }
        }
        i += 1;
    }
    true
}

/// All subsets of `0..size` closed under `op` that contain `required` and
/// avoid `forbidden`, sorted by bit pattern.
///
/// Depth-first over elements in index order with include/exclude
/// branching; an include branch is cut as soon as the closure reaches an
/// excluded element.
pub(crate) fn closed_subsets(
    size: usize,
    op: PartialOp<'_>,
    required: &ElementSet,
    forbidden: &ElementSet,
    budget: &Budget,
) -> Result<Vec<ElementSet>> {
    let mut set = ElementSet::empty(size);
    let mut members = Vec::new();
    for x in required.iter() {
        if forbidden.contains(x) {
            return Ok(Vec::new());
        }
        set.insert(x);
        members.push(x);
    }
    if !saturate(op, &mut set, &mut members, 0, Some(forbidden)) {
        return Ok(Vec::new());
    }
    let mut excluded = forbidden.clone();
    let mut counter = NodeCounter::new(budget);
    let mut out = Vec::new();
    closed_branch(size, op, 0, &set, &members, &mut excluded, &mut counter, &mut out)?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn closed_branch(
    size: usize,
    op: PartialOp<'_>,
    mut next: usize,
    set: &ElementSet,
    members: &[usize],
    excluded: &mut ElementSet,
    counter: &mut NodeCounter,
    out: &mut Vec<ElementSet>,
) -> Result<()> {
    counter.tick()?;
    while next < size && (set.contains(next) || excluded.contains(next)) {
        next += 1;
    }
    if next == size {
        out.push(set.clone());
        return Ok(());
    }

    excluded.insert(next);
    closed_branch(size, op, next + 1, set, members, excluded, counter, out)?;
    excluded.remove(next);

    let mut grown = set.clone();
    let mut grown_members = members.to_vec();
    grown.insert(next);
    grown_members.push(next);
    let start = members.len();
    if saturate(op, &mut grown, &mut grown_members, start, Some(excluded)) {
        closed_branch(size, op, next + 1, &grown, &grown_members, excluded, counter, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> impl Fn(usize, usize) -> Option<usize> {
        move |a, b| Some((a + b) % n)
    }

    #[test]
    fn maps_between_cyclic_groups() {
        let cands = vec![ElementSet::full(6); 4];
        let order: Vec<usize> = (0..4).collect();
        let sols = solve_maps(&cands, &z(4), &z(6), &order, &Budget::default()).unwrap();
        // gcd(4, 6)
        assert_eq!(sols.len(), 2);
        assert_eq!(sols[0], vec![0, 0, 0, 0]);
        assert_eq!(sols[1], vec![0, 3, 0, 3]);
    }

    #[test]
    fn node_budget_is_enforced() {
        let cands = vec![ElementSet::full(6); 6];
        let order: Vec<usize> = (0..6).collect();
        let never = |_: usize, _: usize| None;
        let err = solve_maps(&cands, &never, &never, &order, &Budget::with_nodes(100)).unwrap_err();
        assert!(matches!(err, Error::SizeOverflow { .. }));
    }

    #[test]
    fn closed_subsets_of_z4_are_subgroups_and_empty() {
        let op = z(4);
        let subs = closed_subsets(4, &op, &ElementSet::empty(4), &ElementSet::empty(4), &Budget::default()).unwrap();
        let as_vecs: Vec<Vec<usize>> = subs.iter().map(|s| s.to_vec()).collect();
        assert_eq!(as_vecs, vec![vec![], vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn closure_generates_cyclic_subgroup() {
        let op = z(6);
        let c = closure(6, &op, &ElementSet::from_indices(6, [2]));
        assert_eq!(c.to_vec(), vec![0, 2, 4]);
    }
}
