//! Exact `F_p` linear algebra used as an independent oracle for the
//! set-level checks.
//!
//! Each part `W_h` is given a randomised basis: unitriangular combinations
//! of its basis vectors with coefficients drawn from a seeded generator.
//! Inclusions and direct sums are then decided by row reduction, never by
//! looking at the underlying index sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::check::{check, effective_parts, required_zero_part, sizes_match};
use super::{AlgebraPresentation, ElementaryFamily, Property, Target, Verdict, Witness};
use crate::{Error, Result};

/// Row-reduced span of vectors over `F_p`.
#[derive(Clone, Debug)]
struct Echelon {
    p: u32,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

fn inverse(x: u32, p: u32) -> u32 {
    // Fermat, p prime
    let (mut base, mut exp, mut acc) = (x as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

impl Echelon {
    fn new(p: u32) -> Self {
        Echelon {
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let factor = v[c] as u64;
            if factor != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((*x as u64 + (p - factor) * r as u64) % p) as u32;
                }
            }
        }
        v
    }

    /// Adds `v`; returns `false` when it was already in the span.
    fn insert(&mut self, v: &[u32]) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inverse(v[c], self.p) as u64;
        for x in v.iter_mut() {
            *x = (*x as u64 * inv % self.p as u64) as u32;
        }
        let p = self.p as u64;
        for row in &mut self.rows {
            let factor = row[c] as u64;
            if factor != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = ((*x as u64 + (p - factor) * r as u64) % p) as u32;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn spanned_by(p: u32, vectors: &[Vec<u32>]) -> Self {
        let mut e = Echelon::new(p);
        for v in vectors {
            e.insert(v);
        }
        e
    }
}

struct SpanModel<'a> {
    a: &'a AlgebraPresentation,
    p: u32,
    /// spanning vectors per target element
    bases: Vec<Vec<Vec<u32>>>,
}

impl<'a> SpanModel<'a> {
    fn new(a: &'a AlgebraPresentation, w: &ElementaryFamily, seed: u64) -> Self {
        let p = a.scalar_modulus();
        let n = a.basis_size();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bases = effective_parts(a, w)
            .iter()
            .map(|part| {
                let members = part.to_vec();
                (0..members.len())
                    .map(|i| {
                        let mut v = vec![0u32; n];
                        v[members[i]] = 1;
                        for &g in &members[i + 1..] {
                            v[g] = rng.random_range(0..p);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        SpanModel { a, p, bases }
    }

    fn unit(&self, g: usize) -> Vec<u32> {
        let mut v = vec![0; self.a.basis_size()];
        v[g] = 1;
        v
    }

    fn multiply(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut out = vec![0u32; u.len()];
        for (g, &x) in u.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (h, &y) in v.iter().enumerate().filter(|(_, &y)| y != 0) {
                if let Some(k) = self.a.product(g, h) {
                    out[k] = ((out[k] as u64 + x as u64 * y as u64) % p) as u32;
                }
            }
        }
        out
    }

    fn products(&self, h: usize, k: usize) -> Vec<Vec<u32>> {
        self.bases[h]
            .iter()
            .flat_map(|u| self.bases[k].iter().map(move |v| self.multiply(u, v)))
            .collect()
    }

    fn span(&self, h: usize) -> Echelon {
        Echelon::spanned_by(self.p, &self.bases[h])
    }

    fn filter(&self, target: &Target) -> Option<Witness> {
        if let Some(z) = target.exempt_zero() {
            let Some(required) = required_zero_part(self.a) else {
                return Some(Witness::Element(z));
            };
            let v0: Vec<Vec<u32>> = required.iter().map(|g| self.unit(g)).collect();
            let both: Vec<Vec<u32>> = v0.iter().chain(&self.bases[z]).cloned().collect();
            let (r0, rw, rb) = (
                Echelon::spanned_by(self.p, &v0).rank(),
                self.span(z).rank(),
                Echelon::spanned_by(self.p, &both).rank(),
            );
            if r0 != rb || rw != rb {
                return Some(Witness::Element(z));
            }
        }
        let spans: Vec<Echelon> = (0..self.bases.len()).map(|h| self.span(h)).collect();
        for h in 0..self.bases.len() {
            for k in 0..self.bases.len() {
                let prods = self.products(h, k);
                let ok = match target.op(h, k) {
                    Some(hk) => prods.iter().all(|v| spans[hk].contains(v)),
                    None => prods.iter().all(|v| v.iter().all(|&x| x == 0)),
                };
                if !ok {
                    return Some(Witness::Pair(h, k));
                }
            }
        }
        None
    }

    fn strong(&self, target: &Target) -> Option<Witness> {
        if let Some(w) = self.filter(target) {
            return Some(w);
        }
        for h in 0..self.bases.len() {
            for k in 0..self.bases.len() {
                if let Some(hk) = target.op(h, k) {
                    let rank = Echelon::spanned_by(self.p, &self.products(h, k)).rank();
                    if rank != self.span(hk).rank() {
                        return Some(Witness::Pair(h, k));
                    }
                }
            }
        }
        None
    }

    fn grading(&self, target: &Target) -> Option<Witness> {
        if let Some(w) = self.filter(target) {
            return Some(w);
        }
        let mut sum = Echelon::new(self.p);
        for (h, basis) in self.bases.iter().enumerate() {
            let dim = self.span(h).rank();
            let before = sum.rank();
            for v in basis {
                sum.insert(v);
            }
            if sum.rank() - before < dim {
                return Some(Witness::Element(h));
            }
        }
        self.a
            .effective_basis()
            .iter()
            .find(|&g| !sum.contains(&self.unit(g)))
            .map(Witness::Basis)
    }

    fn nonzero(&self, target: &Target) -> Option<Witness> {
        let exempt = target.exempt_zero();
        (0..self.bases.len())
            .find(|&h| Some(h) != exempt && self.span(h).rank() == 0)
            .map(Witness::Element)
    }

    fn elementary(&self) -> Option<Witness> {
        let effective = self.a.effective_basis();
        (0..self.bases.len())
            .find(|&h| {
                let span = self.span(h);
                let inside = effective.iter().filter(|&g| span.contains(&self.unit(g))).count();
                inside != span.rank()
            })
            .map(Witness::Element)
    }
}

/// Decides `property` by row reduction over `F_p`, `p` the algebra's scalar
/// modulus, with part bases mixed by a generator seeded from `seed`.
pub fn check_span(
    property: Property,
    a: &AlgebraPresentation,
    target: &Target,
    w: &ElementaryFamily,
    seed: u64,
) -> Verdict {
    if !sizes_match(a, target, w) {
        return Verdict::fail(property, None);
    }
    let model = SpanModel::new(a, w, seed);
    let witness = match property {
        Property::Filter => model.filter(target),
        Property::Strong => model.strong(target),
        Property::Grading => model.grading(target),
        Property::Nonzero => model.nonzero(target),
        Property::Elementary => model.elementary(),
    };
    match witness {
        Some(w) => Verdict::fail(property, Some(w)),
        None => Verdict::pass(property),
    }
}

/// Runs every property at the set level and through the span oracle;
/// returns the set-level verdicts, or [`Error::OracleMismatch`].
pub fn verify(a: &AlgebraPresentation, target: &Target, w: &ElementaryFamily, seed: u64) -> Result<Vec<Verdict>> {
    Property::ALL
        .iter()
        .map(|&property| {
            let set = check(property, a, target, w);
            let span = check_span(property, a, target, w, seed);
            if set.holds != span.holds {
                return Err(Error::OracleMismatch {
                    property: property.name(),
                    set: set.holds,
                    span: span.holds,
                });
            }
            Ok(set)
        })
        .collect()
}
