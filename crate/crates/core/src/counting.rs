//! Closed counting formulas, each paired with a brute-force value from the
//! enumerators.
//!
//! Where a printed formula and the enumerated truth differ, both are kept:
//! [`CountReport::closed_form_value`] holds the formula being validated and
//! [`CountReport::alternatives`] carries the other readings side by side.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::category::{enumerate_functors, FinitePrecategory};
use crate::magma::{
    abelian_group, cyclic_group, enumerate_homs, enumerate_submagmas, enumerate_zero_homs, group_with_zero,
    matrix_unit_zero_magma,
};
use crate::{Budget, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub formula_name: &'static str,
    pub parameters: Vec<(&'static str, String)>,
    pub closed_form_value: BigUint,
    /// `None` when the enumeration exceeded the budget
    pub brute_force_value: Option<BigUint>,
    /// `None` when there is no brute-force value
    pub agrees: Option<bool>,
    /// other readings of the same count, by name
    pub alternatives: Vec<(&'static str, BigUint)>,
}

impl CountReport {
    fn new(
        formula_name: &'static str,
        parameters: Vec<(&'static str, String)>,
        closed_form_value: BigUint,
        brute_force: Result<BigUint>,
    ) -> Result<Self> {
        let brute_force_value = match brute_force {
            Ok(v) => Some(v),
            Err(Error::SizeOverflow { .. }) => None,
            Err(e) => return Err(e),
        };
        let agrees = brute_force_value.as_ref().map(|b| *b == closed_form_value);
        Ok(CountReport {
            formula_name,
            parameters,
            closed_form_value,
            brute_force_value,
            agrees,
            alternatives: Vec::new(),
        })
    }

    fn with(mut self, name: &'static str, value: BigUint) -> Self {
        self.alternatives.push((name, value));
        self
    }

    pub fn alternative(&self, name: &str) -> Option<&BigUint> {
        self.alternatives.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

fn exponent(what: &'static str, e: u64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::SizeOverflow {
        what,
        size: e,
        limit: u32::MAX as u64,
    })
}

/// `q^{n-1}`: elementary gradings of `M_n(K)` by a group of order `q` with
/// zero adjoined.
pub fn count_matrix_group_gradings(n: usize, q: usize) -> BigUint {
    assert!(n >= 1 && q >= 1, "matrix size and group order are positive");
    big(q).pow(n as u32 - 1)
}

/// `q^{n-1}` against the zero homomorphisms `G_n → Z_q ∪ {0}`.
pub fn matrix_group_gradings_report(n: usize, q: usize, budget: &Budget) -> Result<CountReport> {
    let closed = count_matrix_group_gradings(n, q);
    let brute = matrix_unit_zero_magma(n, budget).and_then(|gn| {
        let h = group_with_zero(&cyclic_group(q));
        Ok(big(enumerate_zero_homs(&gn, &h, budget)?.len()))
    });
    CountReport::new(
        "matrix_group_gradings",
        vec![("n", n.to_string()), ("q", q.to_string())],
        closed,
        brute,
    )
}

/// `(p q^{m-1})^{n^m}` computed verbatim.
pub fn count_groupoid_gradings_as_printed(m: usize, n: usize, p: usize, q: usize) -> Result<BigUint> {
    let outer = (n as u64)
        .checked_pow(exponent("groupoid exponent", m as u64)?)
        .unwrap_or(u64::MAX);
    let inner = big(p) * big(q).pow(m.saturating_sub(1) as u32);
    Ok(inner.pow(exponent("groupoid exponent", outer)?))
}

fn require_connected_groupoid(c: &FinitePrecategory) -> Result<()> {
    if c.is_groupoid() && c.is_connected() && c.object_count() > 0 {
        Ok(())
    } else {
        Err(Error::NotAGroup("expected a nonempty connected groupoid".into()))
    }
}

/// Functors between connected groupoids: the candidate
/// `n^m · |hom(Γ_e, Λ_f)| · |Λ_f|^{m-1}` against enumeration, with the
/// printed `(p q^{m-1})^{n^m}` reported for `q = |Λ_f|` (`printed`) and
/// for `q = |hom(Γ_e, Γ_e)|` (`printed_literal_q`).
pub fn count_functors_connected_groupoids(
    g: &FinitePrecategory,
    l: &FinitePrecategory,
    budget: &Budget,
) -> Result<CountReport> {
    require_connected_groupoid(g)?;
    require_connected_groupoid(l)?;
    let (m, n) = (g.object_count(), l.object_count());
    let ge = g.vertex_monoid(0).expect("groupoid objects have identities");
    let lf = l.vertex_monoid(0).expect("groupoid objects have identities");
    let p = enumerate_homs(&ge, &lf, budget)?.len();
    let end = enumerate_homs(&ge, &ge, budget)?.len();
    let q = lf.order();
    let corrected = big(n).pow(m as u32) * big(p) * big(q).pow(m as u32 - 1);
    let brute = enumerate_functors(g, l, budget).map(|f| big(f.len()));
    Ok(CountReport::new(
        "connected_groupoid_functors",
        vec![
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("p", p.to_string()),
            ("vertex_order", q.to_string()),
            ("endomorphisms", end.to_string()),
        ],
        corrected,
        brute,
    )?
    .with("printed", count_groupoid_gradings_as_printed(m, n, p, q)?)
    .with("printed_literal_q", count_groupoid_gradings_as_printed(m, n, p, end)?))
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * big(n - i) / big(i + 1))
}

/// `Σ_i (-1)^i C(n, i) (n - i)^m`, the number of surjections `m → n`.
pub fn count_surjective_functions(m: usize, n: usize) -> BigUint {
    let sum = (0..=n).fold(BigInt::zero(), |acc, i| {
        let term = BigInt::from(binomial(n, i) * big(n - i).pow(m as u32));
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    debug_assert!(!sum.is_negative());
    sum.magnitude().clone()
}

/// The same sum divided by `n!`.
pub fn count_surjective_functions_scaled(m: usize, n: usize) -> BigUint {
    let factorial = (1..=n).fold(BigUint::one(), |acc, i| acc * big(i));
    count_surjective_functions(m, n) / factorial
}

/// Surjections against direct enumeration of all `n^m` functions, with the
/// `1/n!`-scaled value as `printed_scaled`.
pub fn surjective_functions_report(m: usize, n: usize, budget: &Budget) -> Result<CountReport> {
    let brute = (|| {
        let total = (n as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
        if total > budget.max_nodes {
            return Err(Error::SizeOverflow {
                what: "function enumeration",
                size: total,
                limit: budget.max_nodes,
            });
        }
        let mut count = 0usize;
        for code in 0..total {
            let mut hit = vec![false; n];
            let mut c = code;
            for _ in 0..m {
                hit[(c % n as u64) as usize] = true;
                c /= n as u64;
            }
            if hit.iter().all(|&h| h) {
                count += 1;
            }
        }
        Ok(big(count))
    })();
    Ok(CountReport::new(
        "surjective_functions",
        vec![("m", m.to_string()), ("n", n.to_string())],
        count_surjective_functions(m, n),
        brute,
    )?
    .with("printed_scaled", count_surjective_functions_scaled(m, n)))
}

/// `(p, k)` with `q = p^k`, or `None` when `q` is not a prime power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// `Π p^{min(j,k)}` over pairs of same-prime cyclic factors `Z_{p^j}` of `G`
/// and `Z_{p^k}` of `H`; factors are given by their prime-power orders.
pub fn count_abelian_homs(g: &[u64], h: &[u64]) -> Result<BigUint> {
    let decompose = |spec: &[u64]| -> Result<Vec<(u64, u32)>> {
        spec.iter()
            .map(|&q| prime_power(q).ok_or_else(|| Error::NotAGroup(format!("{q} is not a prime power"))))
            .collect()
    };
    let (g, h) = (decompose(g)?, decompose(h)?);
    let mut total = BigUint::one();
    for &(p, j) in &g {
        for &(r, k) in &h {
            if p == r {
                total *= BigUint::from(p).pow(j.min(k));
            }
        }
    }
    Ok(total)
}

/// The product formula against enumeration on the Cayley tables.
pub fn abelian_homs_report(g: &[u64], h: &[u64], budget: &Budget) -> Result<CountReport> {
    let closed = count_abelian_homs(g, h)?;
    let orders = |spec: &[u64]| spec.iter().map(|&q| q as usize).collect::<Vec<_>>();
    let brute = abelian_group(&orders(g), budget).and_then(|gg| {
        let hh = abelian_group(&orders(h), budget)?;
        Ok(big(enumerate_homs(&gg, &hh, budget)?.len()))
    });
    let order = |spec: &[u64]| spec.iter().product::<u64>();
    let gcd = num_gcd(order(g), order(h));
    CountReport::new(
        "abelian_homs",
        vec![("G", format!("{g:?}")), ("H", format!("{h:?}"))],
        closed,
        brute,
    )
    .map(|r| r.with("gcd_of_orders", BigUint::from(gcd)))
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// `Σ_{k=1}^{n} A_k / B_k`: nonzero subspaces of `Z_p^n`.
pub fn count_subspaces(p: u64, n: u32) -> BigUint {
    let pp = |e: u32| BigUint::from(p).pow(e);
    (1..=n).fold(BigUint::zero(), |acc, k| {
        let a: BigUint = (0..k).map(|i| pp(n) - pp(i)).product();
        let b: BigUint = (0..k).map(|i| pp(k) - pp(i)).product();
        acc + a / b
    })
}

/// The printed sum against nonzero subgroups of `Z_p^n`; the count with
/// the zero subspace is `including_zero`.
pub fn subspaces_report(p: u64, n: u32, budget: &Budget) -> Result<CountReport> {
    if prime_power(p).is_none_or(|(_, k)| k != 1) {
        return Err(Error::NotAGroup(format!("{p} is not prime")));
    }
    let closed = count_subspaces(p, n);
    let brute = abelian_group(&vec![p as usize; n as usize], budget).and_then(|g| {
        // submagmas of a finite group: ∅ and the subgroups
        let subgroups = enumerate_submagmas(&g, budget)?.len() - 1;
        Ok(big(subgroups - 1))
    });
    let including_zero = &closed + BigUint::one();
    Ok(CountReport::new(
        "subspaces",
        vec![("p", p.to_string()), ("n", n.to_string())],
        closed,
        brute,
    )?
    .with("including_zero", including_zero))
}

/// Functors between groupoids from component counts:
/// `Π_i Σ_j |hom(Γ_i, Λ_j)|`, each factor enumerated on the components.
/// `printed_product` is `Π_{i,j} |hom(Γ_i, Λ_j)|`.
pub fn count_disconnected(g: &FinitePrecategory, l: &FinitePrecategory, budget: &Budget) -> Result<CountReport> {
    if !g.is_groupoid() || !l.is_groupoid() {
        return Err(Error::NotAGroup("expected groupoids".into()));
    }
    let (gc, lc) = (g.connected_components(), l.connected_components());
    let mut table = Vec::with_capacity(gc.len());
    for gi in &gc {
        let row: Vec<BigUint> = lc
            .iter()
            .map(|lj| enumerate_functors(&gi.category, &lj.category, budget).map(|f| big(f.len())))
            .collect::<Result<_>>()?;
        table.push(row);
    }
    let closed: BigUint = table.iter().map(|row| row.iter().sum::<BigUint>()).product();
    let printed: BigUint = table.iter().flatten().product();
    let brute = enumerate_functors(g, l, budget).map(|f| big(f.len()));
    Ok(CountReport::new(
        "disconnected_groupoid_functors",
        vec![
            ("components_domain", gc.len().to_string()),
            ("components_codomain", lc.len().to_string()),
        ],
        closed,
        brute,
    )?
    .with("printed_product", printed))
}

/// Decimal rendering for reports.
pub fn to_decimal(x: &BigUint) -> String {
    x.to_str_radix(10)
}

/// Narrowing for callers that know the value is small.
pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{connected_groupoid, disjoint_union, group_as_category, matrix_groupoid};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn matrix_gradings() {
        assert_eq!(count_matrix_group_gradings(1, 7), big(1));
        for (n, q) in [(2, 2), (3, 3), (2, 5)] {
            let r = matrix_group_gradings_report(n, q, &b()).unwrap();
            assert_eq!(r.agrees, Some(true), "{r:?}");
        }
        assert_eq!(
            matrix_group_gradings_report(3, 3, &b()).unwrap().closed_form_value,
            big(9)
        );
    }

    #[test]
    fn printed_groupoid_formula() {
        assert_eq!(count_groupoid_gradings_as_printed(1, 1, 6, 9).unwrap(), big(6));
        assert_eq!(count_groupoid_gradings_as_printed(4, 1, 1, 3).unwrap(), big(27));
        assert!(count_groupoid_gradings_as_printed(40, 40, 2, 2).is_err());
    }

    #[test]
    fn groupoid_audit_instances() {
        let b = b();
        let thin2 = matrix_groupoid(2, &b).unwrap();
        let z2 = group_as_category(&cyclic_group(2)).unwrap();
        let r = count_functors_connected_groupoids(&thin2, &z2, &b).unwrap();
        assert_eq!(r.brute_force_value, Some(big(2)));
        assert_eq!(r.alternative("printed"), Some(&big(2)));
        assert_eq!(r.agrees, Some(true));
        let r = count_functors_connected_groupoids(&thin2, &thin2, &b).unwrap();
        assert_eq!(r.brute_force_value, Some(big(4)));
        assert_eq!(r.alternative("printed"), Some(&big(1)));
        assert_eq!(r.agrees, Some(true));
        let z2_on_two = connected_groupoid(&cyclic_group(2), 2, &b).unwrap();
        let r = count_functors_connected_groupoids(&z2_on_two, &z2, &b).unwrap();
        assert_eq!(r.brute_force_value, Some(big(4)));
        assert_eq!(r.agrees, Some(true));
    }

    #[test]
    fn audit_rejects_non_groupoids() {
        let m = crate::fixtures::idempotent_monoid_category();
        assert!(count_functors_connected_groupoids(&m, &m, &b()).is_err());
    }

    #[test]
    fn surjections() {
        assert_eq!(count_surjective_functions(2, 2), big(2));
        assert_eq!(count_surjective_functions(3, 2), big(6));
        assert_eq!(count_surjective_functions(2, 3), big(0));
        assert_eq!(count_surjective_functions(4, 4), big(24));
        assert_eq!(count_surjective_functions_scaled(2, 2), big(1));
        for m in 0..=5 {
            for n in 0..=5 {
                let r = surjective_functions_report(m, n, &b()).unwrap();
                assert_eq!(r.agrees, Some(true), "{m} {n}");
            }
        }
    }

    #[test]
    fn abelian_homs() {
        assert_eq!(count_abelian_homs(&[4], &[2, 3]).unwrap(), big(2));
        assert_eq!(count_abelian_homs(&[2, 2], &[2]).unwrap(), big(4));
        assert_eq!(count_abelian_homs(&[], &[8]).unwrap(), big(1));
        assert!(count_abelian_homs(&[6], &[2]).is_err());
        let r = abelian_homs_report(&[2, 2], &[4], &b()).unwrap();
        assert_eq!(r.agrees, Some(true));
    }

    #[test]
    fn subspaces() {
        assert_eq!(count_subspaces(2, 2), big(4));
        assert_eq!(count_subspaces(2, 1), big(1));
        assert_eq!(count_subspaces(3, 2), big(5));
        let r = subspaces_report(2, 3, &b()).unwrap();
        assert_eq!(r.agrees, Some(true));
        assert_eq!(r.alternative("including_zero"), Some(&big(16)));
        assert!(subspaces_report(4, 2, &b()).is_err());
    }

    #[test]
    fn disconnected_counts() {
        let b = b();
        let thin2 = matrix_groupoid(2, &b).unwrap();
        let z2 = group_as_category(&cyclic_group(2)).unwrap();
        let two = disjoint_union(&[&thin2, &thin2]).unwrap();
        let r = count_disconnected(&two, &z2, &b).unwrap();
        assert_eq!(r.closed_form_value, big(4));
        assert_eq!(r.agrees, Some(true));
        // Γ connected, Λ with two components: sum over targets
        let z3 = group_as_category(&cyclic_group(3)).unwrap();
        let target = disjoint_union(&[&z2, &z3]).unwrap();
        let r = count_disconnected(&z2, &target, &b).unwrap();
        assert_eq!(r.closed_form_value, big(3));
        assert_eq!(r.agrees, Some(true));
        assert_eq!(r.alternative("printed_product"), Some(&big(2)));
    }

    #[test]
    fn empty_groupoids() {
        let b = b();
        let empty = FinitePrecategory::validate(0, vec![], &[], &[]).unwrap();
        let z2 = group_as_category(&cyclic_group(2)).unwrap();
        let r = count_disconnected(&empty, &z2, &b).unwrap();
        assert_eq!((r.closed_form_value.clone(), r.agrees), (big(1), Some(true)));
        let r = count_disconnected(&z2, &empty, &b).unwrap();
        assert_eq!((r.closed_form_value.clone(), r.agrees), (big(0), Some(true)));
        assert_eq!(r.alternative("printed_product"), Some(&big(1)));
    }
}
