//! Small worked structures used across tests, the CLI and the docs.

use crate::category::FinitePrecategory;
use crate::magma::FiniteMagma;

/// Two objects `a = 0`, `b = 1` and morphisms `id_a = 0`, `id_b = 1`,
/// `α = 2 : a → a`, `β = 3 : a → b`, `γ = 4 : a → b` with `α² = id_a`,
/// `β ∘ α = γ` and `γ ∘ α = β`.
pub fn two_object_category() -> FinitePrecategory {
    FinitePrecategory::validate(
        2,
        vec![(0, 0), (1, 1), (0, 0), (0, 1), (0, 1)],
        &[
            (0, 0, 0),
            (0, 2, 2),
            (2, 0, 2),
            (2, 2, 0),
            (3, 0, 3),
            (3, 2, 4),
            (4, 0, 4),
            (4, 2, 3),
            (1, 3, 3),
            (1, 4, 4),
            (1, 1, 1),
        ],
        &[(0, 0), (1, 1)],
    )
    .expect("fixture is a category")
}

/// `Z_2` as a one-object category: `id = 0`, `δ = 1`, `δ² = id`.
pub fn z2_category() -> FinitePrecategory {
    FinitePrecategory::validate(
        1,
        vec![(0, 0), (0, 0)],
        &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)],
        &[(0, 0)],
    )
    .expect("fixture is a category")
}

/// The two-element monoid `{id, δ}` with `δ² = δ`.
pub fn idempotent_monoid_category() -> FinitePrecategory {
    FinitePrecategory::validate(
        1,
        vec![(0, 0), (0, 0)],
        &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)],
        &[(0, 0)],
    )
    .expect("fixture is a category")
}

/// `{e_1, e_2, 0}` with `e_i e_i = e_i` and every other product zero.
pub fn orthogonal_idempotents() -> FiniteMagma {
    FiniteMagma::validate(3, vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]], Some(2))
        .expect("fixture is a zero magma")
}

/// `{e, 0}` with `e² = e`.
pub fn idempotent_with_zero() -> FiniteMagma {
    FiniteMagma::validate(2, vec![vec![0, 1], vec![1, 1]], Some(1)).expect("fixture is a zero magma")
}
