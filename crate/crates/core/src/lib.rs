//! Finite magmas, zero magmas and finite (pre)categories, together with the
//! elementary gradings and filters they induce on magma and category
//! algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`magma`]: Cayley tables, products, closures, submagma and
//!   homomorphism search, isomorphism classification.
//! * [`category`]: finite precategories, groupoids, prefunctor/functor
//!   and subprecategory search, reduction to zero magmas.
//! * [`algebra`]: magma/category algebras, the `F` and `M` maps between
//!   relations and elementary families, and axiom checks with an exact
//!   `F_p` span oracle.
//! * [`counting`]: closed counting formulas next to brute-force values.
//! * [`io`]: text formats and JSON reports.

pub mod algebra;
pub mod category;
pub mod counting;
mod error;
pub mod fixtures;
pub mod io;
pub mod magma;
mod search;
mod set;

pub use error::{Error, Result};
pub use set::ElementSet;

/// Limits applied by every enumeration.
///
/// Exceeding a limit yields [`Error::SizeOverflow`]; results are never
/// silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest magma order (or morphism count) accepted by the searches.
    pub max_order: usize,
    /// Largest number of search nodes visited by a single enumeration.
    pub max_nodes: u64,
    /// Largest order for which permutation scans (canonical forms) are run.
    pub max_permutation_order: usize,
    /// Largest order accepted by `census`.
    pub max_census_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_order: 64,
            max_nodes: 10_000_000,
            max_permutation_order: 8,
            max_census_order: 3,
        }
    }
}

impl Budget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }

    pub(crate) fn check_order(&self, what: &'static str, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::SizeOverflow {
                what,
                size: order as u64,
                limit: self.max_order as u64,
            });
        }
        Ok(())
    }
}
