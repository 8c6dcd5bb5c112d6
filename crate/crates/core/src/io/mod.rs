//! Text formats and JSON reports.
//!
//! Text formats are line oriented, ASCII, with `#` starting a comment.
//! Printing always produces the canonical form, so `print ∘ parse` is the
//! identity on canonical text and `parse ∘ print` is the identity on values.

mod json;
mod text;

pub use json::{
    count_report_json, family_json, list_report, magma_json, morphism_map_json, relation_json, render, verdict_json,
};
pub use text::{
    parse_category, parse_family, parse_magma, parse_relation, print_category, print_family, print_magma,
    print_relation, Document,
};
