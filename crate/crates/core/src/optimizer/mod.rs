//! Maximum GLGG search over conflict graphs.

mod bitset;
mod conflict;
mod enumerate;
mod exact;
mod greedy;
mod normal_form;

pub use conflict::{build_conflict_graph, ConflictGraph};
pub use enumerate::{enumerate_maximal_lggs, MaximalSets};
pub use exact::{glgg_with_at_least, max_glgg_exact};
pub use greedy::max_glgg_greedy;
pub use normal_form::fill_variable_slots;

use serde::Serialize;

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    /// Chosen node (edge) ids, ascending.
    pub chosen: Vec<usize>,
    pub total_weight: Rational,
    /// True only when the exact search completed.
    pub optimal: bool,
    pub nodes_explored: u64,
}
