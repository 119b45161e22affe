//! Locally Gabriel graphs over exact rational point sets.
//!
//! An edge `uv` is locally Gabriel when no neighbor of `u` or `v` lies in
//! the closed disk with diameter `uv`; a graph whose edges all satisfy this
//! is an LGG. The crate provides the exact predicates, an angular-sort
//! verifier, edge-maximum LGG search via conflict graphs, dilation analysis,
//! the generators used for hardness and lower-bound instances, and
//! brute-force oracles for cross-checking.
//!
//! ```
//! use lgg::{build_graph, verify_lgg, Point, PointSet};
//!
//! let pts = PointSet::new(vec![
//!     Point::from_ints(0, 0),
//!     Point::from_ints(1, 0),
//!     Point::from_ints(1, 1),
//!     Point::from_ints(0, 1),
//! ])
//! .unwrap();
//! let square = build_graph(pts.clone(), &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
//! assert!(verify_lgg(&square).valid);
//! let with_diagonal = build_graph(pts, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
//! assert!(!verify_lgg(&with_diagonal).valid);
//! ```

pub mod constructors;
pub mod dilation;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod optimizer;
pub mod oracles;
pub mod par;
pub mod rational;
pub mod verifier;

pub use constructors::*;
pub use dilation::{
    decision_dilation, decision_dilation_with, dilation, dilation_matrix, dilation_pair, dilation_with,
    maximal_lgg_dilations, min_dilation_lgg, min_dilation_lgg_with, min_dilation_search, CandidateDilation,
    DilationReport, DilationSearch, DilationValue, MaximalDilations, MinDilation, MinDilationOptions, SearchOptions,
};
pub use error::{Error, Result};
pub use geometry::{angular_cmp, dot_gauge, edges_conflict, in_closed_diametral_disk, Point, Vector};
pub use graph::{build_graph, complete_graph, neighbors, Edge, GeometricGraph, PointSet};
pub use optimizer::{
    build_conflict_graph, enumerate_maximal_lggs, fill_variable_slots, glgg_with_at_least, max_glgg_exact,
    max_glgg_greedy, ConflictGraph, MaximalSets, SolveResult,
};
pub use oracles::{brute_force_lgg_valid, brute_force_min_dilation, brute_force_mwis, brute_force_sat};
pub use par::Exec;
pub use rational::Rational;
pub use verifier::{
    all_conflicting_pairs, all_conflicting_pairs_with, angular_ring, consecutive_conflicts, verify_lgg,
    verify_lgg_with, AngularRing, Verdict, Violation,
};
