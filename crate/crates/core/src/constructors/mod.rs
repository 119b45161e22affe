//! Point-set and graph generators.

mod gabriel;
mod ladder;
mod random;
mod reduction;

pub use gabriel::{gabriel_graph, gabriel_graph_with};
pub use ladder::{
    gen_ladder, gen_ladder_augmented, gen_ladder_augmented_lgg, ladder_chains, ladder_min_r, LadderWitness,
};
pub use random::{
    gen_random_cnf, gen_random_max34, gen_random_points, gen_stratified_gabriel, gen_unit_distance_grid, BoundingBox,
};
pub use reduction::{
    check_conflict_properties, gen_max34_instance, gen_sat3_instance, CnfFormula, Literal, PropertyViolation,
    ReductionInstance, ReductionKind,
};
