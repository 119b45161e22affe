//! Seeded instance families shared by the integration tests.
#![allow(dead_code)]

use lgg::{
    gabriel_graph, gen_ladder, gen_ladder_augmented, gen_ladder_augmented_lgg, gen_max34_instance, gen_random_cnf,
    gen_random_max34, gen_random_points, gen_sat3_instance, gen_stratified_gabriel, gen_unit_distance_grid,
    BoundingBox, CnfFormula, GeometricGraph, Literal, Point, PointSet,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Distinct points on a small integer lattice, so right angles and
/// cocircular quadruples are common.
pub fn lattice_points(n: usize, side: i64, seed: u64) -> PointSet {
    let mut r = rng(seed);
    let mut cells: Vec<(i64, i64)> = (0..side).flat_map(|x| (0..side).map(move |y| (x, y))).collect();
    cells.shuffle(&mut r);
    PointSet::new(cells[..n].iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
}

pub fn random_subgraph(points: PointSet, p: f64, seed: u64) -> GeometricGraph {
    let mut r = rng(seed ^ 0x5eed);
    let n = points.len();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| r.gen_bool(p)).collect();
    GeometricGraph::build(points, &pairs).unwrap()
}

/// Random edge subsets of complete graphs on up to 40 vertices. Densities
/// span almost-surely-valid to almost-surely-invalid.
pub fn random_graph_corpus(count: u64) -> Vec<GeometricGraph> {
    const DENSITY: [f64; 6] = [0.02, 0.05, 0.1, 0.2, 0.4, 0.8];
    (0..count)
        .map(|seed| {
            let n = 2 + (seed as usize * 7) % 39;
            let p = DENSITY[(seed % 6) as usize];
            let points = if seed % 2 == 0 {
                gen_random_points(n, seed, &BoundingBox::unit()).unwrap()
            } else {
                lattice_points(n, 8, seed)
            };
            random_subgraph(points, p, seed)
        })
        .collect()
}

/// Every three-variable sign pattern, so no assignment satisfies all clauses.
pub fn forced_unsat(num_vars: usize, seed: u64) -> CnfFormula {
    let mut r = rng(seed);
    let mut vars: Vec<usize> = (0..num_vars).collect();
    vars.shuffle(&mut r);
    let mut clauses: Vec<[Literal; 3]> =
        (0..8).map(|m| [0, 1, 2].map(|i| Literal { var: vars[i], negated: m >> i & 1 == 1 })).collect();
    clauses.shuffle(&mut r);
    CnfFormula::new(num_vars, clauses).unwrap()
}

/// Outputs of every generator at small sizes.
pub fn generator_corpus() -> Vec<(String, GeometricGraph)> {
    let mut out = Vec::new();
    for n in [4usize, 16] {
        out.push((format!("ladder {n} gabriel"), gabriel_graph(&gen_ladder(n, None).unwrap())));
        out.push((format!("ladder-aug {n} gabriel"), gabriel_graph(&gen_ladder_augmented(n).unwrap())));
        out.push((format!("ladder-aug {n} witness"), gen_ladder_augmented_lgg(n).unwrap().graph));
    }
    for (rows, cols) in [(1, 1), (1, 5), (3, 4), (6, 6)] {
        out.push((format!("grid {rows}x{cols}"), gen_unit_distance_grid(rows, cols).unwrap()));
    }
    for (cols, rows, seed) in [(3, 3, 1), (5, 4, 2), (8, 8, 3)] {
        out.push((format!("stratified {cols}x{rows}"), gen_stratified_gabriel(cols, rows, seed).unwrap()));
    }
    for seed in 0..5 {
        out.push((
            format!("random gabriel {seed}"),
            gabriel_graph(&gen_random_points(12 + seed as usize * 5, seed, &BoundingBox::unit()).unwrap()),
        ));
        let f = gen_random_cnf(4, 3, seed).unwrap();
        out.push((format!("sat3 {seed}"), gen_sat3_instance(&f).unwrap().graph));
        let f = gen_random_max34(3, seed).unwrap();
        out.push((format!("max34 {seed}"), gen_max34_instance(&f, None).unwrap().graph));
    }
    out
}
