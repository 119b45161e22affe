mod common;

use std::time::Duration;

use lgg::{
    brute_force_min_dilation, complete_graph, decision_dilation, dilation, dilation_matrix, dilation_with,
    gabriel_graph, gen_ladder, gen_random_points, maximal_lgg_dilations, min_dilation_lgg, min_dilation_search,
    BoundingBox, DilationValue, Exec, GeometricGraph, MinDilationOptions, Rational, SearchOptions,
};
use proptest::prelude::*;

use common::{lattice_points, random_subgraph};

/// Hi end of `a` may not sit above `b` by more than rounding.
fn at_most(a: &DilationValue, b: &DilationValue) -> bool {
    match (a, b) {
        (_, DilationValue::Infinite) => true,
        (DilationValue::Infinite, _) => false,
        _ => a.lo() <= b.hi(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn adding_an_edge_never_increases_dilation(n in 3usize..12, p in 0.1f64..0.8, seed in any::<u64>(), pick in any::<usize>()) {
        let g = random_subgraph(lattice_points(n, 5, seed), p, seed);
        let missing: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| !g.has_edge(a, b)).collect();
        prop_assume!(!missing.is_empty());
        let mut pairs = g.edge_pairs();
        pairs.push(missing[pick % missing.len()]);
        let bigger = GeometricGraph::build(g.points().clone(), &pairs).unwrap();
        prop_assert!(at_most(&dilation(&bigger).unwrap().global, &dilation(&g).unwrap().global));
    }

    #[test]
    fn connected_graphs_have_dilation_at_least_one(n in 2usize..15, seed in any::<u64>()) {
        let d = dilation(&gabriel_graph(&gen_random_points(n, seed, &BoundingBox::unit()).unwrap())).unwrap().global;
        prop_assert!(d.is_finite());
        prop_assert!(d.hi() >= 1.0);
        prop_assert!(d.width() <= 1e-9);
    }

    #[test]
    fn sequential_and_parallel_agree(n in 2usize..20, p in 0.1f64..0.6, seed in any::<u64>()) {
        let g = random_subgraph(gen_random_points(n, seed, &BoundingBox::unit()).unwrap(), p, seed);
        prop_assert_eq!(dilation_with(&g, Exec::Sequential).unwrap(), dilation_with(&g, Exec::Parallel).unwrap());
    }
}

#[test]
fn complete_graphs_have_dilation_one() {
    for seed in 0..5 {
        let d = dilation(&complete_graph(lattice_points(7, 5, seed))).unwrap().global;
        assert!(d.contains(1.0));
    }
}

#[test]
fn disconnected_graphs_are_infinite() {
    let g = GeometricGraph::build(lattice_points(4, 3, 1), &[(0, 1), (2, 3)]).unwrap();
    let r = dilation(&g).unwrap();
    assert_eq!(r.global, DilationValue::Infinite);
    let m = dilation_matrix(&g, Exec::default()).unwrap().per_pair.unwrap();
    assert_eq!(m[0][2], DilationValue::Infinite);
}

#[test]
fn gabriel_dilation_stays_within_sqrt_n_scale() {
    let ratio = |n: usize| {
        let g = gabriel_graph(&gen_random_points(n, 11, &BoundingBox::unit()).unwrap());
        dilation(&g).unwrap().global.hi() / (n as f64).sqrt()
    };
    let c = ratio(50);
    for n in [100, 200] {
        assert!(ratio(n) <= 1.5 * c, "n={n}");
    }
}

#[test]
fn minimum_is_attained_by_a_maximal_lgg() {
    for seed in 0..10 {
        let p = lattice_points(5, 4, seed);
        let all = maximal_lgg_dilations(&p, &MinDilationOptions::default()).unwrap();
        let best = min_dilation_lgg(&p, 100_000).unwrap();
        assert!(all.candidates.iter().all(|c| at_most(&best.dilation, &c.dilation)));
        assert!(best.dilation.overlaps(&brute_force_min_dilation(&p).unwrap()));
    }
}

#[test]
fn search_agrees_with_enumeration() {
    for seed in 0..12 {
        let p = gen_random_points(8, seed, &BoundingBox::unit()).unwrap();
        let enumerated = min_dilation_lgg(&p, 1_000_000).unwrap();
        let opts = SearchOptions { max_points: 8, budget: Some(Duration::from_secs(60)), cutoff: None };
        let searched = min_dilation_search(&p, &opts).unwrap();
        assert!(searched.complete);
        assert!(searched.dilation.overlaps(&enumerated.dilation), "seed {seed}");
    }
}

#[test]
fn ladder_four_decisions() {
    let p = gen_ladder(4, None).unwrap();
    assert!(!decision_dilation(&p, Some(&Rational::one())).unwrap());
    assert!(decision_dilation(&p, Some(&Rational::new(7, 5))).unwrap());
    assert!(decision_dilation(&p, None).unwrap());
}
