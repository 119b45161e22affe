mod common;

use lgg::{
    brute_force_mwis, brute_force_sat, build_conflict_graph, check_conflict_properties, complete_graph,
    enumerate_maximal_lggs, fill_variable_slots, gen_max34_instance, gen_random_cnf, gen_random_max34,
    gen_sat3_instance, glgg_with_at_least, max_glgg_exact, max_glgg_greedy, verify_lgg, ConflictGraph, Rational,
};
use proptest::prelude::*;

use common::{forced_unsat, lattice_points};

fn conflict_graph() -> impl Strategy<Value = ConflictGraph> {
    (1usize..16).prop_flat_map(|m| {
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
        (prop::collection::vec(1i64..10, m), prop::collection::vec(any::<bool>(), pairs.len())).prop_map(
            move |(w, keep)| {
                let arcs: Vec<_> = pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(p, _)| *p).collect();
                ConflictGraph::new(w.into_iter().map(Rational::from_integer).collect(), arcs).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_matches_brute_force(cg in conflict_graph()) {
        let r = max_glgg_exact(&cg, None);
        prop_assert!(r.optimal);
        prop_assert!(cg.is_independent(&r.chosen));
        prop_assert_eq!(r.total_weight, brute_force_mwis(&cg).unwrap().weight);
    }

    #[test]
    fn greedy_is_feasible_and_bounded(cg in conflict_graph(), seed in any::<u64>()) {
        let g = max_glgg_greedy(&cg, seed);
        prop_assert!(cg.is_independent(&g.chosen));
        prop_assert!(g.total_weight <= max_glgg_exact(&cg, None).total_weight);
    }

    #[test]
    fn maximal_sets_are_maximal_and_contain_an_optimum(cg in conflict_graph()) {
        let all = enumerate_maximal_lggs(&cg, 100_000);
        prop_assert!(!all.truncated);
        let best = all.sets.iter().map(|s| cg.total_weight(s)).max().unwrap();
        prop_assert_eq!(best, max_glgg_exact(&cg, None).total_weight);
        for s in &all.sets {
            prop_assert!(cg.is_independent(s));
            for v in (0..cg.node_count()).filter(|v| !s.contains(v)) {
                prop_assert!(cg.neighbors(v).iter().any(|u| s.contains(u)));
            }
        }
    }
}

#[test]
fn maximal_lggs_of_point_sets_are_valid() {
    for seed in 0..8 {
        let k = complete_graph(lattice_points(6, 4, seed));
        let sets = enumerate_maximal_lggs(&build_conflict_graph(&k), 10_000).sets;
        assert!(!sets.is_empty());
        for s in sets {
            assert!(verify_lgg(&k.edge_subgraph(&s)).valid);
        }
    }
}

#[test]
fn satisfying_assignments_give_target_solutions() {
    for seed in 0..20 {
        let f = gen_random_cnf(5, 6, seed).unwrap();
        let inst = gen_sat3_instance(&f).unwrap();
        let cg = build_conflict_graph(&inst.graph);
        for mask in 0u32..32 {
            let a: Vec<bool> = (0..5).map(|i| mask >> i & 1 == 1).collect();
            let chosen = inst.solution_from_assignment(&a);
            assert!(cg.is_independent(&chosen));
            // each satisfied clause adds one edge on top of the variable slots
            assert_eq!(chosen.len(), 5 * 7 + f.satisfied_count(&a));
        }
    }
}

#[test]
fn normal_form_keeps_weight_and_fills_slots() {
    for seed in 0..10 {
        let f = gen_random_cnf(4, 3, 50 + seed).unwrap();
        let inst = gen_sat3_instance(&f).unwrap();
        let cg = build_conflict_graph(&inst.graph);
        let r = max_glgg_exact(&cg, None);
        let normal = fill_variable_slots(&inst, &r.chosen);
        assert!(cg.is_independent(&normal));
        assert!(normal.len() >= r.chosen.len());
        let slots = normal.iter().filter(|&&e| !inst.is_e1(e)).count();
        assert_eq!(slots, 4 * 4);
    }
}

#[test]
fn unsatisfiable_formula_falls_one_short() {
    let f = forced_unsat(4, 3);
    assert!(!brute_force_sat(&f).unwrap().satisfiable);
    let inst = gen_sat3_instance(&f).unwrap();
    let cg = build_conflict_graph(&inst.graph);
    let target = (8 + 1) * 4 + 8;
    assert_eq!(glgg_with_at_least(&cg, &Rational::from_integer(target), None), Some(false));
    assert_eq!(glgg_with_at_least(&cg, &Rational::from_integer(target - 1), None), Some(true));
}

#[test]
fn max34_instances_satisfy_conflict_properties_and_identity() {
    for seed in 0..6 {
        let f = gen_random_max34(3, seed).unwrap();
        let opt = brute_force_sat(&f).unwrap().max_satisfied;
        let inst = gen_max34_instance(&f, Some(opt)).unwrap();
        assert!(check_conflict_properties(&inst).is_empty());
        let r = max_glgg_exact(&build_conflict_graph(&inst.graph), None);
        assert_eq!(r.chosen.len(), 15 + opt);
    }
}
