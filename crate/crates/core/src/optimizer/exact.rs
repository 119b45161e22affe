//! Branch and bound for maximum-weight independent sets.
//!
//! Each search node applies the degree-0 and degree-1 reductions, bounds by a
//! greedy weighted clique cover, then branches on a maximum-degree node
//! (include first, then exclude). The greedy heuristic seeds the incumbent.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::rational::Rational;

use super::bitset::BitSet;
use super::conflict::ConflictGraph;
use super::greedy::max_glgg_greedy;
use super::SolveResult;

trait Weight: Clone + Ord {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
}

impl Weight for u128 {
    fn zero() -> Self {
        0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

impl Weight for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

struct Search<'a, W> {
    adj: &'a [BitSet],
    weights: &'a [W],
    /// Nodes by weight descending, then index.
    cover_order: Vec<usize>,
    best: W,
    best_set: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<W: Weight> Search<'_, W> {
    fn clique_cover_bound(&self, p: &BitSet) -> W {
        let mut cliques: Vec<BitSet> = Vec::new();
        let mut bound = W::zero();
        for &v in self.cover_order.iter().filter(|&&v| p.contains(v)) {
            match cliques.iter_mut().find(|c| c.contains(v)) {
                Some(common) => common.intersect_with(&self.adj[v]),
                None => {
                    let mut common = self.adj[v].clone();
                    common.intersect_with(p);
                    cliques.push(common);
                    bound = bound.plus(&self.weights[v]);
                }
            }
        }
        bound
    }

    fn recurse(&mut self, mut p: BitSet, mut cur: W) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(512) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        let mark = self.chosen.len();
        loop {
            let mut changed = false;
            let live: Vec<usize> = p.iter().collect();
            for v in live {
                if !p.contains(v) {
                    continue;
                }
                match p.intersection_len(&self.adj[v]) {
                    0 => {
                        p.remove(v);
                        self.chosen.push(v);
                        cur = cur.plus(&self.weights[v]);
                        changed = true;
                    }
                    1 => {
                        let mut nb = self.adj[v].clone();
                        nb.intersect_with(&p);
                        let u = nb.first().expect("one neighbor");
                        if self.weights[v] >= self.weights[u] {
                            p.remove(v);
                            p.remove(u);
                            self.chosen.push(v);
                            cur = cur.plus(&self.weights[v]);
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if p.is_empty() {
            if cur > self.best {
                self.best = cur;
                self.best_set = self.chosen.clone();
            }
            self.chosen.truncate(mark);
            return;
        }
        if cur.plus(&self.clique_cover_bound(&p)) <= self.best {
            self.chosen.truncate(mark);
            return;
        }
        let branch = p
            .iter()
            .map(|v| (p.intersection_len(&self.adj[v]), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
            .expect("nonempty");

        let mut with = p.clone();
        with.difference_with(&self.adj[branch]);
        with.remove(branch);
        self.chosen.push(branch);
        let with_weight = cur.plus(&self.weights[branch]);
        self.recurse(with, with_weight);
        self.chosen.pop();

        p.remove(branch);
        self.recurse(p, cur);
        self.chosen.truncate(mark);
    }
}

fn run<W: Weight>(
    cg: &ConflictGraph,
    weights: &[W],
    incumbent: &[usize],
    deadline: Option<Instant>,
) -> (Vec<usize>, bool, u64) {
    let m = cg.node_count();
    let adj = cg.adjacency_bits();
    let mut cover_order: Vec<usize> = (0..m).collect();
    cover_order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
    let best = incumbent.iter().fold(W::zero(), |acc, &v| acc.plus(&weights[v]));
    let mut search = Search {
        adj: &adj,
        weights,
        cover_order,
        best,
        best_set: incumbent.to_vec(),
        chosen: Vec::new(),
        nodes: 0,
        deadline,
        timed_out: false,
    };
    search.recurse(BitSet::full(m), W::zero());
    let mut set = search.best_set;
    set.sort_unstable();
    (set, !search.timed_out, search.nodes)
}

/// Integer weights sharing one scale, when they fit comfortably in `u128`.
fn scaled_integer_weights(weights: &[Rational]) -> Option<Vec<u128>> {
    let lcm = weights.iter().fold(BigInt::from(1u32), |acc, w| acc.lcm(w.denom()));
    let scaled: Option<Vec<u128>> =
        weights.iter().map(|w| (w.numer() * (&lcm / w.denom())).to_u64().map(u128::from)).collect();
    let scaled = scaled?;
    let total: u128 = scaled.iter().sum();
    (total < u128::MAX / 2).then_some(scaled)
}

/// Exact maximum-weight GLGG edge set. With a budget the search may stop
/// early and return its incumbent with `optimal == false`.
pub fn max_glgg_exact(cg: &ConflictGraph, budget: Option<Duration>) -> SolveResult {
    let deadline = budget.map(|b| Instant::now() + b);
    let incumbent = max_glgg_greedy(cg, 0).chosen;
    let (chosen, optimal, nodes_explored) = match scaled_integer_weights(cg.weights()) {
        Some(w) => run(cg, &w, &incumbent, deadline),
        None => run(cg, cg.weights(), &incumbent, deadline),
    };
    let total_weight = cg.total_weight(&chosen);
    SolveResult { chosen, total_weight, optimal, nodes_explored }
}

/// Whether some GLGG reaches weight `m`; `None` if the budget ran out first.
pub fn glgg_with_at_least(cg: &ConflictGraph, m: &Rational, budget: Option<Duration>) -> Option<bool> {
    let result = max_glgg_exact(cg, budget);
    if result.total_weight >= *m {
        Some(true)
    } else if result.optimal {
        Some(false)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(m: usize, arcs: &[(usize, usize)]) -> ConflictGraph {
        ConflictGraph::new(vec![Rational::one(); m], arcs.iter().copied()).unwrap()
    }

    #[test]
    fn no_arcs_takes_everything() {
        let r = max_glgg_exact(&unit(5, &[]), None);
        assert_eq!(r.chosen, vec![0, 1, 2, 3, 4]);
        assert!(r.optimal);
    }

    #[test]
    fn square_with_diagonals() {
        // sides 0..4, diagonals 4 and 5, each diagonal conflicting with all sides
        let arcs: Vec<_> = (0..4).flat_map(|s| [(s, 4), (s, 5)]).collect();
        let r = max_glgg_exact(&unit(6, &arcs), None);
        assert_eq!(r.total_weight, Rational::from_integer(4));
        assert_eq!(r.chosen, vec![0, 1, 2, 3]);
    }

    #[test]
    fn weighted_star_prefers_heavy_center() {
        let w = vec![Rational::from_integer(10), Rational::one(), Rational::one(), Rational::one()];
        let cg = ConflictGraph::new(w, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = max_glgg_exact(&cg, None);
        assert_eq!(r.chosen, vec![0]);
    }

    #[test]
    fn fractional_weights_use_exact_scaling() {
        let w = vec![Rational::new(1, 3), Rational::new(1, 4), Rational::new(1, 5)];
        let cg = ConflictGraph::new(w, [(0, 1), (0, 2)]).unwrap();
        let r = max_glgg_exact(&cg, None);
        assert_eq!(r.total_weight, Rational::new(9, 20));
    }

    #[test]
    fn huge_weights_fall_back_to_rationals() {
        let big = Rational::pow10(40);
        let w = vec![big.clone(), big.clone(), Rational::new(1, 7)];
        let cg = ConflictGraph::new(w, [(0, 1)]).unwrap();
        assert!(scaled_integer_weights(cg.weights()).is_none());
        let r = max_glgg_exact(&cg, None);
        assert_eq!(r.total_weight, big + Rational::new(1, 7));
    }

    #[test]
    fn zero_budget_still_returns_an_independent_set() {
        let arcs: Vec<_> =
            (0..30).flat_map(|a| ((a + 1)..30).filter(move |b| (a * b) % 7 == 1).map(move |b| (a, b))).collect();
        let cg = unit(30, &arcs);
        let r = max_glgg_exact(&cg, Some(Duration::ZERO));
        assert!(cg.is_independent(&r.chosen));
    }

    #[test]
    fn decision_wrapper() {
        let cg = unit(3, &[(0, 1), (1, 2)]);
        assert_eq!(glgg_with_at_least(&cg, &Rational::from_integer(2), None), Some(true));
        assert_eq!(glgg_with_at_least(&cg, &Rational::from_integer(3), None), Some(false));
    }
}
