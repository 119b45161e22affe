//! Branch and bound for the minimum dilation over all LGGs on a point set.
//!
//! A search node fixes some complete-graph edges in, some out, and leaves the
//! rest free (free edges never conflict with chosen ones). Adding edges never
//! lengthens a shortest path, so the dilation of chosen ∪ free bounds every
//! completion from below. Free edges without free conflicts are taken at once;
//! otherwise the search takes the worst pair whose shortest path in the bound
//! graph still uses a free edge and branches on that edge (in, then out).
//! The Gabriel graph, extended to a maximal LGG, seeds the incumbent.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::in_closed_diametral_disk;
use crate::graph::{GeometricGraph, PointSet};
use crate::optimizer::{build_conflict_graph, ConflictGraph};
use crate::par::Exec;

use super::bounds::Scalar;
use super::{global_exact, DilationValue};

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_points: usize,
    /// Stop after this long and report the incumbent as unproven.
    pub budget: Option<Duration>,
    /// Only look for LGGs with dilation below this value.
    pub cutoff: Option<f64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_points: 24, budget: None, cutoff: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DilationSearch {
    /// Vertex pairs of the best LGG found, sorted; empty when nothing beats the cutoff.
    pub edges: Vec<(usize, usize)>,
    /// Infinite when nothing beats the cutoff.
    pub dilation: DilationValue,
    /// Every LGG has dilation at least this (up to the cutoff); without
    /// `complete` it only covers the explored part.
    pub lower_bound: f64,
    pub complete: bool,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    In,
    Out,
    Free,
}

struct Search<'a> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    edge_index: Vec<usize>,
    cg: &'a ConflictGraph,
    dist: Vec<(f64, f64)>,
    best_hi: f64,
    best: Option<Vec<usize>>,
    /// Least bound over subtrees cut without a proof that they cannot go lower
    /// than the incumbent; only the budget produces such cuts.
    open_bound: f64,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

/// Dilation enclosure of one edge subset, plus each pair's ratio and
/// shortest-path predecessors (upper-length graph) for branching.
struct Evaluation {
    lo: f64,
    hi: f64,
    /// `(ratio upper bound, u, v)` for every pair, `u < v`.
    ratios: Vec<(f64, usize, usize)>,
    /// `pred[src * n + v]`: previous vertex on a shortest path from `src`.
    pred: Vec<usize>,
}

impl Search<'_> {
    fn evaluate(&self, states: &[State], keep: impl Fn(State) -> bool) -> Evaluation {
        let n = self.n;
        let mut adj_lo = vec![f64::INFINITY; n * n];
        let mut adj_hi = vec![f64::INFINITY; n * n];
        for (e, &(a, b)) in self.pairs.iter().enumerate() {
            if keep(states[e]) {
                let (lo, hi) = self.dist[a * n + b];
                adj_lo[a * n + b] = lo;
                adj_lo[b * n + a] = lo;
                adj_hi[a * n + b] = hi;
                adj_hi[b * n + a] = hi;
            }
        }
        let mut eval = Evaluation { lo: 1.0, hi: 1.0, ratios: Vec::new(), pred: vec![usize::MAX; n * n] };
        for src in 0..n {
            let (lo, _) = dense_paths(n, &adj_lo, src, false);
            let (hi, pred) = dense_paths(n, &adj_hi, src, true);
            eval.pred[src * n..(src + 1) * n].copy_from_slice(&pred);
            for v in src + 1..n {
                let (d_lo, d_hi) = self.dist[src * n + v];
                let r_lo = lo[v].div_down(&d_hi);
                let r_hi = hi[v].div_up(&d_lo);
                eval.lo = eval.lo.max(r_lo);
                eval.hi = eval.hi.max(r_hi);
                eval.ratios.push((r_hi, src, v));
            }
        }
        eval
    }

    /// A free edge on the shortest path of the worst pair that has one.
    fn branch_edge(&self, states: &[State], eval: &Evaluation) -> Option<usize> {
        let n = self.n;
        let mut order: Vec<usize> = (0..eval.ratios.len()).collect();
        order.sort_by(|&a, &b| eval.ratios[b].0.total_cmp(&eval.ratios[a].0).then(a.cmp(&b)));
        for i in order {
            let (ratio, u, v) = eval.ratios[i];
            if !ratio.is_finite() {
                continue;
            }
            let mut best: Option<(usize, usize)> = None;
            let mut x = v;
            while x != u {
                let p = eval.pred[u * n + x];
                let e = self.edge_index[p * n + x];
                if states[e] == State::Free {
                    let d = self.cg.neighbors(e).iter().filter(|&&f| states[f] == State::Free).count();
                    if best.is_none_or(|(bd, _)| d > bd) {
                        best = Some((d, e));
                    }
                }
                x = p;
            }
            if let Some((_, e)) = best {
                return Some(e);
            }
        }
        None
    }

    fn recurse(&mut self, mut states: Vec<State>) {
        self.nodes += 1;
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(64) && Instant::now() >= deadline {
                self.timed_out = true;
            }
        }
        // free edges with no free conflicts can always be added
        for e in 0..states.len() {
            if states[e] == State::Free && self.cg.neighbors(e).iter().all(|&f| states[f] != State::Free) {
                states[e] = State::In;
            }
        }
        let eval = self.evaluate(&states, |s| s != State::Out);
        if self.timed_out {
            self.open_bound = self.open_bound.min(eval.lo);
            return;
        }
        if eval.lo >= self.best_hi {
            return;
        }
        let Some(e) = self.branch_edge(&states, &eval) else {
            // every shortest path already runs over chosen edges: the chosen
            // edges plus any conflict-free completion realize the bound
            let mut leaf = states.clone();
            for f in 0..leaf.len() {
                if leaf[f] == State::Free {
                    leaf[f] = State::In;
                    for &g in self.cg.neighbors(f) {
                        if leaf[g] == State::Free {
                            leaf[g] = State::Out;
                        }
                    }
                }
            }
            let hi = self.evaluate(&leaf, |s| s == State::In).hi;
            if hi < self.best_hi {
                self.best_hi = hi;
                self.best = Some((0..leaf.len()).filter(|&f| leaf[f] == State::In).collect());
            }
            return;
        };
        let mut with = states.clone();
        with[e] = State::In;
        for &f in self.cg.neighbors(e) {
            if with[f] == State::Free {
                with[f] = State::Out;
            }
        }
        self.recurse(with);
        states[e] = State::Out;
        self.recurse(states);
    }
}

fn dense_paths(n: usize, adj: &[f64], src: usize, up: bool) -> (Vec<f64>, Vec<usize>) {
    let mut dist = vec![f64::INFINITY; n];
    let mut pred = vec![usize::MAX; n];
    let mut done = vec![false; n];
    dist[src] = 0.0;
    for _ in 0..n {
        let Some(u) = (0..n).filter(|&v| !done[v] && dist[v].is_finite()).min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
        else {
            break;
        };
        done[u] = true;
        for v in 0..n {
            let w = adj[u * n + v];
            if !done[v] && w.is_finite() {
                let cand = if up { dist[u].add_up(&w) } else { dist[u].add_down(&w) };
                if cand < dist[v] {
                    dist[v] = cand;
                    pred[v] = u;
                }
            }
        }
    }
    (dist, pred)
}

/// Gabriel edges, then the remaining edges shortest first while they fit.
fn gabriel_seed(complete: &GeometricGraph, cg: &ConflictGraph, points: &PointSet) -> Vec<State> {
    let n = points.len();
    let mut states = vec![State::Free; complete.edge_count()];
    let mut order: Vec<usize> = (0..complete.edge_count()).collect();
    let is_gabriel = |e: usize| {
        let (a, b) = complete.edge(e).endpoints();
        (0..n)
            .filter(|&w| w != a && w != b)
            .all(|w| !in_closed_diametral_disk(&points[a], &points[b], &points[w]).expect("distinct"))
    };
    let lengths: Vec<_> = (0..complete.edge_count())
        .map(|e| {
            let (a, b) = complete.edge(e).endpoints();
            points[a].dist2(&points[b])
        })
        .collect();
    order.sort_by(|&x, &y| is_gabriel(y).cmp(&is_gabriel(x)).then(lengths[x].cmp(&lengths[y])).then(x.cmp(&y)));
    for e in order {
        if states[e] == State::Free {
            states[e] = State::In;
            for &f in cg.neighbors(e) {
                if states[f] == State::Free {
                    states[f] = State::Out;
                }
            }
        }
    }
    states
}

/// Minimum dilation over every LGG on `points`, with the LGG attaining it.
pub fn min_dilation_search(points: &PointSet, opts: &SearchOptions) -> Result<DilationSearch> {
    let n = points.len();
    if n > opts.max_points {
        return Err(Error::TooManyPoints { n, limit: opts.max_points });
    }
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    let complete = GeometricGraph::complete(points.clone());
    let cg = build_conflict_graph(&complete);
    let mut dist = vec![(0.0, 0.0); n * n];
    for a in 0..n {
        for b in a + 1..n {
            let d = f64::sqrt_enclosure(&points[a].dist2(&points[b]), 0);
            dist[a * n + b] = d;
            dist[b * n + a] = d;
        }
    }
    let pairs = complete.edge_pairs();
    let mut edge_index = vec![usize::MAX; n * n];
    for (e, &(a, b)) in pairs.iter().enumerate() {
        edge_index[a * n + b] = e;
        edge_index[b * n + a] = e;
    }
    let mut search = Search {
        n,
        pairs,
        edge_index,
        cg: &cg,
        dist,
        best_hi: f64::INFINITY,
        best: None,
        open_bound: f64::INFINITY,
        nodes: 0,
        deadline: opts.budget.map(|b| Instant::now() + b),
        timed_out: false,
    };
    let seed = gabriel_seed(&complete, &cg, points);
    let seed_hi = search.evaluate(&seed, |s| s == State::In).hi;
    let cutoff = opts.cutoff.unwrap_or(f64::INFINITY);
    if seed_hi < cutoff {
        search.best_hi = seed_hi;
        search.best = Some((0..seed.len()).filter(|&e| seed[e] == State::In).collect());
    } else {
        search.best_hi = cutoff;
    }
    search.recurse(vec![State::Free; complete.edge_count()]);

    let (edges, dilation) = match &search.best {
        Some(chosen) => {
            let best = complete.edge_subgraph(chosen);
            let (exact, _) = global_exact(&best, Exec::Sequential, None, 0);
            let mut edges = best.edge_pairs();
            edges.sort_unstable();
            (edges, exact.value())
        }
        None => (Vec::new(), DilationValue::Infinite),
    };
    let proven = dilation.lo().min(cutoff);
    let lower_bound = if search.timed_out { search.open_bound.min(proven) } else { proven };
    Ok(DilationSearch { edges, dilation, lower_bound, complete: !search.timed_out, nodes_explored: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilation::{maximal_lgg_dilations, min_dilation_lgg, MinDilationOptions};
    use crate::geometry::Point;

    fn points(list: &[(i64, i64)]) -> PointSet {
        PointSet::new(list.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        let r = min_dilation_search(&points(&[(0, 0), (1, 0), (2, 0)]), &SearchOptions::default()).unwrap();
        assert_eq!(r.edges, vec![(0, 1), (1, 2)]);
        assert!(r.dilation.contains(1.0) && r.complete);
        let r = min_dilation_search(&points(&[(0, 0), (1, 0), (1, 1), (0, 1)]), &SearchOptions::default()).unwrap();
        assert!(r.dilation.contains(std::f64::consts::SQRT_2));
    }

    #[test]
    fn agrees_with_enumeration() {
        let sets = [
            vec![(0, 0), (5, 1), (2, 7), (9, 4), (4, 4), (7, 8)],
            vec![(0, 0), (3, 0), (6, 0), (1, 2), (4, 2), (2, 5), (5, 5)],
            vec![(0, 0), (10, 0), (5, 2), (5, 9), (1, 6), (9, 6), (3, 3), (7, 3)],
        ];
        for s in &sets {
            let pts = points(s);
            let fast = min_dilation_search(&pts, &SearchOptions::default()).unwrap();
            let slow = min_dilation_lgg(&pts, 1_000_000).unwrap();
            assert!(fast.dilation.overlaps(&slow.dilation), "{s:?}: {:?} vs {:?}", fast.dilation, slow.dilation);
            let all = maximal_lgg_dilations(&pts, &MinDilationOptions::default()).unwrap();
            assert!(all.candidates.iter().all(|c| c.dilation.hi() >= fast.lower_bound));
        }
    }
}
