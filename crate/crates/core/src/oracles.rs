//! Brute-force references. Each works straight from the definitions, shares
//! no search code with the fast paths, and refuses inputs above a hard size cap.

use serde::Serialize;

use crate::constructors::CnfFormula;
use crate::dilation::DilationValue;
use crate::error::{Error, Result};
use crate::geometry::in_closed_diametral_disk;
use crate::graph::{GeometricGraph, PointSet};
use crate::optimizer::ConflictGraph;
use crate::rational::Rational;

pub const MWIS_LIMIT: usize = 24;
pub const SAT_LIMIT: usize = 20;
pub const MIN_DILATION_LIMIT: usize = 7;

/// For every edge `(u, v)` and every other neighbor `w` of `u` or `v`, `w`
/// must lie outside the closed diametral disk of `uv`.
pub fn brute_force_lgg_valid(g: &GeometricGraph) -> bool {
    g.edges().iter().all(|e| {
        let (u, v) = (g.point(e.a), g.point(e.b));
        [e.a, e.b].iter().all(|&end| {
            g.incident(end)
                .iter()
                .map(|&f| g.edge(f).other(end))
                .filter(|&w| w != e.a && w != e.b)
                .all(|w| !in_closed_diametral_disk(u, v, g.point(w)).expect("distinct points"))
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MwisAnswer {
    pub weight: Rational,
    /// First optimal set met by an include-first search.
    pub set: Vec<usize>,
}

/// Maximum-weight independent set by exhaustive search over independent subsets.
pub fn brute_force_mwis(cg: &ConflictGraph) -> Result<MwisAnswer> {
    let m = cg.node_count();
    if m > MWIS_LIMIT {
        return Err(Error::TooLarge { size: m, limit: MWIS_LIMIT });
    }
    let adjacent = |a: usize, b: usize| cg.neighbors(a).contains(&b);
    let mut best = MwisAnswer { weight: Rational::zero(), set: Vec::new() };
    let mut current = Vec::new();
    fn walk(
        v: usize,
        m: usize,
        current: &mut Vec<usize>,
        weight: Rational,
        best: &mut MwisAnswer,
        cg: &ConflictGraph,
        adjacent: &dyn Fn(usize, usize) -> bool,
    ) {
        if v == m {
            if weight > best.weight {
                best.weight = weight;
                best.set = current.clone();
            }
            return;
        }
        if current.iter().all(|&u| !adjacent(u, v)) {
            current.push(v);
            walk(v + 1, m, current, &weight + cg.weight(v), best, cg, adjacent);
            current.pop();
        }
        walk(v + 1, m, current, weight, best, cg, adjacent);
    }
    walk(0, m, &mut current, Rational::zero(), &mut best, cg, &adjacent);
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SatAnswer {
    pub satisfiable: bool,
    pub max_satisfied: usize,
}

/// Tries all `2^n` assignments.
pub fn brute_force_sat(f: &CnfFormula) -> Result<SatAnswer> {
    let n = f.num_vars;
    if n > SAT_LIMIT {
        return Err(Error::TooLarge { size: n, limit: SAT_LIMIT });
    }
    let mut max_satisfied = 0;
    let mut assignment = vec![false; n];
    for mask in 0u32..(1u32 << n) {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        let count = f.clauses.iter().filter(|c| c.iter().any(|l| assignment[l.var] != l.negated)).count();
        max_satisfied = max_satisfied.max(count);
        if max_satisfied == f.clauses.len() {
            break;
        }
    }
    Ok(SatAnswer { satisfiable: max_satisfied == f.clauses.len(), max_satisfied })
}

/// Minimum dilation over every edge subset of the complete graph that passes
/// the literal LGG test, evaluated with Floyd–Warshall on padded double bounds.
pub fn brute_force_min_dilation(points: &PointSet) -> Result<DilationValue> {
    let n = points.len();
    if n > MIN_DILATION_LIMIT {
        return Err(Error::TooLarge { size: n, limit: MIN_DILATION_LIMIT });
    }
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    const PAD: f64 = 1e-15;
    let length = |a: usize, b: usize| {
        let d = points[a].dist2(&points[b]).to_f64().sqrt();
        (d * (1.0 - PAD), d * (1.0 + PAD))
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    // edges i and j clash when they share an endpoint and one's disk holds the other's far end
    let clash = |i: usize, j: usize| {
        let ((a, b), (c, d)) = (pairs[i], pairs[j]);
        let shared = [a, b].into_iter().find(|x| *x == c || *x == d);
        let Some(s) = shared else { return false };
        let x = if a == s { b } else { a };
        let y = if c == s { d } else { c };
        in_closed_diametral_disk(&points[s], &points[x], &points[y]).expect("distinct")
            || in_closed_diametral_disk(&points[s], &points[y], &points[x]).expect("distinct")
    };
    let clash_table: Vec<Vec<bool>> =
        (0..pairs.len()).map(|i| (0..pairs.len()).map(|j| i != j && clash(i, j)).collect()).collect();

    let mut best = (f64::INFINITY, f64::INFINITY);
    fn walk(
        i: usize,
        chosen: &mut Vec<usize>,
        best: &mut (f64, f64),
        clash: &[Vec<bool>],
        eval: &dyn Fn(&[usize]) -> (f64, f64),
    ) {
        if i == clash.len() {
            let (lo, hi) = eval(chosen);
            *best = (best.0.min(lo), best.1.min(hi));
            return;
        }
        if chosen.iter().all(|&c| !clash[c][i]) {
            chosen.push(i);
            walk(i + 1, chosen, best, clash, eval);
            chosen.pop();
        }
        walk(i + 1, chosen, best, clash, eval);
    }
    let eval = |chosen: &[usize]| floyd_warshall_dilation(n, &pairs, chosen, &length);
    walk(0, &mut Vec::new(), &mut best, &clash_table, &eval);
    let (best_lo, best_hi) = best;
    Ok(if best_hi.is_finite() { DilationValue::Finite { lo: best_lo, hi: best_hi } } else { DilationValue::Infinite })
}

fn floyd_warshall_dilation(
    n: usize,
    pairs: &[(usize, usize)],
    chosen: &[usize],
    length: &dyn Fn(usize, usize) -> (f64, f64),
) -> (f64, f64) {
    let mut lo = vec![vec![f64::INFINITY; n]; n];
    let mut hi = vec![vec![f64::INFINITY; n]; n];
    for v in 0..n {
        lo[v][v] = 0.0;
        hi[v][v] = 0.0;
    }
    for &c in chosen {
        let (a, b) = pairs[c];
        let (l, h) = length(a, b);
        lo[a][b] = l;
        lo[b][a] = l;
        hi[a][b] = h;
        hi[b][a] = h;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let l = (lo[i][k] + lo[k][j]) * (1.0 - 1e-15);
                if l < lo[i][j] {
                    lo[i][j] = l;
                }
                let h = (hi[i][k] + hi[k][j]) * (1.0 + 1e-15);
                if h < hi[i][j] {
                    hi[i][j] = h;
                }
            }
        }
    }
    let (mut worst_lo, mut worst_hi) = (0.0f64, 0.0f64);
    for &(a, b) in pairs {
        let (dl, dh) = length(a, b);
        worst_lo = worst_lo.max(lo[a][b] / dh * (1.0 - 1e-15));
        worst_hi = worst_hi.max(hi[a][b] / dl * (1.0 + 1e-15));
    }
    (worst_lo, worst_hi)
}
