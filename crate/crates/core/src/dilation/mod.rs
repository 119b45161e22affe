//! Dilation (stretch factor) of geometric graphs and the small-n search for
//! minimum-dilation LGGs.
//!
//! Path lengths are sums of square roots, so every value is reported as an
//! enclosing interval. Evaluation first runs in outward-rounded doubles; when
//! the result is wider than the target resolution (or the doubles overflow) it
//! is redone with exact rationals over truncated square roots at 64, 128 and
//! 256 bits. Shortest paths are computed twice per source, once with lower
//! and once with upper edge-length bounds, which brackets the true distance.

mod bounds;
mod search;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GeometricGraph, PointSet};
use crate::optimizer::{build_conflict_graph, enumerate_maximal_lggs};
use crate::par::Exec;
use crate::rational::Rational;

use bounds::{f64_down, f64_up, Key, Scalar};
pub use search::{min_dilation_search, DilationSearch, SearchOptions};

/// Target interval width for reported values.
const RESOLUTION: f64 = 1e-9;
const PRECISIONS: [u32; 3] = [64, 128, 256];

/// An enclosure of a dilation value, or an explicit infinity for disconnected pairs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DilationValue {
    Finite { lo: f64, hi: f64 },
    Infinite,
}

impl DilationValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, DilationValue::Finite { .. })
    }

    pub fn lo(&self) -> f64 {
        match self {
            DilationValue::Finite { lo, .. } => *lo,
            DilationValue::Infinite => f64::INFINITY,
        }
    }

    pub fn hi(&self) -> f64 {
        match self {
            DilationValue::Finite { hi, .. } => *hi,
            DilationValue::Infinite => f64::INFINITY,
        }
    }

    pub fn width(&self) -> f64 {
        match self {
            DilationValue::Finite { lo, hi } => hi - lo,
            DilationValue::Infinite => 0.0,
        }
    }

    pub fn midpoint(&self) -> f64 {
        match self {
            DilationValue::Finite { lo, hi } => lo + (hi - lo) / 2.0,
            DilationValue::Infinite => f64::INFINITY,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo() <= x && x <= self.hi()
    }

    /// Interval equality: the two enclosures can describe the same number.
    pub fn overlaps(&self, other: &DilationValue) -> bool {
        match (self, other) {
            (DilationValue::Infinite, DilationValue::Infinite) => true,
            (DilationValue::Finite { .. }, DilationValue::Finite { .. }) => {
                self.lo() <= other.hi() && other.lo() <= self.hi()
            }
            _ => false,
        }
    }
}

/// Exact rational enclosure behind a [`DilationValue`].
#[derive(Clone, Debug, PartialEq, Eq)]
enum Exact {
    Finite(Rational, Rational),
    Infinite,
}

impl Exact {
    fn value(&self) -> DilationValue {
        match self {
            Exact::Finite(lo, hi) => DilationValue::Finite { lo: f64_down(lo), hi: f64_up(hi) },
            Exact::Infinite => DilationValue::Infinite,
        }
    }

    fn resolved(&self) -> bool {
        match self {
            Exact::Finite(lo, hi) => (hi - lo).to_f64() <= RESOLUTION / 2.0,
            Exact::Infinite => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DilationReport {
    pub global: DilationValue,
    /// The first pair `(u, v)`, `u < v`, attaining the maximal upper bound, or
    /// the first pair in different components.
    pub witness_pair: (usize, usize),
    /// `per_pair[u][v]`; the diagonal holds exactly 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_pair: Option<Vec<Vec<DilationValue>>>,
}

fn adjacency(g: &GeometricGraph) -> Vec<Vec<(usize, usize)>> {
    (0..g.vertex_count()).map(|v| g.incident(v).iter().map(|&e| (g.edge(e).other(v), e)).collect()).collect()
}

fn shortest_paths<T: Scalar>(adj: &[Vec<(usize, usize)>], len: &[T], up: bool, src: usize) -> Vec<Option<T>> {
    let mut dist: Vec<Option<T>> = vec![None; adj.len()];
    let mut done = vec![false; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[src] = Some(T::zero());
    heap.push(Reverse((Key(T::zero()), src)));
    while let Some(Reverse((Key(d), u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, e) in &adj[u] {
            if done[v] {
                continue;
            }
            let cand = if up { d.add_up(&len[e]) } else { d.add_down(&len[e]) };
            if dist[v].as_ref().is_none_or(|cur| cand < *cur) {
                dist[v] = Some(cand.clone());
                heap.push(Reverse((Key(cand), v)));
            }
        }
    }
    dist
}

/// Lower and upper edge lengths plus a pair-distance source for one tier.
struct Tier<'a, T> {
    g: &'a GeometricGraph,
    adj: Vec<Vec<(usize, usize)>>,
    lo_len: Vec<T>,
    hi_len: Vec<T>,
    bits: u32,
    distances: Option<&'a [(T, T)]>,
}

impl<'a, T: Scalar> Tier<'a, T> {
    fn new(g: &'a GeometricGraph, bits: u32, distances: Option<&'a [(T, T)]>) -> Self {
        let n = g.vertex_count();
        let (lo_len, hi_len) = g
            .edges()
            .iter()
            .map(|e| match distances {
                Some(d) => d[e.a * n + e.b].clone(),
                None => T::sqrt_enclosure(&g.point(e.a).dist2(g.point(e.b)), bits),
            })
            .unzip();
        Tier { g, adj: adjacency(g), lo_len, hi_len, bits, distances }
    }

    fn distance(&self, u: usize, v: usize) -> (T, T) {
        match self.distances {
            Some(d) => d[u * self.g.vertex_count() + v].clone(),
            None => T::sqrt_enclosure(&self.g.point(u).dist2(self.g.point(v)), self.bits),
        }
    }

    /// `None` for pairs in different components.
    fn ratios_from(&self, u: usize, targets: impl Iterator<Item = usize>) -> Vec<Option<(T, T)>> {
        let lo = shortest_paths(&self.adj, &self.lo_len, false, u);
        let hi = shortest_paths(&self.adj, &self.hi_len, true, u);
        targets
            .map(|v| {
                let (path_lo, path_hi) = (lo[v].as_ref()?, hi[v].as_ref()?);
                let (d_lo, d_hi) = self.distance(u, v);
                Some((path_lo.div_down(&d_hi), path_hi.div_up(&d_lo)))
            })
            .collect()
    }
}

struct SourceSummary<T> {
    max_lo: Option<T>,
    max_hi: Option<(T, usize)>,
    unreachable: Option<usize>,
}

fn global_in_tier<T: Scalar>(tier: &Tier<'_, T>, exec: Exec) -> Option<(Exact, (usize, usize))> {
    let n = tier.g.vertex_count();
    let summaries = exec.map_range(n, |u| {
        let mut s = SourceSummary { max_lo: None, max_hi: None, unreachable: None };
        for (v, r) in (u + 1..n).zip(tier.ratios_from(u, u + 1..n)) {
            match r {
                None => {
                    s.unreachable.get_or_insert(v);
                }
                Some((lo, hi)) => {
                    if s.max_lo.as_ref().is_none_or(|m| lo > *m) {
                        s.max_lo = Some(lo);
                    }
                    if s.max_hi.as_ref().is_none_or(|(m, _)| hi > *m) {
                        s.max_hi = Some((hi, v));
                    }
                }
            }
        }
        s
    });
    if let Some((u, v)) = summaries.iter().enumerate().find_map(|(u, s)| s.unreachable.map(|v| (u, v))) {
        return Some((Exact::Infinite, (u, v)));
    }
    let mut max_lo: Option<T> = None;
    let mut max_hi: Option<(T, (usize, usize))> = None;
    for (u, s) in summaries.into_iter().enumerate() {
        if let Some(lo) = s.max_lo {
            if max_lo.as_ref().is_none_or(|m| lo > *m) {
                max_lo = Some(lo);
            }
        }
        if let Some((hi, v)) = s.max_hi {
            if max_hi.as_ref().is_none_or(|(m, _)| hi > *m) {
                max_hi = Some((hi, (u, v)));
            }
        }
    }
    let (hi, witness) = max_hi.expect("at least two vertices");
    let lo = max_lo.expect("at least two vertices").to_rational()?;
    let hi = hi.to_rational()?;
    Some((Exact::Finite(lo, hi), witness))
}

/// Runs the tiers until the global enclosure is narrow enough (or precision runs out).
fn global_exact(
    g: &GeometricGraph,
    exec: Exec,
    cache: Option<&[(f64, f64)]>,
    min_bits: u32,
) -> (Exact, (usize, usize)) {
    if min_bits == 0 {
        if let Some(r) = global_in_tier(&Tier::<f64>::new(g, 0, cache), exec) {
            if r.0.resolved() {
                return r;
            }
        }
    }
    let mut last = None;
    for bits in PRECISIONS.into_iter().filter(|&b| b >= min_bits) {
        let r = global_in_tier(&Tier::<Rational>::new(g, bits, None), exec).expect("rationals never overflow");
        if r.0.resolved() {
            return r;
        }
        last = Some(r);
    }
    last.expect("at least one precision tier")
}

fn check_vertices(g: &GeometricGraph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    Ok(())
}

/// Global dilation `max D_G(u,v) / |uv|` over all vertex pairs.
pub fn dilation(g: &GeometricGraph) -> Result<DilationReport> {
    dilation_with(g, Exec::default())
}

pub fn dilation_with(g: &GeometricGraph, exec: Exec) -> Result<DilationReport> {
    check_vertices(g)?;
    let (exact, witness_pair) = global_exact(g, exec, None, 0);
    Ok(DilationReport { global: exact.value(), witness_pair, per_pair: None })
}

fn pair_exact(g: &GeometricGraph, u: usize, v: usize) -> Exact {
    let tier = Tier::<f64>::new(g, 0, None);
    if let Some(r) = tier.ratios_from(u, std::iter::once(v)).pop().expect("one target") {
        if let (Some(lo), Some(hi)) = (r.0.to_rational(), r.1.to_rational()) {
            let e = Exact::Finite(lo, hi);
            if e.resolved() {
                return e;
            }
        }
    } else {
        return Exact::Infinite;
    }
    let mut last = Exact::Infinite;
    for bits in PRECISIONS {
        let tier = Tier::<Rational>::new(g, bits, None);
        let (lo, hi) = tier.ratios_from(u, std::iter::once(v)).pop().flatten().expect("connected");
        last = Exact::Finite(lo, hi);
        if last.resolved() {
            break;
        }
    }
    last
}

/// Like [`dilation`], also filling the full pair matrix.
pub fn dilation_matrix(g: &GeometricGraph, exec: Exec) -> Result<DilationReport> {
    let mut report = dilation_with(g, exec)?;
    let n = g.vertex_count();
    let rows = exec.map_range(n, |u| {
        (0..n)
            .map(|v| if u == v { DilationValue::Finite { lo: 1.0, hi: 1.0 } } else { pair_exact(g, u, v).value() })
            .collect()
    });
    report.per_pair = Some(rows);
    Ok(report)
}

/// Stretch of a single pair.
pub fn dilation_pair(g: &GeometricGraph, u: usize, v: usize) -> Result<DilationValue> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::IndexOutOfRange { index: x, len: n });
        }
    }
    if u == v {
        return Err(Error::SamePair);
    }
    Ok(pair_exact(g, u, v).value())
}

#[derive(Clone, Copy, Debug)]
pub struct MinDilationOptions {
    /// Maximum number of maximal LGGs to enumerate.
    pub cap: usize,
    /// Largest accepted point set.
    pub max_points: usize,
    pub exec: Exec,
}

impl Default for MinDilationOptions {
    fn default() -> Self {
        MinDilationOptions { cap: 100_000, max_points: 12, exec: Exec::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateDilation {
    /// Vertex pairs of the maximal LGG, sorted.
    pub edges: Vec<(usize, usize)>,
    pub dilation: DilationValue,
    #[serde(skip)]
    exact: ExactBounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ExactBounds(Exact);

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaximalDilations {
    pub candidates: Vec<CandidateDilation>,
    /// The enumeration stopped at the cap; the list is incomplete.
    pub truncated: bool,
}

/// Dilation of every maximal LGG on `points`, in lexicographic edge-set order.
pub fn maximal_lgg_dilations(points: &PointSet, opts: &MinDilationOptions) -> Result<MaximalDilations> {
    let n = points.len();
    if n > opts.max_points {
        return Err(Error::TooManyPoints { n, limit: opts.max_points });
    }
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    let complete = GeometricGraph::complete(points.clone());
    let enumeration = enumerate_maximal_lggs(&build_conflict_graph(&complete), opts.cap);
    let cache: Vec<(f64, f64)> = opts.exec.map_range(n * n, |i| {
        if i / n == i % n {
            (0.0, 0.0)
        } else {
            f64::sqrt_enclosure(&points[i / n].dist2(&points[i % n]), 0)
        }
    });
    let candidates = opts.exec.map_slice(&enumeration.sets, |set| {
        let sub = complete.edge_subgraph(set);
        let (exact, _) = global_exact(&sub, Exec::Sequential, Some(&cache), 0);
        let mut edges = sub.edge_pairs();
        edges.sort_unstable();
        CandidateDilation { edges, dilation: exact.value(), exact: ExactBounds(exact) }
    });
    let mut candidates = candidates;
    candidates.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(MaximalDilations { candidates, truncated: enumeration.truncated })
}

#[derive(Clone, Debug)]
pub struct MinDilation {
    pub best: GeometricGraph,
    pub dilation: DilationValue,
    pub candidates_evaluated: usize,
    pub truncated: bool,
}

/// A minimum-dilation LGG over `points`, searched among maximal LGGs.
/// Candidates whose enclosure reaches below the best upper bound tie; the
/// lexicographically smallest edge set among them is returned.
pub fn min_dilation_lgg(points: &PointSet, cap: usize) -> Result<MinDilation> {
    min_dilation_lgg_with(points, &MinDilationOptions { cap, ..MinDilationOptions::default() })
}

pub fn min_dilation_lgg_with(points: &PointSet, opts: &MinDilationOptions) -> Result<MinDilation> {
    let all = maximal_lgg_dilations(points, opts)?;
    let best_hi = all.candidates.iter().map(|c| c.dilation.hi()).fold(f64::INFINITY, f64::min);
    let chosen = all.candidates.iter().find(|c| c.dilation.lo() <= best_hi).expect("some maximal LGG exists");
    let best = GeometricGraph::build(points.clone(), &chosen.edges)?;
    Ok(MinDilation {
        best,
        dilation: chosen.dilation,
        candidates_evaluated: all.candidates.len(),
        truncated: all.truncated,
    })
}

/// Whether some LGG on `points` has dilation at most `k` (`None` = infinity).
pub fn decision_dilation(points: &PointSet, k: Option<&Rational>) -> Result<bool> {
    decision_dilation_with(points, k, &MinDilationOptions::default())
}

/// Values that stay ambiguous at the highest precision are taken as `≤ k`.
pub fn decision_dilation_with(points: &PointSet, k: Option<&Rational>, opts: &MinDilationOptions) -> Result<bool> {
    let all = maximal_lgg_dilations(points, opts)?;
    let Some(k) = k else { return Ok(true) };
    let side = |e: &Exact| match e {
        Exact::Infinite => Some(false),
        Exact::Finite(_, hi) if hi <= k => Some(true),
        Exact::Finite(lo, _) if lo > k => Some(false),
        Exact::Finite(..) => None,
    };
    let mut ambiguous = Vec::new();
    for c in &all.candidates {
        match side(&c.exact.0) {
            Some(true) => return Ok(true),
            Some(false) => {}
            None => ambiguous.push(c),
        }
    }
    let complete = GeometricGraph::complete(points.clone());
    for c in ambiguous {
        let g = GeometricGraph::build(complete.points().clone(), &c.edges)?;
        let mut verdict = None;
        for bits in PRECISIONS {
            let (exact, _) = global_exact(&g, opts.exec, None, bits);
            verdict = side(&exact);
            if verdict.is_some() {
                break;
            }
        }
        if verdict != Some(false) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn graph(points: &[(i64, i64)], edges: &[(usize, usize)]) -> GeometricGraph {
        let pts = PointSet::new(points.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap();
        GeometricGraph::build(pts, edges).unwrap()
    }

    const SQUARE: [(i64, i64); 4] = [(0, 0), (1, 0), (1, 1), (0, 1)];

    #[test]
    fn collinear_path_is_one() {
        let g = graph(&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (1, 2)]);
        let r = dilation(&g).unwrap();
        assert!(r.global.contains(1.0));
        assert!(r.global.width() <= RESOLUTION);
    }

    #[test]
    fn square_sides_give_root_two() {
        let g = graph(&SQUARE, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let r = dilation(&g).unwrap();
        assert!(r.global.contains(std::f64::consts::SQRT_2));
        assert!(r.global.width() <= RESOLUTION);
        assert_eq!(r.witness_pair, (0, 2));
        assert!(dilation_pair(&g, 0, 2).unwrap().contains(std::f64::consts::SQRT_2));
        assert!(dilation_pair(&g, 0, 1).unwrap().contains(1.0));
    }

    #[test]
    fn square_missing_side_gives_three() {
        let g = graph(&SQUARE, &[(0, 1), (1, 2), (2, 3)]);
        let r = dilation(&g).unwrap();
        assert!(r.global.contains(3.0));
        assert_eq!(r.witness_pair, (0, 3));
    }

    #[test]
    fn disconnected_is_infinite() {
        let g = graph(&SQUARE, &[(0, 1), (2, 3)]);
        let r = dilation(&g).unwrap();
        assert_eq!(r.global, DilationValue::Infinite);
        assert_eq!(r.witness_pair, (0, 2));
        assert_eq!(dilation_pair(&g, 1, 3).unwrap(), DilationValue::Infinite);
    }

    #[test]
    fn errors() {
        let g = graph(&[(0, 0)], &[]);
        assert_eq!(dilation(&g), Err(Error::TooFewVertices));
        let g = graph(&SQUARE, &[(0, 1)]);
        assert_eq!(dilation_pair(&g, 1, 1), Err(Error::SamePair));
        assert!(matches!(dilation_pair(&g, 0, 9), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn matrix_is_symmetric_with_unit_diagonal() {
        let g = graph(&SQUARE, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let m = dilation_matrix(&g, Exec::Sequential).unwrap().per_pair.unwrap();
        for (u, row) in m.iter().enumerate() {
            assert!(row[u].contains(1.0));
            for (v, value) in row.iter().enumerate() {
                assert!(value.overlaps(&m[v][u]));
            }
        }
    }

    #[test]
    fn huge_coordinates_escalate_to_rationals() {
        let big = Rational::pow10(200);
        let pts = PointSet::new(vec![
            Point::new(Rational::zero(), Rational::zero()),
            Point::new(big.clone(), Rational::zero()),
            Point::new(big.clone(), big.clone()),
        ])
        .unwrap();
        let g = GeometricGraph::build(pts, &[(0, 1), (1, 2)]).unwrap();
        let r = dilation(&g).unwrap();
        assert!(r.global.contains(std::f64::consts::SQRT_2));
        assert!(r.global.width() <= RESOLUTION);
    }

    #[test]
    fn min_dilation_small_examples() {
        let acute =
            PointSet::new(vec![Point::from_ints(0, 0), Point::from_ints(4, 0), Point::from_ints(2, 3)]).unwrap();
        let r = min_dilation_lgg(&acute, 100).unwrap();
        assert_eq!(r.best.edge_count(), 3);
        assert!(r.dilation.contains(1.0));
        assert!(decision_dilation(&acute, Some(&Rational::one())).unwrap());

        let line = PointSet::new(vec![Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(2, 0)]).unwrap();
        let r = min_dilation_lgg(&line, 100).unwrap();
        assert_eq!(r.best.edge_pairs(), vec![(0, 1), (1, 2)]);
        assert!(r.dilation.contains(1.0));
    }

    #[test]
    fn decision_thresholds() {
        let square = PointSet::new(SQUARE.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap();
        assert!(!decision_dilation(&square, Some(&Rational::one())).unwrap());
        assert!(decision_dilation(&square, Some(&Rational::new(15, 10))).unwrap());
        assert!(!decision_dilation(&square, Some(&Rational::new(14, 10))).unwrap());
        assert!(decision_dilation(&square, None).unwrap());
    }

    #[test]
    fn too_many_points() {
        let pts = PointSet::new((0..13).map(|i| Point::from_ints(i, i * i)).collect()).unwrap();
        assert!(matches!(min_dilation_lgg(&pts, 10), Err(Error::TooManyPoints { n: 13, limit: 12 })));
    }
}
