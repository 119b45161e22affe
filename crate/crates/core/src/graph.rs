//! Embedded undirected graphs over exact point sets.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::rational::Rational;

/// Pairwise-distinct points, addressed by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p, i);
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.points
    }

    pub fn into_vec(self) -> Vec<Point> {
        self.points
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;
    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Smaller endpoint.
    pub a: usize,
    /// Larger endpoint.
    pub b: usize,
    pub weight: Rational,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }
}

/// A point set plus an undirected simple edge set. Immutable once built;
/// edge indices are stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricGraph {
    points: PointSet,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl GeometricGraph {
    /// Builds a graph with unit weights.
    pub fn build(points: PointSet, pairs: &[(usize, usize)]) -> Result<Self> {
        let weighted: Vec<_> = pairs.iter().map(|&(a, b)| (a, b, Rational::one())).collect();
        Self::build_weighted(points, weighted)
    }

    pub fn build_weighted(points: PointSet, pairs: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let n = points.len();
        let mut edges = Vec::with_capacity(pairs.len());
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); n];
        for (a, b, weight) in pairs {
            for idx in [a, b] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, len: n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { index: a });
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            if weight.is_negative() {
                return Err(Error::NegativeWeight { a, b });
            }
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge { a, b });
            }
            adjacency[a].push(edges.len());
            adjacency[b].push(edges.len());
            edges.push(Edge { a, b, weight });
        }
        Ok(GeometricGraph { points, edges, adjacency })
    }

    /// Every pair of points joined, unit weights.
    pub fn complete(points: PointSet) -> Self {
        let n = points.len();
        let pairs: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::build(points, &pairs).expect("complete graph pairs are valid")
    }

    /// The spanning subgraph on the given edge indices (order preserved).
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Self {
        let pairs = edge_ids
            .iter()
            .map(|&e| {
                let edge = &self.edges[e];
                (edge.a, edge.b, edge.weight.clone())
            })
            .collect();
        Self::build_weighted(self.points.clone(), pairs).expect("subgraph of a valid graph")
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.points[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Incident edge indices of `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.vertex_count() {
            return Err(Error::IndexOutOfRange { index: v, len: self.vertex_count() });
        }
        Ok(self.adjacency[v].iter().map(|&e| self.edges[e].other(v)).collect())
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count() {
            return None;
        }
        self.adjacency[u].iter().copied().find(|&e| self.edges[e].other(u) == v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.find_edge(u, v).is_some()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(Edge::endpoints).collect()
    }
}

pub fn build_graph(points: PointSet, edge_pairs: &[(usize, usize)]) -> Result<GeometricGraph> {
    GeometricGraph::build(points, edge_pairs)
}

pub fn neighbors(g: &GeometricGraph, v: usize) -> Result<Vec<usize>> {
    g.neighbors(v)
}

pub fn complete_graph(points: PointSet) -> GeometricGraph {
    GeometricGraph::complete(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collinear3() -> PointSet {
        PointSet::new(vec![Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(2, 0)]).unwrap()
    }

    fn corners(n: usize) -> PointSet {
        PointSet::new((0..n).map(|i| Point::from_ints(i as i64, (i * i) as i64)).collect()).unwrap()
    }

    #[test]
    fn path_graph_degrees() {
        let g = build_graph(collinear3(), &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        let deg: Vec<_> = (0..3).map(|v| g.degree(v)).collect();
        assert_eq!(deg, vec![1, 2, 1]);
        let mut nb = neighbors(&g, 1).unwrap();
        nb.sort();
        assert_eq!(nb, vec![0, 2]);
    }

    #[test]
    fn structural_errors() {
        assert_eq!(build_graph(collinear3(), &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge { a: 0, b: 1 }));
        assert_eq!(build_graph(collinear3(), &[(0, 0)]), Err(Error::SelfLoop { index: 0 }));
        assert_eq!(build_graph(collinear3(), &[(0, 3)]), Err(Error::IndexOutOfRange { index: 3, len: 3 }));
        assert_eq!(
            PointSet::new(vec![Point::from_ints(1, 1), Point::from_ints(0, 0), Point::from_ints(1, 1)]),
            Err(Error::DuplicatePoint { first: 0, second: 2 })
        );
    }

    #[test]
    fn canonical_orientation() {
        let g = build_graph(collinear3(), &[(2, 1)]).unwrap();
        assert_eq!(g.edge(0).endpoints(), (1, 2));
    }

    #[test]
    fn neighbors_of_isolated_and_complete() {
        let g = build_graph(collinear3(), &[(0, 1)]).unwrap();
        assert!(neighbors(&g, 2).unwrap().is_empty());
        assert!(neighbors(&g, 3).is_err());
        let k4 = complete_graph(corners(4));
        for v in 0..4 {
            let mut nb = k4.neighbors(v).unwrap();
            nb.sort();
            let expected: Vec<_> = (0..4).filter(|&u| u != v).collect();
            assert_eq!(nb, expected);
        }
    }

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph(corners(1)).edge_count(), 0);
        assert_eq!(complete_graph(corners(4)).edge_count(), 6);
        assert_eq!(complete_graph(corners(10)).edge_count(), 45);
    }

    #[test]
    fn degree_sum_and_adjacency_consistency() {
        let g = complete_graph(corners(7));
        let sum: usize = (0..7).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.edge_count());
        for (e, edge) in g.edges().iter().enumerate() {
            assert!(g.incident(edge.a).contains(&e));
            assert!(g.incident(edge.b).contains(&e));
        }
    }
}
