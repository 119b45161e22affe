use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::GeometricGraph;
use crate::rational::Rational;
use crate::verifier::all_conflicting_pairs;

use super::bitset::BitSet;

/// Nodes are candidate edges, arcs join conflicting pairs. The independent
/// sets are exactly the locally-Gabriel edge subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    weights: Vec<Rational>,
    arcs: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    /// Arcs are deduplicated and stored as `(min, max)`.
    pub fn new(weights: Vec<Rational>, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let m = weights.len();
        if let Some(i) = weights.iter().position(Rational::is_negative) {
            return Err(Error::BadParameter(format!("node {i} has a negative weight")));
        }
        let mut set = BTreeSet::new();
        for (a, b) in arcs {
            if a >= m || b >= m {
                return Err(Error::IndexOutOfRange { index: a.max(b), len: m });
            }
            if a == b {
                return Err(Error::SelfLoop { index: a });
            }
            set.insert((a.min(b), a.max(b)));
        }
        let arcs: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); m];
        for &(a, b) in &arcs {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(ConflictGraph { weights, arcs, adjacency })
    }

    pub fn node_count(&self) -> usize {
        self.weights.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn with_weights(&self, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != self.node_count() {
            return Err(Error::BadParameter("weight vector length differs from node count".into()));
        }
        Self::new(weights, self.arcs.iter().copied())
    }

    pub fn with_unit_weights(&self) -> Self {
        self.with_weights(vec![Rational::one(); self.node_count()]).expect("unit weights")
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.node_count()];
        for &v in set {
            member[v] = true;
        }
        set.iter().all(|&v| self.adjacency[v].iter().all(|&u| !member[u]))
    }

    pub fn total_weight(&self, set: &[usize]) -> Rational {
        set.iter().map(|&v| &self.weights[v]).sum()
    }

    pub(crate) fn adjacency_bits(&self) -> Vec<BitSet> {
        self.adjacency
            .iter()
            .map(|list| {
                let mut b = BitSet::new(self.node_count());
                for &u in list {
                    b.insert(u);
                }
                b
            })
            .collect()
    }
}

/// One node per edge of `g` (same index, same weight), one arc per conflicting incident pair.
pub fn build_conflict_graph(g: &GeometricGraph) -> ConflictGraph {
    let arcs = all_conflicting_pairs(g).into_iter().map(|v| {
        let a = g.find_edge(v.shared, v.first).expect("violation edge");
        let b = g.find_edge(v.shared, v.second).expect("violation edge");
        (a, b)
    });
    let weights = g.edges().iter().map(|e| e.weight.clone()).collect();
    ConflictGraph::new(weights, arcs).expect("conflict arcs are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::graph::PointSet;

    fn square(diagonals: bool) -> GeometricGraph {
        let pts = PointSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ])
        .unwrap();
        let mut pairs = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        if diagonals {
            pairs.extend([(0, 2), (1, 3)]);
        }
        GeometricGraph::build(pts, &pairs).unwrap()
    }

    #[test]
    fn square_examples() {
        let cg = build_conflict_graph(&square(true));
        assert_eq!(cg.node_count(), 6);
        assert_eq!(cg.arcs().len(), 8);
        assert!(cg.arcs().iter().all(|&(a, b)| (a < 4) != (b < 4)));
        let cg = build_conflict_graph(&square(false));
        assert_eq!((cg.node_count(), cg.arcs().len()), (4, 0));
    }

    #[test]
    fn collinear_triangle() {
        let pts = PointSet::new(vec![Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(2, 0)]).unwrap();
        let g = GeometricGraph::complete(pts);
        let cg = build_conflict_graph(&g);
        let long = g.find_edge(0, 2).unwrap();
        let mut expected = vec![
            (g.find_edge(0, 1).unwrap().min(long), g.find_edge(0, 1).unwrap().max(long)),
            (g.find_edge(1, 2).unwrap().min(long), g.find_edge(1, 2).unwrap().max(long)),
        ];
        expected.sort();
        assert_eq!(cg.arcs(), expected.as_slice());
    }

    #[test]
    fn construction_errors() {
        assert!(ConflictGraph::new(vec![Rational::one(); 2], [(0, 2)]).is_err());
        assert!(ConflictGraph::new(vec![Rational::one(); 2], [(1, 1)]).is_err());
        assert!(ConflictGraph::new(vec![Rational::from_integer(-1)], []).is_err());
        let cg = ConflictGraph::new(vec![Rational::one(); 3], [(1, 0), (0, 1)]).unwrap();
        assert_eq!(cg.arcs(), &[(0, 1)]);
    }
}
