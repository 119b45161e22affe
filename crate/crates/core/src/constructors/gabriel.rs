use crate::geometry::dot_gauge;
use crate::graph::{GeometricGraph, PointSet};
use crate::par::Exec;

/// Gabriel graph: `(u, v)` is an edge iff no third point lies in the closed
/// disk with diameter `uv`. Cubic pair-versus-all scan.
pub fn gabriel_graph(points: &PointSet) -> GeometricGraph {
    gabriel_graph_with(points, Exec::default())
}

pub fn gabriel_graph_with(points: &PointSet, exec: Exec) -> GeometricGraph {
    let n = points.len();
    let rows = exec.map_range(n, |a| {
        let pa = points.get(a);
        (a + 1..n)
            .filter(|&b| {
                let pb = points.get(b);
                (0..n).all(|w| w == a || w == b || dot_gauge(pa, pb, points.get(w)).is_positive())
            })
            .map(|b| (a, b))
            .collect::<Vec<_>>()
    });
    let pairs: Vec<_> = rows.into_iter().flatten().collect();
    GeometricGraph::build(points.clone(), &pairs).expect("gabriel pairs are valid")
}
