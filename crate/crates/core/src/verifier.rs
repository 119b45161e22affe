//! Locally-Gabriel verification by angular sorting.
//!
//! Around each vertex the neighbors are sorted counterclockwise; if any two
//! incident edges conflict then some pair adjacent in that cyclic order
//! conflicts too, so only consecutive pairs (including the wrap-around pair)
//! need checking. Total cost is `O(|E| log |V| + |V|)` predicate calls.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{angular_cmp, offsets_conflict, Vector};
use crate::graph::GeometricGraph;
use crate::par::Exec;
use crate::rational::Rational;

/// Neighbors of `center` in counterclockwise order starting from the positive x-axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngularRing {
    pub center: usize,
    pub ring: Vec<usize>,
}

/// Edges `(shared, first)` and `(shared, second)` conflict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Violation {
    pub shared: usize,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub witness: Option<Violation>,
}

struct RingEntry {
    vertex: usize,
    offset: Vector,
    norm2: Rational,
}

fn sorted_entries(g: &GeometricGraph, u: usize) -> Vec<RingEntry> {
    let center = g.point(u);
    let mut entries: Vec<RingEntry> = g
        .incident(u)
        .iter()
        .map(|&e| {
            let vertex = g.edge(e).other(u);
            let offset = g.point(vertex).sub(center);
            let norm2 = offset.norm2();
            RingEntry { vertex, offset, norm2 }
        })
        .collect();
    entries.sort_by(|a, b| angular_cmp(&a.offset, &b.offset));
    entries
}

fn entries_conflict(a: &RingEntry, b: &RingEntry) -> bool {
    offsets_conflict(&a.offset, &a.norm2, &b.offset, &b.norm2)
}

pub fn angular_ring(g: &GeometricGraph, u: usize) -> Result<AngularRing> {
    if u >= g.vertex_count() {
        return Err(Error::IndexOutOfRange { index: u, len: g.vertex_count() });
    }
    Ok(AngularRing { center: u, ring: sorted_entries(g, u).into_iter().map(|e| e.vertex).collect() })
}

/// Conflicting consecutive ring pairs at `u`, in ring order. A ring of two
/// contributes one pair, smaller rings none.
pub fn consecutive_conflicts(g: &GeometricGraph, u: usize) -> Vec<Violation> {
    let entries = sorted_entries(g, u);
    consecutive_pairs(entries.len())
        .filter(|&(i, j)| entries_conflict(&entries[i], &entries[j]))
        .map(|(i, j)| Violation { shared: u, first: entries[i].vertex, second: entries[j].vertex })
        .collect()
}

fn consecutive_pairs(len: usize) -> impl Iterator<Item = (usize, usize)> {
    let count = match len {
        0 | 1 => 0,
        2 => 1,
        _ => len,
    };
    (0..count).map(move |i| (i, (i + 1) % len))
}

fn first_consecutive_conflict(g: &GeometricGraph, u: usize) -> Option<Violation> {
    if g.degree(u) < 2 {
        return None;
    }
    let entries = sorted_entries(g, u);
    consecutive_pairs(entries.len())
        .find(|&(i, j)| entries_conflict(&entries[i], &entries[j]))
        .map(|(i, j)| Violation { shared: u, first: entries[i].vertex, second: entries[j].vertex })
}

pub fn verify_lgg(g: &GeometricGraph) -> Verdict {
    verify_lgg_with(g, Exec::default())
}

/// Same verdict and witness for every [`Exec`]: the witness is the first
/// violation in ascending vertex order, then ring order.
pub fn verify_lgg_with(g: &GeometricGraph, exec: Exec) -> Verdict {
    let witness = exec.find_first(g.vertex_count(), |u| first_consecutive_conflict(g, u)).map(|(_, v)| v);
    Verdict { valid: witness.is_none(), witness }
}

pub fn all_conflicting_pairs(g: &GeometricGraph) -> Vec<Violation> {
    all_conflicting_pairs_with(g, Exec::default())
}

pub fn all_conflicting_pairs_with(g: &GeometricGraph, exec: Exec) -> Vec<Violation> {
    exec.map_range(g.vertex_count(), |u| {
        let entries = sorted_entries(g, u);
        let mut out = Vec::new();
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if entries_conflict(&entries[i], &entries[j]) {
                    out.push(Violation { shared: u, first: entries[i].vertex, second: entries[j].vertex });
                }
            }
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}
