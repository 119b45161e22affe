//! Enumeration of maximal independent sets (Bron–Kerbosch on the complement, with pivoting).

use super::bitset::BitSet;
use super::conflict::ConflictGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSets {
    /// Sorted node lists, in lexicographic order.
    pub sets: Vec<Vec<usize>>,
    /// Set when more than `cap` maximal sets exist; `sets` then holds a partial list.
    pub truncated: bool,
}

struct Enumerator {
    non_adjacent: Vec<BitSet>,
    cap: usize,
    sets: Vec<Vec<usize>>,
    truncated: bool,
}

impl Enumerator {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet) {
        if self.truncated {
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                if self.sets.len() == self.cap {
                    self.truncated = true;
                } else {
                    let mut set = r.clone();
                    set.sort_unstable();
                    self.sets.push(set);
                }
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (p.intersection_len(&self.non_adjacent[u]), std::cmp::Reverse(u)))
            .expect("nonempty");
        let mut branch = p.clone();
        branch.difference_with(&self.non_adjacent[pivot]);
        for v in branch.iter() {
            let mut p2 = p.clone();
            p2.intersect_with(&self.non_adjacent[v]);
            let mut x2 = x.clone();
            x2.intersect_with(&self.non_adjacent[v]);
            r.push(v);
            self.expand(r, p2, x2);
            r.pop();
            if self.truncated {
                return;
            }
            p.remove(v);
            x.insert(v);
        }
    }
}

/// All maximal independent sets of `cg`, stopping once more than `cap` are found.
pub fn enumerate_maximal_lggs(cg: &ConflictGraph, cap: usize) -> MaximalSets {
    let m = cg.node_count();
    let non_adjacent = cg
        .adjacency_bits()
        .into_iter()
        .enumerate()
        .map(|(v, adj)| {
            let mut b = BitSet::full(m);
            b.difference_with(&adj);
            b.remove(v);
            b
        })
        .collect();
    let mut e = Enumerator { non_adjacent, cap, sets: Vec::new(), truncated: false };
    e.expand(&mut Vec::new(), BitSet::full(m), BitSet::new(m));
    e.sets.sort();
    MaximalSets { sets: e.sets, truncated: e.truncated }
}
