//! Greedy maximum-weight GLGG heuristic with a swap-based local search.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::conflict::ConflictGraph;
use super::SolveResult;

/// Picks nodes by weight (heaviest first), then fewest live conflicts, then a
/// seeded random rank; afterwards applies 1-for-1 and 2-for-1 improving swaps
/// until none remains. Never claims optimality.
pub fn max_glgg_greedy(cg: &ConflictGraph, seed: u64) -> SolveResult {
    let m = cg.node_count();
    let mut rank: Vec<usize> = (0..m).collect();
    rank.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut alive = vec![true; m];
    let mut live_degree: Vec<usize> = (0..m).map(|v| cg.degree(v)).collect();
    let mut chosen = vec![false; m];
    loop {
        let pick = (0..m).filter(|&v| alive[v]).min_by(|&a, &b| {
            cg.weight(b).cmp(cg.weight(a)).then(live_degree[a].cmp(&live_degree[b])).then(rank[a].cmp(&rank[b]))
        });
        let Some(v) = pick else { break };
        chosen[v] = true;
        let mut removed = vec![v];
        removed.extend(cg.neighbors(v).iter().copied().filter(|&u| alive[u]));
        for &r in &removed {
            alive[r] = false;
        }
        for &r in &removed {
            for &u in cg.neighbors(r) {
                live_degree[u] = live_degree[u].saturating_sub(1);
            }
        }
    }

    let mut nodes_explored = 0u64;
    while improve(cg, &mut chosen) {
        nodes_explored += 1;
    }
    let chosen: Vec<usize> = (0..m).filter(|&v| chosen[v]).collect();
    let total_weight = cg.total_weight(&chosen);
    SolveResult { chosen, total_weight, optimal: false, nodes_explored }
}

/// Applies the first strictly improving move found; false at a local optimum.
fn improve(cg: &ConflictGraph, chosen: &mut [bool]) -> bool {
    let m = cg.node_count();
    let tight: Vec<usize> = (0..m).map(|x| cg.neighbors(x).iter().filter(|&&u| chosen[u]).count()).collect();
    if let Some(x) = (0..m).find(|&x| !chosen[x] && tight[x] == 0) {
        chosen[x] = true;
        return true;
    }
    for v in (0..m).filter(|&v| chosen[v]) {
        let candidates: Vec<usize> = cg.neighbors(v).iter().copied().filter(|&x| !chosen[x] && tight[x] == 1).collect();
        if let Some(&x) = candidates.iter().find(|&&x| cg.weight(x) > cg.weight(v)) {
            chosen[v] = false;
            chosen[x] = true;
            return true;
        }
        for (i, &a) in candidates.iter().enumerate() {
            for &b in &candidates[i + 1..] {
                if cg.neighbors(a).binary_search(&b).is_err() && cg.weight(a) + cg.weight(b) > *cg.weight(v) {
                    chosen[v] = false;
                    chosen[a] = true;
                    chosen[b] = true;
                    return true;
                }
            }
        }
    }
    false
}
