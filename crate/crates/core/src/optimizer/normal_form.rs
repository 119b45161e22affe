use crate::constructors::ReductionInstance;

/// Rewrites a valid solution of a reduction instance so that every variable
/// vertex is covered: a variable whose literal already holds variable-vertex
/// edges gets its remaining vertices attached to that literal; otherwise the
/// literal with fewer clause edges drops them and takes all variable vertices.
/// The result is never smaller than the input.
pub fn fill_variable_slots(inst: &ReductionInstance, chosen: &[usize]) -> Vec<usize> {
    let g = &inst.graph;
    let mut member = vec![false; g.edge_count()];
    for &e in chosen {
        member[e] = true;
    }
    for (i, zs) in inst.variable_vertices.iter().enumerate() {
        let (pos, neg) = inst.literal_vertices[i];
        let holds =
            |lit: usize, member: &[bool]| zs.iter().filter(|&&z| member[g.find_edge(lit, z).expect("E2 edge")]).count();
        let (at_pos, at_neg) = (holds(pos, &member), holds(neg, &member));
        if at_pos + at_neg == zs.len() {
            continue;
        }
        let hub = if at_pos > 0 {
            pos
        } else if at_neg > 0 {
            neg
        } else {
            let clause_edges =
                |lit: usize| g.incident(lit).iter().copied().filter(|&e| inst.is_e1(e)).collect::<Vec<_>>();
            let held = |lit: usize| clause_edges(lit).into_iter().filter(|&e| member[e]).count();
            let hub = if held(neg) < held(pos) { neg } else { pos };
            for e in clause_edges(hub) {
                member[e] = false;
            }
            hub
        };
        let other = if hub == pos { neg } else { pos };
        for &z in zs {
            if !member[g.find_edge(other, z).expect("E2 edge")] {
                member[g.find_edge(hub, z).expect("E2 edge")] = true;
            }
        }
    }
    (0..g.edge_count()).filter(|&e| member[e]).collect()
}
