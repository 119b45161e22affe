//! Geometric graphs encoding 3-SAT and MAX-(3,4)-SAT formulas.
//!
//! Literal vertices sit on a vertical line `10⁻⁵` apart, conjugates adjacent.
//! Clause vertices lie on an arc of radius `n⁴` around the literal column's
//! midpoint, chord spacing `n/2`, strictly above the column. Each variable
//! gets a private arc of radius `10n⁴` around the midpoint of its two literal
//! vertices, chord spacing `n/4`, holding its variable vertices. `E1` joins
//! clause vertices to their literals and `E2` joins each literal pair to all
//! of its variable vertices.
//!
//! Arc points are exact rational points of the Pythagorean parameterization
//! `t ↦ ((1 − t²)/(1 + t²), 2t/(1 + t²))`; chords are within 1% of nominal.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{edges_conflict, Point};
use crate::graph::{GeometricGraph, PointSet};
use crate::rational::Rational;

use super::random::grid_scale;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    /// Zero-based variable index.
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }

    /// DIMACS-style signed one-based literal.
    pub fn to_dimacs(&self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }
}

/// A formula whose clauses each hold exactly three distinct variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var >= num_vars {
                    return Err(Error::BadFormula(format!("clause {j} uses variable {} of {num_vars}", lit.var + 1)));
                }
            }
            if clause[0].var == clause[1].var || clause[1].var == clause[2].var || clause[0].var == clause[2].var {
                return Err(Error::BadFormula(format!("clause {j} repeats a variable")));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.num_vars];
        for clause in &self.clauses {
            for lit in clause {
                occ[lit.var] += 1;
            }
        }
        occ
    }

    /// Every variable in exactly four clauses.
    pub fn check_max34(&self) -> Result<()> {
        for (v, count) in self.occurrences().into_iter().enumerate() {
            if count != 4 {
                return Err(Error::Shape(format!("variable {} occurs {count} times, expected 4", v + 1)));
            }
        }
        Ok(())
    }

    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        self.clauses.iter().filter(|c| c.iter().any(|l| l.eval(assignment))).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    /// `k + 1` variable vertices per variable.
    Sat3,
    /// Five variable vertices per variable, formula restricted to four occurrences.
    Max34,
}

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub formula: CnfFormula,
    pub graph: GeometricGraph,
    /// `(x_i, x'_i)` vertex ids per variable.
    pub literal_vertices: Vec<(usize, usize)>,
    /// `variable_vertices[i][j]` is `z_{i,j}`.
    pub variable_vertices: Vec<Vec<usize>>,
    pub clause_vertices: Vec<usize>,
    /// Clause-to-literal edge ids.
    pub e1: Vec<usize>,
    /// Literal-to-variable-vertex edge ids.
    pub e2: Vec<usize>,
    /// Optimum edge count: `(k+1)n + k` when satisfiable for [`ReductionKind::Sat3`];
    /// `5n + max satisfiable clauses` for [`ReductionKind::Max34`] (when computable).
    pub target: Option<usize>,
}

impl ReductionInstance {
    pub fn literal_vertex(&self, lit: Literal) -> usize {
        let (pos, neg) = self.literal_vertices[lit.var];
        if lit.negated {
            neg
        } else {
            pos
        }
    }

    pub fn is_e1(&self, e: usize) -> bool {
        e < self.e1.len()
    }

    /// The edge set an assignment induces: each variable's false literal takes
    /// all its variable vertices, and each satisfied clause keeps one edge to
    /// its first true literal.
    pub fn solution_from_assignment(&self, assignment: &[bool]) -> Vec<usize> {
        let g = &self.graph;
        let mut chosen = Vec::new();
        for (j, clause) in self.formula.clauses.iter().enumerate() {
            if let Some(lit) = clause.iter().find(|l| l.eval(assignment)) {
                let e = g.find_edge(self.clause_vertices[j], self.literal_vertex(*lit)).expect("E1 edge");
                chosen.push(e);
            }
        }
        for (i, zs) in self.variable_vertices.iter().enumerate() {
            let (pos, neg) = self.literal_vertices[i];
            let hub = if assignment[i] { neg } else { pos };
            chosen.extend(zs.iter().map(|&z| g.find_edge(hub, z).expect("E2 edge")));
        }
        chosen.sort_unstable();
        chosen
    }

    /// Reads a truth assignment off a solution: a variable is true when its
    /// positive literal vertex carries a clause edge, or when its negative
    /// literal vertex holds variable vertices.
    pub fn assignment_from_solution(&self, chosen: &[usize]) -> Vec<bool> {
        let mut value = vec![None; self.formula.num_vars];
        let side = |vertex: usize| {
            self.literal_vertices
                .iter()
                .enumerate()
                .find_map(|(i, &(p, n))| (vertex == p).then_some((i, true)).or((vertex == n).then_some((i, false))))
        };
        for &e in chosen.iter().filter(|&&e| self.is_e1(e)) {
            let edge = self.graph.edge(e);
            let lit = if side(edge.a).is_some() { edge.a } else { edge.b };
            if let Some((i, positive)) = side(lit) {
                value[i].get_or_insert(positive);
            }
        }
        for &e in chosen.iter().filter(|&&e| !self.is_e1(e)) {
            let edge = self.graph.edge(e);
            let lit = if side(edge.a).is_some() { edge.a } else { edge.b };
            if let Some((i, positive)) = side(lit) {
                value[i].get_or_insert(!positive);
            }
        }
        value.into_iter().map(|v| v.unwrap_or(false)).collect()
    }
}

pub fn gen_sat3_instance(f: &CnfFormula) -> Result<ReductionInstance> {
    build_instance(f, ReductionKind::Sat3, None)
}

/// `max_satisfied` fills the instance target `5n + max_satisfied`; pass the
/// formula's MAX-SAT optimum when known.
pub fn gen_max34_instance(f: &CnfFormula, max_satisfied: Option<usize>) -> Result<ReductionInstance> {
    f.check_max34().map_err(|e| Error::BadFormula(e.to_string()))?;
    build_instance(f, ReductionKind::Max34, max_satisfied)
}

fn build_instance(f: &CnfFormula, kind: ReductionKind, max_satisfied: Option<usize>) -> Result<ReductionInstance> {
    let f = CnfFormula::new(f.num_vars, f.clauses.clone())?;
    let n = f.num_vars;
    let k = f.clauses.len();
    if n < 3 || k == 0 {
        return Err(Error::BadFormula("need at least 3 variables and 1 clause".into()));
    }
    let slots = match kind {
        ReductionKind::Sat3 => k + 1,
        ReductionKind::Max34 => 5,
    };
    let spacing = Rational::pow10(-5);
    let n4 = Rational::from_integer((n as i64).pow(4));
    let t0 = Rational::new(1, 100);

    let mut points = Vec::with_capacity(2 * n + slots * n + k);
    for idx in 0..2 * n {
        points.push(Point::new(Rational::zero(), -(&spacing * Rational::from_integer(idx as i64))));
    }
    let literal_vertices: Vec<(usize, usize)> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();

    let mut variable_vertices = Vec::with_capacity(n);
    let var_radius = &n4 * Rational::from_integer(10);
    let var_chord = Rational::new(n as i64, 4);
    for &(pos, neg) in &literal_vertices {
        let center = points[pos].midpoint(&points[neg]);
        let arc = arc_points(&center, &var_radius, slots, &var_chord, &t0)?;
        let ids = (points.len()..points.len() + slots).collect();
        points.extend(arc);
        variable_vertices.push(ids);
    }

    let column_center = points[0].midpoint(&points[2 * n - 1]);
    let clause_arc = arc_points(&column_center, &n4, k, &Rational::new(n as i64, 2), &t0)?;
    let clause_vertices: Vec<usize> = (points.len()..points.len() + k).collect();
    points.extend(clause_arc);

    let mut pairs = Vec::with_capacity(3 * k + 2 * n * slots);
    for (j, clause) in f.clauses.iter().enumerate() {
        for lit in clause {
            let (pos, neg) = literal_vertices[lit.var];
            pairs.push((clause_vertices[j], if lit.negated { neg } else { pos }));
        }
    }
    for (i, zs) in variable_vertices.iter().enumerate() {
        let (pos, neg) = literal_vertices[i];
        for &z in zs {
            pairs.push((pos, z));
            pairs.push((neg, z));
        }
    }
    let graph = GeometricGraph::build(PointSet::new(points)?, &pairs)?;
    let e1 = (0..3 * k).collect();
    let e2 = (3 * k..pairs.len()).collect();
    let target = match kind {
        ReductionKind::Sat3 => Some((k + 1) * n + k),
        ReductionKind::Max34 => max_satisfied.map(|m| 5 * n + m),
    };
    Ok(ReductionInstance {
        kind,
        formula: f,
        graph,
        literal_vertices,
        variable_vertices,
        clause_vertices,
        e1,
        e2,
        target,
    })
}

/// `count` exact rational points counterclockwise on the circle of the given
/// radius, starting at parameter `t0` (above the center's horizontal), with
/// consecutive chords within 1% of `chord` and all points within 45° of horizontal.
fn arc_points(center: &Point, radius: &Rational, count: usize, chord: &Rational, t0: &Rational) -> Result<Vec<Point>> {
    let scale = grid_scale();
    let one = Rational::one();
    let two = Rational::from_integer(2);
    let step = chord / (&two * radius);
    let mut params = Vec::with_capacity(count);
    let mut t = t0.clone();
    for _ in 0..count {
        params.push(t.clone());
        let next = &t + &step * (&one + t.square());
        t = next.floor_to(&scale);
    }
    // tan(π/8) > 2/5
    if params.last().is_some_and(|t| *t >= Rational::new(2, 5)) {
        return Err(Error::BadParameter("arc does not fit within 45 degrees of horizontal".into()));
    }
    let lo = (chord * Rational::new(99, 100)).square();
    let hi = (chord * Rational::new(101, 100)).square();
    let points: Vec<Point> = params
        .iter()
        .map(|t| {
            let t2 = t.square();
            let denom = &one + &t2;
            let x = radius * ((&one - &t2) / &denom);
            let y = radius * ((&two * t) / &denom);
            Point::new(&center.x + x, &center.y + y)
        })
        .collect();
    for w in points.windows(2) {
        let d2 = w[0].dist2(&w[1]);
        if d2 < lo || d2 > hi {
            return Err(Error::BadParameter("arc chord spacing off by more than 1%".into()));
        }
    }
    Ok(points)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyViolation {
    pub property: u8,
    pub detail: String,
}

/// Checks the five structural conflict properties the reduction relies on:
///
/// 1. both edges into a variable vertex conflict;
/// 2. the edges at a clause vertex pairwise conflict;
/// 3. a literal's variable-vertex edges are pairwise conflict-free;
/// 4. a literal's clause edges are pairwise conflict-free;
/// 5. at a literal, every variable-vertex edge conflicts with every clause edge.
pub fn check_conflict_properties(inst: &ReductionInstance) -> Vec<PropertyViolation> {
    let g = &inst.graph;
    let mut out = Vec::new();
    let conflict = |u: usize, v: usize, w: usize| edges_conflict(g.point(u), g.point(v), g.point(w)).unwrap_or(false);
    let literal_set: HashSet<usize> = inst.literal_vertices.iter().flat_map(|&(p, n)| [p, n]).collect();

    for (i, zs) in inst.variable_vertices.iter().enumerate() {
        let (pos, neg) = inst.literal_vertices[i];
        for (j, &z) in zs.iter().enumerate() {
            if !conflict(z, pos, neg) {
                out.push(PropertyViolation { property: 1, detail: format!("variable {} slot {}", i + 1, j + 1) });
            }
        }
    }
    for (j, &c) in inst.clause_vertices.iter().enumerate() {
        let nbrs = g.neighbors(c).expect("clause vertex");
        for a in 0..nbrs.len() {
            for b in a + 1..nbrs.len() {
                if !conflict(c, nbrs[a], nbrs[b]) {
                    out.push(PropertyViolation { property: 2, detail: format!("clause {}", j + 1) });
                }
            }
        }
    }
    for &lit in &literal_set {
        let nbrs = g.neighbors(lit).expect("literal vertex");
        let (clauses, vars): (Vec<usize>, Vec<usize>) =
            nbrs.into_iter().partition(|v| inst.clause_vertices.contains(v));
        let pairwise_free =
            |set: &[usize]| (0..set.len()).all(|a| (a + 1..set.len()).all(|b| !conflict(lit, set[a], set[b])));
        if !pairwise_free(&vars) {
            out.push(PropertyViolation { property: 3, detail: format!("literal vertex {lit}") });
        }
        if !pairwise_free(&clauses) {
            out.push(PropertyViolation { property: 4, detail: format!("literal vertex {lit}") });
        }
        for &z in &vars {
            for &c in &clauses {
                if !conflict(lit, z, c) {
                    out.push(PropertyViolation { property: 5, detail: format!("literal vertex {lit}: {z} vs {c}") });
                }
            }
        }
    }
    out.sort_by(|a, b| (a.property, &a.detail).cmp(&(b.property, &b.detail)));
    out
}
