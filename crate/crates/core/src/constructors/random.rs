//! Seeded random and stress generators.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{GeometricGraph, PointSet};
use crate::rational::Rational;

use super::reduction::{CnfFormula, Literal};

/// Axis-aligned box `[min_x, max_x] × [min_y, max_y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub min_x: Rational,
    pub min_y: Rational,
    pub max_x: Rational,
    pub max_y: Rational,
}

impl BoundingBox {
    pub fn new(min_x: Rational, min_y: Rational, max_x: Rational, max_y: Rational) -> Result<Self> {
        if min_x >= max_x || min_y >= max_y {
            return Err(Error::BadParameter("bounding box must have positive width and height".into()));
        }
        Ok(BoundingBox { min_x, min_y, max_x, max_y })
    }

    pub fn unit() -> Self {
        BoundingBox { min_x: Rational::zero(), min_y: Rational::zero(), max_x: Rational::one(), max_y: Rational::one() }
    }
}

/// Sampling resolution per axis.
const GRID: i64 = 1 << 20;

/// `n` distinct points on a `2^20 × 2^20` lattice inside `bbox`, deterministic for `seed`.
pub fn gen_random_points(n: usize, seed: u64, bbox: &BoundingBox) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(n);
    let mut cells = Vec::with_capacity(n);
    while cells.len() < n {
        let cell = (rng.gen_range(0..=GRID), rng.gen_range(0..=GRID));
        if seen.insert(cell) {
            cells.push(cell);
        }
    }
    let width = &bbox.max_x - &bbox.min_x;
    let height = &bbox.max_y - &bbox.min_y;
    let points = cells
        .into_iter()
        .map(|(i, j)| {
            Point::new(&bbox.min_x + &width * Rational::new(i, GRID), &bbox.min_y + &height * Rational::new(j, GRID))
        })
        .collect();
    PointSet::new(points)
}

/// Integer lattice `cols × rows` with all axis-aligned unit edges.
pub fn gen_unit_distance_grid(rows: usize, cols: usize) -> Result<GeometricGraph> {
    if rows == 0 || cols == 0 {
        return Err(Error::BadParameter("rows and cols must be at least 1".into()));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let points = (0..rows).flat_map(|r| (0..cols).map(move |c| Point::from_ints(c as i64, r as i64))).collect();
    let mut pairs = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                pairs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    GeometricGraph::build(PointSet::new(points)?, &pairs)
}

const CELL: i64 = 1024;
/// Cells scanned around a point; see [`gen_stratified_gabriel`].
const REACH: i64 = 12;

/// Gabriel graph of one uniform random point per cell of a `cols × rows`
/// grid of side-1024 cells, built in near-linear time.
///
/// A disk of radius `4√2·1024` or more centered in the grid contains a square
/// of side `8·1024` whose intersection with the grid holds at least three whole
/// cells (or the grid is at most 3×3 and every pair is short anyway), hence a
/// third point. Gabriel edges are therefore shorter than `8√2·1024 < 12·1024`
/// and only nearby cells need scanning. Arithmetic is exact on integers.
pub fn gen_stratified_gabriel(cols: usize, rows: usize, seed: u64) -> Result<GeometricGraph> {
    if cols == 0 || rows == 0 {
        return Err(Error::BadParameter("cols and rows must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords: Vec<(i64, i64)> = (0..rows)
        .flat_map(|r| (0..cols).map(move |c| (c, r)))
        .map(|(c, r)| (c as i64 * CELL + rng.gen_range(0..CELL), r as i64 * CELL + rng.gen_range(0..CELL)))
        .collect();
    let cell_of = |c: i64, r: i64| -> Option<usize> {
        (c >= 0 && r >= 0 && (c as usize) < cols && (r as usize) < rows).then(|| r as usize * cols + c as usize)
    };
    let gauge = |u: (i64, i64), v: (i64, i64), w: (i64, i64)| (u.0 - w.0) * (v.0 - w.0) + (u.1 - w.1) * (v.1 - w.1);
    let max_len2 = (REACH * CELL) * (REACH * CELL);
    // a disk of diameter below REACH cells stays within `half` cells of its center's cell
    let half = REACH / 2 + 1;
    let mut blockers: Vec<(i64, i64)> = (-half..=half).flat_map(|dr| (-half..=half).map(move |dc| (dc, dr))).collect();
    blockers.sort_by_key(|&(dc, dr)| (dc * dc + dr * dr, dr, dc));
    let mut pairs = Vec::new();
    for a in 0..coords.len() {
        let (ca, ra) = ((a % cols) as i64, (a / cols) as i64);
        let pa = coords[a];
        for dr in -REACH..=REACH {
            for dc in -REACH..=REACH {
                let Some(b) = cell_of(ca + dc, ra + dr) else { continue };
                if b <= a {
                    continue;
                }
                let pb = coords[b];
                let len2 = (pa.0 - pb.0).pow(2) + (pa.1 - pb.1).pow(2);
                if len2 >= max_len2 {
                    continue;
                }
                let (mc, mr) = (((pa.0 + pb.0) / 2) / CELL, ((pa.1 + pb.1) / 2) / CELL);
                let blocked = blockers.iter().any(|&(ec, er)| {
                    cell_of(mc + ec, mr + er).is_some_and(|w| w != a && w != b && gauge(pa, pb, coords[w]) <= 0)
                });
                if !blocked {
                    pairs.push((a, b));
                }
            }
        }
    }
    let points = coords.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect();
    GeometricGraph::build(PointSet::new(points)?, &pairs)
}

/// Random 3-literal clauses over distinct variables.
pub fn gen_random_cnf(num_vars: usize, num_clauses: usize, seed: u64) -> Result<CnfFormula> {
    if num_vars < 3 {
        return Err(Error::BadParameter("need at least 3 variables".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars: Vec<usize> = (0..num_vars).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            let mut picked: Vec<usize> = vars.choose_multiple(&mut rng, 3).copied().collect();
            picked.sort_unstable();
            [0, 1, 2].map(|i| Literal { var: picked[i], negated: rng.gen_bool(0.5) })
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}

/// Random formula where every variable occurs in exactly four clauses.
pub fn gen_random_max34(num_vars: usize, seed: u64) -> Result<CnfFormula> {
    if num_vars < 3 || !num_vars.is_multiple_of(3) {
        return Err(Error::BadParameter("variable count must be a positive multiple of 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slots: Vec<usize> = (0..num_vars).flat_map(|v| [v; 4]).collect();
    loop {
        slots.shuffle(&mut rng);
        let ok = slots.chunks(3).all(|c| c[0] != c[1] && c[1] != c[2] && c[0] != c[2]);
        if ok {
            break;
        }
    }
    let clauses =
        slots.chunks(3).map(|c| [0, 1, 2].map(|i| Literal { var: c[i], negated: rng.gen_bool(0.5) })).collect();
    let f = CnfFormula::new(num_vars, clauses)?;
    f.check_max34()?;
    Ok(f)
}

/// Rational on the grid `1/scale`, used to keep generated parameters small.
pub(crate) fn grid_scale() -> BigInt {
    BigInt::from(1u64 << 48)
}
