//! The two-slanted-lines ladder and its augmented variant.
//!
//! `n/2` horizontal lines `1/√n` apart each carry two points, at abscissae
//! `(i−1)/n` and `r − (i−1)/n` on line `i`. Read vertically the points form
//! two slanted chains that approach each other going up.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{GeometricGraph, PointSet};
use crate::rational::Rational;

fn check_size(n: usize) -> Result<i64> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::BadParameter(format!("ladder size {n} must be even and at least 4")));
    }
    let root = (n as f64).sqrt().round() as usize;
    if root * root != n {
        return Err(Error::BadParameter(format!("ladder size {n} must be a perfect square")));
    }
    Ok(root as i64)
}

/// The smallest admissible half-width `1/(2n) + 3/2`.
pub fn ladder_min_r(n: usize) -> Rational {
    Rational::new(1, 2 * n as i64) + Rational::new(3, 2)
}

/// Points `p_1..p_n` (indices `0..n`), `p_{2i−1}` left and `p_{2i}` right on line `i`.
pub fn gen_ladder(n: usize, r: Option<Rational>) -> Result<PointSet> {
    let root = check_size(n)?;
    let min_r = ladder_min_r(n);
    let r = match r {
        Some(r) if r < min_r => {
            return Err(Error::BadParameter(format!("r = {r} is below the minimum {min_r}")));
        }
        Some(r) => r,
        None => min_r,
    };
    let mut points = Vec::with_capacity(n);
    for i in 0..n as i64 / 2 {
        let inset = Rational::new(i, n as i64);
        let y = Rational::new(i, root);
        points.push(Point::new(inset.clone(), y.clone()));
        points.push(Point::new(&r - &inset, y));
    }
    PointSet::new(points)
}

/// Vertex ids along the left and right chains, bottom to top.
pub fn ladder_chains(n: usize) -> (Vec<usize>, Vec<usize>) {
    ((0..n / 2).map(|i| 2 * i).collect(), (0..n / 2).map(|i| 2 * i + 1).collect())
}

/// Ladder points plus one outward point per consecutive chain pair, at the
/// pair's midpoint pushed perpendicularly away from the ladder by half the
/// pair's separation. Extra points follow the ladder points: left chain gaps
/// bottom to top, then right chain gaps.
pub fn gen_ladder_augmented(n: usize) -> Result<PointSet> {
    let base = gen_ladder(n, None)?;
    let (left, right) = ladder_chains(n);
    let half = Rational::new(1, 2);
    let mut points = base.into_vec();
    for (chain, outward_sign) in [(&left, -1i64), (&right, 1i64)] {
        for w in chain.windows(2) {
            let (p, q) = (&points[w[0]], &points[w[1]]);
            let d = q.sub(p);
            let mut perp = d.perp();
            if perp.x.signum() != Rational::from_integer(outward_sign).signum() {
                perp = perp.scale(&Rational::from_integer(-1));
            }
            let extra = p.midpoint(q).add(&perp.scale(&half));
            points.push(extra);
        }
    }
    PointSet::new(points)
}

/// A locally Gabriel graph on the augmented ladder: every chain pair is
/// joined through its outward point, and every horizontal rung is present.
#[derive(Clone, Debug)]
pub struct LadderWitness {
    pub graph: GeometricGraph,
    /// Edge ids of the outward detours.
    pub detours: Vec<usize>,
    /// Edge ids of the horizontal rungs.
    pub rungs: Vec<usize>,
}

pub fn gen_ladder_augmented_lgg(n: usize) -> Result<LadderWitness> {
    let points = gen_ladder_augmented(n)?;
    let (left, right) = ladder_chains(n);
    let mut pairs = Vec::new();
    let mut extra = n;
    for chain in [&left, &right] {
        for w in chain.windows(2) {
            pairs.push((w[0], extra));
            pairs.push((extra, w[1]));
            extra += 1;
        }
    }
    let detours = (0..pairs.len()).collect();
    let rung_start = pairs.len();
    pairs.extend((0..n / 2).map(|i| (2 * i, 2 * i + 1)));
    let rungs = (rung_start..pairs.len()).collect();
    Ok(LadderWitness { graph: GeometricGraph::build(points, &pairs)?, detours, rungs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::verify_lgg;

    #[test]
    fn ladder_four() {
        let p = gen_ladder(4, None).unwrap();
        let coords: Vec<(Rational, Rational)> = p.iter().map(|q| (q.x.clone(), q.y.clone())).collect();
        assert_eq!(
            coords,
            vec![
                (Rational::zero(), Rational::zero()),
                (Rational::new(13, 8), Rational::zero()),
                (Rational::new(1, 4), Rational::new(1, 2)),
                (Rational::new(11, 8), Rational::new(1, 2)),
            ]
        );
    }

    #[test]
    fn ladder_sixteen() {
        assert_eq!(ladder_min_r(16), Rational::new(49, 32));
        let p = gen_ladder(16, None).unwrap();
        let ys: std::collections::BTreeSet<_> = p.iter().map(|q| q.y.clone()).collect();
        assert_eq!(ys.len(), 8);
        assert_eq!(&p[2].y - &p[0].y, Rational::new(1, 4));
    }

    #[test]
    fn ladder_parameter_errors() {
        for n in [0, 2, 3, 6, 9, 10] {
            assert!(gen_ladder(n, None).is_err(), "{n}");
        }
        assert!(gen_ladder(4, Some(Rational::new(3, 2))).is_err());
        assert!(gen_ladder(4, Some(Rational::from_integer(2))).is_ok());
    }

    #[test]
    fn chain_spacing_is_order_inverse_sqrt_n() {
        for n in [4usize, 16, 36, 64, 100] {
            let p = gen_ladder(n, None).unwrap();
            let inv_sqrt_n2 = Rational::new(1, n as i64);
            let (left, right) = ladder_chains(n);
            for chain in [left, right] {
                for w in chain.windows(2) {
                    let d2 = p[w[0]].dist2(&p[w[1]]);
                    assert!(d2 >= &inv_sqrt_n2 * Rational::new(1, 4) && d2 <= &inv_sqrt_n2 * Rational::from_integer(4));
                }
            }
        }
    }

    #[test]
    fn augmented_counts() {
        assert_eq!(gen_ladder_augmented(4).unwrap().len(), 6);
        assert_eq!(gen_ladder_augmented(16).unwrap().len(), 30);
    }

    #[test]
    fn witness_is_lgg() {
        for n in [4, 16, 36] {
            let w = gen_ladder_augmented_lgg(n).unwrap();
            assert!(verify_lgg(&w.graph).valid, "n = {n}");
            assert_eq!(w.rungs.len(), n / 2);
        }
    }

    #[test]
    fn outward_points_lie_outside_the_ladder() {
        let p = gen_ladder_augmented(16).unwrap();
        for i in 16..23 {
            assert!(p[i].x < p[2 * (i - 16)].x);
        }
        for i in 23..30 {
            assert!(p[i].x > p[2 * (i - 23) + 1].x);
        }
    }
}
