//! Exact planar points and the diametral-disk predicates behind every
//! Gabriel and locally-Gabriel decision.
//!
//! Containment is closed: a point on the boundary circle of the disk with
//! diameter `uv` counts as inside. All decisions are signs of exact rationals.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn sub(&self, other: &Point) -> Vector {
        Vector { x: &self.x - &other.x, y: &self.y - &other.y }
    }

    pub fn add(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn dist2(&self, other: &Point) -> Rational {
        self.sub(other).norm2()
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Rational::new(1, 2);
        Point::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }
}

/// A difference of two points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    pub x: Rational,
    pub y: Rational,
}

impl Vector {
    pub fn dot(&self, other: &Vector) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Vector) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, k: &Rational) -> Vector {
        Vector { x: &self.x * k, y: &self.y * k }
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Vector {
        Vector { x: -&self.y, y: self.x.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Half-plane class for angular sorting: 0 for angles in `[0, π)`, 1 for `[π, 2π)`.
    fn half(&self) -> u8 {
        if self.y.is_positive() || (self.y.is_zero() && self.x.is_positive()) {
            0
        } else {
            1
        }
    }
}

/// `(u − w)·(v − w)`. Non-positive exactly when `w` lies in the closed disk with diameter `uv`.
pub fn dot_gauge(u: &Point, v: &Point, w: &Point) -> Rational {
    u.sub(w).dot(&v.sub(w))
}

pub fn in_closed_diametral_disk(u: &Point, v: &Point, w: &Point) -> Result<bool> {
    if u == v {
        return Err(Error::DegenerateEdge);
    }
    if w == u || w == v {
        return Err(Error::EndpointQuery);
    }
    Ok(!dot_gauge(u, v, w).is_positive())
}

/// Whether edges `(u, v)` and `(u, w)` can not coexist in a locally Gabriel graph.
pub fn edges_conflict(u: &Point, v: &Point, w: &Point) -> Result<bool> {
    if u == v || u == w || v == w {
        return Err(Error::DegenerateEdge);
    }
    Ok(in_closed_diametral_disk(u, v, w)? || in_closed_diametral_disk(u, w, v)?)
}

/// Conflict test on offsets `a = v − u`, `b = w − u` with precomputed squared norms.
///
/// Equivalent to [`edges_conflict`]: `w` is in the disk of `uv` iff `a·b ≥ |b|²`,
/// and `v` is in the disk of `uw` iff `a·b ≥ |a|²`.
pub(crate) fn offsets_conflict(a: &Vector, a2: &Rational, b: &Vector, b2: &Rational) -> bool {
    let ab = a.dot(b);
    if !ab.is_positive() {
        return false;
    }
    ab >= *a2 || ab >= *b2
}

/// Total order on nonzero directions by counterclockwise angle from the
/// positive x-axis, nearer first on a common ray.
pub fn angular_cmp(a: &Vector, b: &Vector) -> Ordering {
    a.half().cmp(&b.half()).then_with(|| b.cross(a).cmp(&Rational::zero())).then_with(|| a.norm2().cmp(&b.norm2()))
}
