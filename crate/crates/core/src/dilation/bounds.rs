//! Outward-rounded scalar arithmetic for enclosing sums of square roots.
//!
//! Two tiers share one interface: doubles with directed rounding (each result
//! nudged one ulp outward), and exact rationals fed by square-root enclosures
//! truncated at a chosen number of bits.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

pub(crate) trait Scalar: Clone + PartialOrd + Send + Sync {
    fn zero() -> Self;
    fn add_down(&self, other: &Self) -> Self;
    fn add_up(&self, other: &Self) -> Self;
    fn div_down(&self, other: &Self) -> Self;
    fn div_up(&self, other: &Self) -> Self;
    /// `lo ≤ √d2 ≤ hi`.
    fn sqrt_enclosure(d2: &Rational, bits: u32) -> (Self, Self);
    /// Exact value, `None` when the tier overflowed.
    fn to_rational(&self) -> Option<Rational>;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add_down(&self, other: &Self) -> Self {
        (self + other).next_down()
    }
    fn add_up(&self, other: &Self) -> Self {
        (self + other).next_up()
    }
    fn div_down(&self, other: &Self) -> Self {
        (self / other).next_down()
    }
    fn div_up(&self, other: &Self) -> Self {
        (self / other).next_up()
    }
    fn sqrt_enclosure(d2: &Rational, _bits: u32) -> (Self, Self) {
        let s = d2.to_f64().sqrt();
        if !s.is_finite() || s == 0.0 {
            return (0.0, f64::INFINITY);
        }
        let square = |x: f64| Rational::from_f64(x).expect("finite").square();
        let mut lo = s;
        while lo > 0.0 && square(lo) > *d2 {
            lo = lo.next_down();
        }
        let mut hi = s;
        while square(hi) < *d2 {
            hi = hi.next_up();
        }
        (lo.max(0.0), hi)
    }
    fn to_rational(&self) -> Option<Rational> {
        Rational::from_f64(*self)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn add_down(&self, other: &Self) -> Self {
        self + other
    }
    fn add_up(&self, other: &Self) -> Self {
        self + other
    }
    fn div_down(&self, other: &Self) -> Self {
        self / other
    }
    fn div_up(&self, other: &Self) -> Self {
        self / other
    }
    fn sqrt_enclosure(d2: &Rational, bits: u32) -> (Self, Self) {
        if let Some(r) = d2.sqrt_exact() {
            return (r.clone(), r);
        }
        // √(N/D) = √(N·D)/D, truncated onto the grid 2^-bits/D
        let scale = BigInt::one() << bits;
        let radicand = d2.numer() * d2.denom() * &scale * &scale;
        let s = radicand.sqrt();
        let den = d2.denom() * &scale;
        let lo = Rational::from_bigints(s.clone(), den.clone()).expect("nonzero");
        let hi = Rational::from_bigints(s + 1, den).expect("nonzero");
        (lo, hi)
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Largest double not above `r`.
pub(crate) fn f64_down(r: &Rational) -> f64 {
    let mut x = r.to_f64();
    while x.is_finite() && Rational::from_f64(x).expect("finite") > *r {
        x = x.next_down();
    }
    if x == f64::INFINITY {
        f64::MAX
    } else {
        x
    }
}

/// Smallest double not below `r`.
pub(crate) fn f64_up(r: &Rational) -> f64 {
    let mut x = r.to_f64();
    while x.is_finite() && Rational::from_f64(x).expect("finite") < *r {
        x = x.next_up();
    }
    if x == f64::NEG_INFINITY {
        f64::MIN
    } else {
        x
    }
}

/// Heap key ordering a partially ordered scalar; NaN never reaches it.
#[derive(Clone)]
pub(crate) struct Key<T>(pub T);

impl<T: PartialOrd> PartialEq for Key<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: PartialOrd> Eq for Key<T> {}

impl<T: PartialOrd> PartialOrd for Key<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: PartialOrd> Ord for Key<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).unwrap_or(Ordering::Equal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perfect_squares_are_exact() {
        let d2 = Rational::new(9, 4);
        assert_eq!(<Rational as Scalar>::sqrt_enclosure(&d2, 64), (Rational::new(3, 2), Rational::new(3, 2)));
        assert_eq!(<f64 as Scalar>::sqrt_enclosure(&d2, 0), (1.5, 1.5));
    }

    #[test]
    fn two_is_enclosed() {
        let two = Rational::from_integer(2);
        let (lo, hi) = <Rational as Scalar>::sqrt_enclosure(&two, 64);
        assert!(lo.square() < two && hi.square() > two);
        assert!((hi - lo) <= Rational::pow10(-19));
        let (lo, hi) = <f64 as Scalar>::sqrt_enclosure(&two, 0);
        assert!(lo < hi && hi - lo < 1e-15);
    }

    #[test]
    fn directed_conversion() {
        let third = Rational::new(1, 3);
        let (lo, hi) = (f64_down(&third), f64_up(&third));
        assert!(Rational::from_f64(lo).unwrap() < third && Rational::from_f64(hi).unwrap() > third);
        assert_eq!(f64_down(&Rational::one()), 1.0);
        assert_eq!(f64_up(&Rational::one()), 1.0);
    }

    proptest! {
        #[test]
        fn f64_enclosure_is_sound(num in 1i64..1_000_000_000, den in 1i64..1_000_000_000) {
            let d2 = Rational::new(num, den);
            let (lo, hi) = <f64 as Scalar>::sqrt_enclosure(&d2, 0);
            prop_assert!(Rational::from_f64(lo).unwrap().square() <= d2);
            prop_assert!(Rational::from_f64(hi).unwrap().square() >= d2);
        }
    }
}
