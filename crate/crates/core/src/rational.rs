//! Exact arbitrary-precision rationals.
//!
//! Every coordinate, squared distance and edge weight in the crate is a
//! [`Rational`]. Values are kept in lowest terms with a positive
//! denominator, so structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den` in lowest terms. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num, den)))
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `10^exp` for any signed exponent.
    pub fn pow10(exp: i32) -> Self {
        let p = num_traits::pow(BigInt::from(10u32), exp.unsigned_abs() as usize);
        if exp >= 0 {
            Rational::from_bigint(p)
        } else {
            Rational(BigRational::new(BigInt::one(), p))
        }
    }

    /// Exact rational value of a finite double. `None` for NaN and infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Rational)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> Ordering {
        match self.0.numer().sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Nearest double; only used for presentation and parameter seeding.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| if self.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
    }

    /// Exact square root when both numerator and denominator are perfect squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Rounds down onto the grid `1/scale`.
    pub fn floor_to(&self, scale: &BigInt) -> Self {
        let scaled = (&self.0 * BigRational::from_integer(scale.clone())).floor().to_integer();
        Rational(BigRational::new(scaled, scale.clone()))
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Canonical text form: an integer (`"3"`), a terminating decimal
    /// (`"-0.00001"`), or a reduced ratio (`"49/33"`).
    pub fn to_canonical_string(&self) -> String {
        let num = self.numer();
        let den = self.denom();
        if den.is_one() {
            return num.to_string();
        }
        let two = BigInt::from(2u32);
        let five = BigInt::from(5u32);
        let mut rest = den.clone();
        let mut twos = 0usize;
        while rest.is_even() {
            rest /= &two;
            twos += 1;
        }
        let mut fives = 0usize;
        while (&rest % &five).is_zero() {
            rest /= &five;
            fives += 1;
        }
        if !rest.is_one() {
            return format!("{}/{}", num, den);
        }
        let digits = twos.max(fives);
        let scale = num_traits::pow(BigInt::from(10u32), digits);
        let scaled = num * (&scale / den);
        let negative = scaled.is_negative();
        let magnitude = scaled.abs().to_string();
        let padded = if magnitude.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - magnitude.len()), magnitude)
        } else {
            magnitude
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - digits);
        format!("{}{}.{}", if negative { "-" } else { "" }, int_part, frac_part)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q`, decimals with optional exponent (`-1.25`, `1e-5`), and integers.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(text.to_string());
        let s = text.trim();
        if s.is_empty() {
            return Err(err());
        }
        if let Some((p, q)) = s.split_once('/') {
            let num = parse_int(p.trim()).ok_or_else(err)?;
            let den = parse_int(q.trim()).ok_or_else(err)?;
            if den.is_zero() || den.is_negative() {
                return Err(err());
            }
            return Ok(Rational(BigRational::new(num, den)));
        }
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(pos) => {
                let exp: i32 = s[pos + 1..].parse().map_err(|_| err())?;
                (&s[..pos], exp)
            }
            None => (s, 0),
        };
        let (negative, body) = match mantissa.as_bytes().first() {
            Some(b'-') => (true, &mantissa[1..]),
            Some(b'+') => (false, &mantissa[1..]),
            _ => (false, mantissa),
        };
        let (int_digits, frac_digits) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_digits.is_empty() && frac_digits.is_empty() {
            return Err(err());
        }
        if !int_digits.bytes().chain(frac_digits.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let all_digits = format!("{}{}", int_digits, frac_digits);
        let mut magnitude: BigInt = all_digits.parse().map_err(|_| err())?;
        if negative {
            magnitude = -magnitude;
        }
        let shift = exponent - frac_digits.len() as i32;
        Ok(Rational::from_bigint(magnitude) * Rational::pow10(shift))
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_canonical_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_decimal_ratio_and_exponent_forms() {
        assert_eq!(r("1.25"), Rational::new(5, 4));
        assert_eq!(r("-0.00001"), Rational::new(-1, 100_000));
        assert_eq!(r("49/32"), Rational::new(49, 32));
        assert_eq!(r("2/4"), Rational::new(1, 2));
        assert_eq!(r("1e-5"), Rational::new(1, 100_000));
        assert_eq!(r("-3"), Rational::from_integer(-3));
        assert_eq!(r(".5"), Rational::new(1, 2));
        assert_eq!(r("1/3") * Rational::from_integer(3), Rational::one());
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "1/0", "1/-2", "abc", "1.2.3", "--1", "1/", ".", "1e", "0x10"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_text() {
        assert_eq!(Rational::new(49, 32).to_string(), "1.53125");
        assert_eq!(Rational::new(-1, 100_000).to_string(), "-0.00001");
        assert_eq!(Rational::new(1, 3).to_string(), "1/3");
        assert_eq!(Rational::new(-7, 1).to_string(), "-7");
        assert_eq!(Rational::new(1, 4).to_string(), "0.25");
        assert_eq!(Rational::new(-1, 6).to_string(), "-1/6");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn sqrt_exact_only_for_squares() {
        assert_eq!(Rational::new(9, 16).sqrt_exact(), Some(Rational::new(3, 4)));
        assert_eq!(Rational::new(2, 1).sqrt_exact(), None);
    }

    #[test]
    fn canonical_form_invariant() {
        let x = Rational::new(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    proptest::proptest! {
        #[test]
        fn text_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..100_000) {
            let x = Rational::new(n, d);
            proptest::prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
