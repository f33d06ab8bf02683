//! Arbitrary-precision rationals in canonical form (reduced, positive
//! denominator), the base scalars of the whole engine.

use alloc::string::String;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. Canonical form is maintained by the backing
/// implementation: `gcd(|numerator|, denominator) = 1`, denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Builds `n/d`. Panics if `d = 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_big(n: BigInt, d: BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        Rational(BigRational::new(n, d))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Sign as -1, 0, 1.
    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root, if this is the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let n = self.0.numer();
        let d = self.0.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(Rational(BigRational::new(rn, rd)))
        } else {
            None
        }
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    /// Parses "p" or "p/q" with optional sign. Rejects anything else.
    pub fn parse(s: &str) -> Result<Self, ParseRationalError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError(s.to_string()));
        }
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| ParseRationalError(s.to_string()))?;
                Ok(Rational::from_bigint(n))
            }
            Some((p, q)) => {
                let n =
                    BigInt::from_str(p.trim()).map_err(|_| ParseRationalError(s.to_string()))?;
                let d =
                    BigInt::from_str(q.trim()).map_err(|_| ParseRationalError(s.to_string()))?;
                if d.is_zero() {
                    return Err(ParseRationalError(s.to_string()));
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a rational number: {:?}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
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
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<'a, 'b> Div<&'b Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'b Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_under_arithmetic() {
        let a = Rational::new(2, 4);
        assert_eq!(a, Rational::new(1, 2));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = Rational::new(-3, -6);
        assert_eq!(b, Rational::new(1, 2));
        let c = &a + &b;
        assert!(c.is_one());
        let d = &a - &b;
        assert!(d.is_zero());
        let e = &Rational::new(3, 7) * &Rational::new(7, 3);
        assert!(e.is_one());
        let q = &Rational::new(5, 6) / &Rational::new(10, 3);
        assert_eq!(q, Rational::new(1, 4));
        assert!(q.denom().is_positive());
    }

    #[test]
    fn sqrt_of_perfect_squares() {
        assert_eq!(Rational::new(4, 9).sqrt(), Some(Rational::new(2, 3)));
        assert_eq!(Rational::from_i64(4).sqrt(), Some(Rational::from_i64(2)));
        assert_eq!(Rational::from_i64(2).sqrt(), None);
        assert_eq!(Rational::from_i64(-4).sqrt(), None);
        assert_eq!(Rational::zero().sqrt(), Some(Rational::zero()));
    }

    #[test]
    fn parsing() {
        assert_eq!(Rational::parse("3").unwrap(), Rational::from_i64(3));
        assert_eq!(Rational::parse("-3/6").unwrap(), Rational::new(-1, 2));
        assert_eq!(Rational::parse(" 7 / 2 ").unwrap(), Rational::new(7, 2));
        assert!(Rational::parse("1.5").is_err());
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("").is_err());
    }

    #[test]
    fn display_round_trip() {
        for (n, d) in [(1i64, 2i64), (-7, 3), (5, 1), (0, 1)] {
            let r = Rational::new(n, d);
            let s = alloc::format!("{r}");
            assert_eq!(Rational::parse(&s).unwrap(), r);
        }
    }
}
