//! Exact rational scalars.
//!
//! Every coefficient in the pipeline (structure constants, module actions,
//! cochain coefficients, linear forms) is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator, so equality is
//! structural and results are bit-for-bit reproducible.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("division by zero")]
pub struct DivisionByZero;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

/// An element of the ground field ℚ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numerator / denominator`, reducing to lowest terms.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self, DivisionByZero> {
        if denominator == 0 {
            return Err(DivisionByZero);
        }
        Ok(Scalar(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        )))
    }

    pub fn from_bigints(numerator: BigInt, denominator: BigInt) -> Result<Self, DivisionByZero> {
        if denominator.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Scalar(BigRational::new(numerator, denominator)))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Scalar(self.0.recip()))
    }

    /// `(-1)^exponent`.
    pub fn sign(exponent: usize) -> Self {
        if exponent.is_multiple_of(2) {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_integer(n as i64)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p` or `p/q` with optional sign; no decimals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let digits_ok = |t: &str| {
            let t = t.strip_prefix(['-', '+']).unwrap_or(t);
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        if !digits_ok(num) {
            return Err(err());
        }
        let numerator: BigInt = num.trim_start_matches('+').parse().map_err(|_| err())?;
        let denominator: BigInt = match den {
            Some(d) if digits_ok(d) && !d.starts_with(['-', '+']) => {
                d.parse().map_err(|_| err())?
            }
            Some(_) => return Err(err()),
            None => BigInt::one(),
        };
        Scalar::from_bigints(numerator, denominator).map_err(|_| err())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(&self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;

    /// Panics on a zero divisor; use [`Scalar::inv`] for a checked version.
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Total order on scalars (the usual order on ℚ).
pub fn cmp(a: &Scalar, b: &Scalar) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(7, 9) + Scalar::zero(), q(7, 9));
        let half = q(2, 4) + Scalar::zero();
        assert_eq!(half.numerator(), &BigInt::from(1));
        assert_eq!(half.denominator(), &BigInt::from(2));
    }

    #[test]
    fn field_operation_examples() {
        assert!((q(2, 3) * q(3, 2)).is_one());
        assert_eq!(Scalar::zero().inv(), Err(DivisionByZero));
        assert_eq!(-q(-5, 7), q(5, 7));
        assert_eq!(Scalar::new(1, 0), Err(DivisionByZero));
    }

    #[test]
    fn canonical_form() {
        let z = q(0, -17);
        assert_eq!(z.denominator(), &BigInt::from(1));
        assert_eq!(z, Scalar::zero());
        let neg = q(3, -6);
        assert_eq!(neg.numerator(), &BigInt::from(-1));
        assert_eq!(neg.denominator(), &BigInt::from(2));
    }

    #[test]
    fn textual_form() {
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(q(-3, 9).to_string(), "-1/3");
        assert_eq!("4/6".parse::<Scalar>().unwrap(), q(2, 3));
        assert_eq!("-12".parse::<Scalar>().unwrap(), q(-12, 1));
        assert_eq!("+5".parse::<Scalar>().unwrap(), q(5, 1));
        for bad in ["", "1.5", "1/0", "a", "1/-2", "--1", "3/"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn ordering() {
        assert_eq!(cmp(&q(1, 3), &q(1, 2)), Ordering::Less);
        assert_eq!(cmp(&q(-1, 2), &q(-2, 4)), Ordering::Equal);
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn lowest_terms(a in arb_scalar(), b in arb_scalar()) {
            use num_integer::Integer;
            for x in [&a + &b, &a * &b, &a - &b] {
                prop_assert!(x.denominator() > &BigInt::from(0));
                prop_assert!(x.numerator().gcd(x.denominator()) == BigInt::from(1) || x.is_zero());
                if x.is_zero() {
                    prop_assert_eq!(x.denominator(), &BigInt::from(1));
                }
                prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
            }
        }
    }
}
