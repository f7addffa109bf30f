//! Arbitrary-precision rationals in lowest terms.
//!
//! [`Rational`] wraps `num::BigRational` and guarantees the canonical form
//! used throughout the crate: gcd(numerator, denominator) = 1, denominator
//! positive, zero stored as 0/1. The text format is ASCII `p/q` or `p`
//! with an optional leading minus sign.

use num::bigint::{BigInt, BigUint, Sign};
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::factor::{is_prime_u64, vp_int};
use crate::height::{ln_big, Height};
use crate::{Error, Result};

/// A rational number in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing to lowest terms. Errors on `den = 0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Numerator (sign-carrying, coprime to the denominator).
    pub fn num(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator (always positive).
    pub fn den(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Integer power, with negative exponents allowed for nonzero values.
    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            assert!(!self.is_zero(), "Rational::pow: zero to a negative power");
        }
        Rational(self.0.pow(e))
    }

    /// Approximate f64 value (for display and embedding logs only; all
    /// decisions in the crate are made on exact integers).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// p-adic valuation v_p(self) for a prime p; errors on zero.
    pub fn valuation(&self, p: u64) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        assert!(is_prime_u64(p), "Rational::valuation: {p} is not prime");
        // In lowest terms at most one of the two valuations is nonzero.
        let up = vp_int(self.num(), p) as i64;
        if up > 0 {
            return Ok(up);
        }
        Ok(-(vp_int(self.den(), p) as i64))
    }

    /// The exact integer max(|num|, den) whose log is the height.
    pub fn height_integer(&self) -> BigUint {
        let n = self.num().magnitude();
        let d = self.den().magnitude();
        n.max(d).clone()
    }

    /// Absolute logarithmic height: log max(|num|, den).
    pub fn height(&self) -> Height {
        Height::from_ln(ln_big(&BigInt::from_biguint(
            Sign::Plus,
            self.height_integer(),
        )))
    }

    pub(crate) fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `p/q` or `p` (ASCII digits, optional leading '-').
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "rational",
            token: s.to_string(),
        };
        let parse_int = |t: &str| -> Result<BigInt> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            BigInt::from_str(t).map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                if den.is_negative() {
                    // Canonical text keeps the sign on the numerator.
                    return Err(bad());
                }
                Rational::new(num, den)
            }
        }
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

// ---- arithmetic ----

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "Rational::div: division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        &self / rhs
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

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn test_canonical_form() {
        let x = Rational::new(4, -6).unwrap();
        assert_eq!(x.num(), &BigInt::from(-2));
        assert_eq!(x.den(), &BigInt::from(3));
        assert_eq!(Rational::new(0, 7).unwrap(), Rational::zero());
        assert_eq!(Rational::zero().den(), &BigInt::from(1));
        assert!(matches!(Rational::new(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn test_parse_display_roundtrip() {
        for s in ["3/2", "-3/2", "0", "17", "-17", "355/113"] {
            assert_eq!(q(s).to_string(), s);
        }
        // reducible input prints reduced
        assert_eq!(q("4/6").to_string(), "2/3");
        assert!(q("6/2").is_integer());
        assert_eq!(q("6/2").to_string(), "3");
    }

    #[test]
    fn test_parse_rejects_garbage() {
        for s in ["", "a", "1/a", "1//2", "1/-2", "1.5", "2/0ish", " 1"] {
            assert!(q_err(s), "{s:?} should fail");
        }
        assert!(matches!("1/0".parse::<Rational>(), Err(Error::ZeroDenominator)));
    }

    fn q_err(s: &str) -> bool {
        matches!(s.parse::<Rational>(), Err(Error::Parse { .. }))
    }

    #[test]
    fn test_valuation() {
        // v_2(8/3) = 3, v_3(8/3) = -1, v_5(8/3) = 0
        assert_eq!(q("8/3").valuation(2).unwrap(), 3);
        assert_eq!(q("8/3").valuation(3).unwrap(), -1);
        assert_eq!(q("8/3").valuation(5).unwrap(), 0);
        assert!(matches!(
            Rational::zero().valuation(2),
            Err(Error::ValuationOfZero)
        ));
    }

    #[test]
    fn test_height() {
        // h(3/2) = log 3
        assert_eq!(q("3/2").height_integer(), BigUint::from(3u32));
        assert!((q("3/2").height().value() - 3f64.ln()).abs() < 1e-15);
        // h(0) = 0, h(1) = 0, h(-7/5) = log 7
        assert_eq!(Rational::zero().height().value(), 0.0);
        assert_eq!(Rational::one().height().value(), 0.0);
        assert!((q("-7/5").height().value() - 7f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn test_arithmetic() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("1/2") - q("1/3"), q("1/6"));
        assert_eq!(q("1/2") * q("2/3"), q("1/3"));
        assert_eq!(q("1/2") / q("2/3"), q("3/4"));
        assert_eq!(-q("1/2"), q("-1/2"));
        assert_eq!(q("5/3").recip().unwrap(), q("3/5"));
        assert_eq!(q("2/3").pow(-2), q("9/4"));
    }
}
