//! Absolute logarithmic heights of rationals and tuples.
//!
//! Heights are natural-log values carried as f64 but always produced as the
//! log of an exactly computed positive integer (or a short sum of such
//! logs), so their floating-point error is a few ulps. Inequality checks
//! against bound formulas use [`slack`], the crate-wide tolerance.
//!
//! The affine tuple height is computed place by place — the archimedean
//! contribution plus one term for each prime dividing some denominator —
//! while the projective height clears denominators and strips the gcd.
//! The two routes must agree on `(1, xs)`, which the tests exploit.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::factor::factor_big;
use crate::rational::Rational;
use crate::{Error, Result};

/// Additive tolerance for comparing a measured height against a bound:
/// 1e-9 scaled by the bound's magnitude.
pub fn slack(bound: f64) -> f64 {
    1e-9 * (1.0 + bound.abs())
}

/// A nonnegative finite height value on the natural-log scale.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Height(f64);

impl Height {
    pub const ZERO: Height = Height(0.0);

    /// Wraps a natural-log value. Tiny negative rounding noise is clamped;
    /// anything materially negative or non-finite is a caller bug.
    pub fn from_ln(v: f64) -> Self {
        assert!(v.is_finite(), "Height::from_ln: non-finite value {v}");
        assert!(v > -1e-12, "Height::from_ln: negative value {v}");
        Height(v.max(0.0))
    }

    /// log of a positive integer.
    pub fn of_integer(n: &BigInt) -> Self {
        assert!(n.is_positive(), "Height::of_integer: need a positive integer");
        Height::from_ln(ln_big(n))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `self <= bound + slack(bound)`.
    pub fn within(self, bound: f64) -> bool {
        self.0 <= bound + slack(bound)
    }
}

impl Add for Height {
    type Output = Height;
    fn add(self, rhs: Height) -> Height {
        Height(self.0 + rhs.0)
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Natural log of a nonzero integer's absolute value, accurate to a few
/// ulps at any size: the top 64 bits supply the mantissa and the rest
/// contributes `ln 2` per shifted bit.
pub fn ln_big(n: &BigInt) -> f64 {
    assert!(!n.is_zero(), "ln_big: log of zero");
    let mag = n.magnitude();
    let bits = mag.bits();
    if bits <= 64 {
        return (mag.to_u64().expect("fits") as f64).ln();
    }
    let shift = bits - 64;
    let top: BigUint = mag >> shift;
    (top.to_u64().expect("64 bits") as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// ln |x| for a nonzero rational.
pub fn ln_rational_abs(x: &Rational) -> f64 {
    assert!(!x.is_zero(), "ln_rational_abs: log of zero");
    ln_big(x.num()) - ln_big(x.den())
}

/// A place of Q: the archimedean absolute value or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Archimedean,
    Finite(u64),
}

/// Height of a single rational: log max(|num|, den).
pub fn height_rational(x: &Rational) -> Height {
    x.height()
}

/// Affine height of a tuple, computed place by place: the archimedean term
/// log max{1, max |x_i|} plus, for each prime p dividing some denominator,
/// max_i max{0, −v_p(x_i)} · log p.
pub fn height_affine_tuple(xs: &[Rational]) -> Height {
    // archimedean: exact comparison of |x_i| as rationals
    let mut arch = 0.0f64;
    if let Some(max_abs) = xs.iter().map(Rational::abs).max() {
        if max_abs > 1 {
            arch = ln_rational_abs(&max_abs);
        }
    }
    // finite places: factor each denominator, track the largest exponent
    let mut worst: BTreeMap<u64, u32> = BTreeMap::new();
    for x in xs {
        if x.den().is_one() {
            continue;
        }
        for (p, e) in factor_big(x.den()) {
            let p = p
                .to_u64()
                .expect("denominator prime exceeds the supported 64-bit range");
            let entry = worst.entry(p).or_insert(0);
            *entry = (*entry).max(e);
        }
    }
    let finite: f64 = worst
        .iter()
        .map(|(&p, &e)| e as f64 * (p as f64).ln())
        .sum();
    Height::from_ln(arch.max(0.0) + finite)
}

/// The exact integer whose log is the affine tuple height: with
/// a = lcm of denominators, this is max(a, max |a·x_i|). Serves as the
/// independent clearing-route oracle for [`height_affine_tuple`] and as the
/// exact value when a test needs integer comparisons.
pub fn affine_height_integer(xs: &[Rational]) -> BigUint {
    let mut a = BigInt::one();
    for x in xs {
        a = a.lcm(x.den());
    }
    let mut best = a.magnitude().clone();
    for x in xs {
        let scaled = (&a * x.num() / x.den()).magnitude().clone();
        best = best.max(scaled);
    }
    best
}

/// Projective height of a tuple, invariant under scaling: clear
/// denominators by their lcm, divide by the gcd of the resulting integers,
/// and take log of the largest magnitude. Errors on the all-zero tuple.
pub fn height_projective_tuple(xs: &[Rational]) -> Result<Height> {
    if xs.iter().all(Rational::is_zero) {
        return Err(Error::DegenerateProjectivePoint);
    }
    let mut a = BigInt::one();
    for x in xs {
        a = a.lcm(x.den());
    }
    let ints: Vec<BigInt> = xs.iter().map(|x| &a * x.num() / x.den()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    let top = ints
        .iter()
        .map(|v| v.magnitude().clone())
        .max()
        .expect("nonempty");
    let reduced = top / g.magnitude();
    Ok(Height::of_integer(&BigInt::from(reduced)))
}
