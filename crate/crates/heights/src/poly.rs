//! Dense univariate polynomials over Q and canonical rational fractions.
//!
//! [`DensePoly`] stores coefficients lowest degree first with no trailing
//! zero (the zero polynomial is the empty vector). [`RationalFraction`] is
//! the canonical form of a quotient of polynomials: integer coefficients,
//! numerator and denominator coprime in Q[X], joint integer content 1, and
//! a positive leading denominator coefficient — so fraction equality is
//! coefficient equality and the fraction's height is well defined.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::height::{height_affine_tuple, ln_big, Height};
use crate::rational::Rational;
use crate::{Error, Result};

/// Dense polynomial over Q, coefficient of X^i at index i.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        DensePoly::new(vec![c])
    }

    /// c·X^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        DensePoly::new(coeffs)
    }

    pub fn from_integers(cs: &[i64]) -> Self {
        DensePoly::new(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn from_int_coeffs(cs: Vec<BigInt>) -> Self {
        DensePoly::new(cs.into_iter().map(Rational::from).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0 — the convention the
    /// bound formulas use for constant and vanishing inputs.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient of X^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation at a rational point.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn evaluate_at_i64(&self, x: i64) -> Rational {
        self.evaluate(&Rational::from(x))
    }

    /// Horner evaluation at an integer point, staying in big integers.
    /// Requires integer coefficients.
    pub fn evaluate_integer(&self, x: &BigInt) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient(c.to_string()));
            }
            acc = acc * x + c.num();
        }
        Ok(acc)
    }

    /// X^k · self.
    pub fn shift(&self, k: usize) -> DensePoly {
        if self.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    pub fn scale(&self, s: &Rational) -> DensePoly {
        if s.is_zero() {
            return DensePoly::zero();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Exact polynomial division: returns (quotient, remainder) with
    /// remainder of degree < deg divisor. The zero divisor is an error.
    pub fn div_rem(&self, divisor: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = divisor.leading().expect("nonzero").recip()?;
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.leading().expect("nonzero") * &lead_inv;
            let k = dr - dd;
            rem = &rem - &divisor.scale(&factor).shift(k);
            quot[k] = factor;
        }
        Ok((DensePoly::new(quot), rem))
    }

    /// Least common multiple of the coefficient denominators (≥ 1).
    pub fn denominator_lcm(&self) -> BigInt {
        let mut a = BigInt::one();
        for c in &self.coeffs {
            a = a.lcm(c.den());
        }
        a
    }

    /// Clears denominators: returns (a, a·P) with a the positive lcm of the
    /// coefficient denominators, so a·P has integer coefficients and
    /// max{log a, h(a·P)} ≤ h(P).
    pub fn cleared(&self) -> (BigInt, DensePoly) {
        let a = self.denominator_lcm();
        (a.clone(), self.scale(&Rational::from(a)))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// The coefficients as integers; errors on a fractional coefficient.
    pub fn to_int_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.num().clone())
                } else {
                    Err(Error::NonIntegerCoefficient(c.to_string()))
                }
            })
            .collect()
    }

    /// Sup norm |P|_∞ = max |a_i| for integer coefficients; 0 for the zero
    /// polynomial.
    pub fn inf_norm(&self) -> Result<BigUint> {
        let ints = self.to_int_coeffs()?;
        Ok(ints
            .iter()
            .map(|c| c.magnitude().clone())
            .max()
            .unwrap_or_else(BigUint::zero))
    }

    /// Gcd of the integer coefficients (0 for the zero polynomial).
    pub fn content_int(&self) -> Result<BigInt> {
        let ints = self.to_int_coeffs()?;
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        Ok(g)
    }

    /// The height of the coefficient tuple (Weil height of the polynomial).
    pub fn height(&self) -> Height {
        height_affine_tuple(&self.coeffs)
    }

    /// min over nonzero coefficients of v_p; errors on the zero polynomial.
    pub fn vp(&self, p: u64) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.valuation(p))
            .try_fold(i64::MAX, |acc, v| Ok(acc.min(v?)))
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for DensePoly {
            type Output = DensePoly;
            fn $method(self, rhs: DensePoly) -> DensePoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&DensePoly> for DensePoly {
            type Output = DensePoly;
            fn $method(self, rhs: &DensePoly) -> DensePoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<DensePoly> for &DensePoly {
            type Output = DensePoly;
            fn $method(self, rhs: DensePoly) -> DensePoly {
                self.$method(&rhs)
            }
        }
    };
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut acc = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = &acc[i + j] + &(a * b);
            }
        }
        DensePoly::new(acc)
    }
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        -&self
    }
}

impl fmt::Display for DensePoly {
    /// Comma-separated coefficients, lowest degree first ("3/2,0,1").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(Rational::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DensePoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse {
                what: "polynomial",
                token: s.to_string(),
            });
        }
        let coeffs: Result<Vec<Rational>> = s.split(',').map(|t| t.trim().parse()).collect();
        Ok(DensePoly::new(coeffs?))
    }
}

/// A rational fraction in canonical form: integer-coefficient coprime
/// numerator and denominator with joint content 1 and positive leading
/// denominator coefficient. Build one through [`canonicalize_fraction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFraction {
    num: DensePoly,
    den: DensePoly,
}

impl RationalFraction {
    /// Canonical form of num/den — shorthand for [`canonicalize_fraction`].
    pub fn new(num: DensePoly, den: DensePoly) -> Result<Self> {
        canonicalize_fraction(&num, &den)
    }

    pub fn num(&self) -> &DensePoly {
        &self.num
    }

    pub fn den(&self) -> &DensePoly {
        &self.den
    }

    /// max(deg num, deg den), with the zero numerator counted as degree 0.
    pub fn degree(&self) -> usize {
        self.num
            .degree_or_zero()
            .max(self.den.degree_or_zero())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == DensePoly::one()
    }

    /// Largest coefficient magnitude across numerator and denominator
    /// (≥ 1: the canonical denominator is nonzero and primitive jointly
    /// with the numerator).
    pub fn max_coeff_abs(&self) -> BigUint {
        let mut best = BigUint::zero();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            best = best.max(c.num().magnitude().clone());
        }
        best
    }

    /// Height of the projective tuple of all coefficients: with content 1
    /// this is the log of the largest coefficient magnitude.
    pub fn height(&self) -> Height {
        Height::from_ln(ln_big(&BigInt::from(self.max_coeff_abs())))
    }

    /// num(x)/den(x); errors at a pole.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(&self.num.evaluate(x) / &d)
    }

    /// Evaluation at an integer point via big-integer Horner.
    pub fn evaluate_at_integer(&self, x: i64) -> Result<Rational> {
        let xi = BigInt::from(x);
        let d = self.den.evaluate_integer(&xi).expect("canonical integer denominator");
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        let n = self.num.evaluate_integer(&xi).expect("canonical integer numerator");
        Rational::new(n, d)
    }
}

impl fmt::Display for RationalFraction {
    /// "num | den" with each side in the polynomial text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.num, self.den)
    }
}

impl FromStr for RationalFraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.splitn(3, '|');
        let num: DensePoly = parts.next().unwrap_or("").trim().parse()?;
        let den: DensePoly = match parts.next() {
            Some(d) => d.trim().parse()?,
            None => DensePoly::one(),
        };
        if parts.next().is_some() {
            return Err(Error::Parse {
                what: "fraction",
                token: s.to_string(),
            });
        }
        canonicalize_fraction(&num, &den)
    }
}

impl From<DensePoly> for RationalFraction {
    fn from(p: DensePoly) -> Self {
        canonicalize_fraction(&p, &DensePoly::one()).expect("denominator 1 is nonzero")
    }
}

/// Brings P/Q to canonical form: cancels their polynomial gcd, clears
/// coefficient denominators by the joint lcm, divides out the joint integer
/// content, and makes the denominator's leading coefficient positive.
/// Errors when Q is the zero polynomial.
pub fn canonicalize_fraction(num: &DensePoly, den: &DensePoly) -> Result<RationalFraction> {
    if den.is_zero() {
        return Err(Error::ZeroDenominatorPoly);
    }
    let g = crate::cauchy::poly_gcd(num, den);
    let (num, den) = if g.degree_or_zero() > 0 {
        let (qn, rn) = num.div_rem(&g)?;
        let (qd, rd) = den.div_rem(&g)?;
        debug_assert!(rn.is_zero() && rd.is_zero(), "gcd division must be exact");
        (qn, qd)
    } else {
        (num.clone(), den.clone())
    };
    let a = num.denominator_lcm().lcm(&den.denominator_lcm());
    let scale = Rational::from(a);
    let num = num.scale(&scale);
    let den = den.scale(&scale);
    let content = num.content_int()?.gcd(&den.content_int()?);
    let inv = Rational::from(content).recip().expect("nonzero content");
    let mut num = num.scale(&inv);
    let mut den = den.scale(&inv);
    if den.leading().expect("nonzero denominator").is_negative() {
        num = -num;
        den = -den;
    }
    Ok(RationalFraction { num, den })
}

/// Height of a canonical fraction — see [`RationalFraction::height`].
pub fn fraction_height(f: &RationalFraction) -> Height {
    f.height()
}

/// Right-hand side of the evaluation height bound
/// h(F(x)) ≤ d·h(x) + h(F) + log(d+1).
pub fn evaluation_height_bound(f: &RationalFraction, x: &Rational) -> f64 {
    let d = f.degree() as f64;
    d * x.height().value() + f.height().value() + (d + 1.0).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::height::slack;
    use proptest::prelude::*;

    fn p(s: &str) -> DensePoly {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn test_new_trims_trailing_zeros() {
        let poly = DensePoly::new(vec![q("1"), q("0"), q("0")]);
        assert_eq!(poly.degree(), Some(0));
        assert!(DensePoly::new(vec![q("0")]).is_zero());
        assert_eq!(DensePoly::zero().degree(), None);
    }

    #[test]
    fn test_parse_display_roundtrip() {
        for s in ["3/2,0,1", "0", "1", "-1/2", "5,-3", "0,0,1"] {
            let poly = p(s);
            assert_eq!(p(&poly.to_string()), poly);
        }
        assert_eq!(p("3/2,0,1").degree(), Some(2));
        assert_eq!(p("0,0,1").to_string(), "0,0,1");
        assert!("".parse::<DensePoly>().is_err());
        assert!("1,,2".parse::<DensePoly>().is_err());
        assert!("1,x".parse::<DensePoly>().is_err());
    }

    #[test]
    fn test_evaluate() {
        let poly = p("3/2,0,1"); // 3/2 + X^2
        assert_eq!(poly.evaluate(&q("2")), q("11/2"));
        assert_eq!(poly.evaluate(&q("0")), q("3/2"));
        assert_eq!(poly.evaluate(&q("-1/2")), q("7/4"));
        assert_eq!(
            p("1,2,1").evaluate_integer(&BigInt::from(3)).unwrap(),
            BigInt::from(16)
        );
        assert!(p("1/2,1").evaluate_integer(&BigInt::from(1)).is_err());
    }

    #[test]
    fn test_arithmetic_and_div_rem() {
        let a = p("-1,0,1"); // X^2 - 1
        let b = p("-1,1"); // X - 1
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quot, p("1,1"));
        assert!(rem.is_zero());
        assert_eq!(&quot * &b, a);
        let (quot, rem) = p("1,1,1").div_rem(&p("1,2")).unwrap();
        assert_eq!(&(&quot * &p("1,2")) + &rem, p("1,1,1"));
        assert!(rem.degree_or_zero() < 1);
        assert!(p("1").div_rem(&DensePoly::zero()).is_err());
    }

    #[test]
    fn test_poly_height_examples() {
        // X^2 + 1/2: only p=2 contributes
        assert!((p("1/2,0,1").height().value() - 2f64.ln()).abs() < 1e-12);
        // 3X + 5: archimedean max
        assert!((p("5,3").height().value() - 5f64.ln()).abs() < 1e-12);
        assert_eq!(DensePoly::zero().height().value(), 0.0);
    }

    #[test]
    fn test_inf_norm_and_vp() {
        assert_eq!(p("-7,3").inf_norm().unwrap(), BigUint::from(7u32));
        assert_eq!(p("0,0,0,1").inf_norm().unwrap(), BigUint::from(1u32));
        assert_eq!(DensePoly::zero().inf_norm().unwrap(), BigUint::zero());
        assert!(p("1/2,1").inf_norm().is_err());

        assert_eq!(p("6,4").vp(2).unwrap(), 1);
        assert_eq!(p("1/3,1").vp(3).unwrap(), -1);
        assert_eq!(p("3,0,9").vp(3).unwrap(), 1);
        assert!(matches!(DensePoly::zero().vp(2), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn test_cleared_satisfies_denominator_clearing_bound() {
        // X/2 + 1/3 → a = 6, aP = 3X + 2, and log a ≤ h(P) = log 6
        let (a, ap) = p("1/3,1/2").cleared();
        assert_eq!(a, BigInt::from(6));
        assert_eq!(ap, p("2,3"));
        let hp = p("1/3,1/2").height().value();
        assert!((hp - 6f64.ln()).abs() < 1e-12);
        assert!(ln_big(&a) <= hp + slack(hp));
        assert!(ap.height().value() <= hp + slack(hp));

        // X/4 + 1/6 → a = 12, aP = 3X + 2, h(P) = log 12
        let (a, ap) = p("1/6,1/4").cleared();
        assert_eq!(a, BigInt::from(12));
        assert_eq!(ap, p("2,3"));
        assert!((p("1/6,1/4").height().value() - 12f64.ln()).abs() < 1e-12);

        let (a, _) = p("5,3").cleared();
        assert_eq!(a, BigInt::one());
    }

    #[test]
    fn test_canonicalize_examples() {
        // (X + 1/2)/(X − 1/3) → (6X+3)/(6X−2)
        let f = canonicalize_fraction(&p("1/2,1"), &p("-1/3,1")).unwrap();
        assert_eq!(f.num(), &p("3,6"));
        assert_eq!(f.den(), &p("-2,6"));
        assert!((f.height().value() - 6f64.ln()).abs() < 1e-12);

        // (X^2−1)/(X−1) → (X+1)/1
        let f = canonicalize_fraction(&p("-1,0,1"), &p("-1,1")).unwrap();
        assert_eq!(f.num(), &p("1,1"));
        assert_eq!(f.den(), &DensePoly::one());
        assert!(f.is_polynomial());

        // (−X)/(−2X+2) → X/(2X−2): sign moves to the numerator
        let f = canonicalize_fraction(&p("0,-1"), &p("2,-2")).unwrap();
        assert_eq!(f.num(), &p("0,1"));
        assert_eq!(f.den(), &p("-2,2"));

        assert!(matches!(
            canonicalize_fraction(&p("1"), &DensePoly::zero()),
            Err(Error::ZeroDenominatorPoly)
        ));
    }

    #[test]
    fn test_fraction_height_examples() {
        assert_eq!(RationalFraction::from(p("0,1")).height().value(), 0.0);
        let f = canonicalize_fraction(&p("1,1"), &p("-1,1")).unwrap();
        assert_eq!(f.height().value(), 0.0);
    }

    #[test]
    fn test_fraction_evaluate() {
        let f = canonicalize_fraction(&p("1,1"), &p("-1,1")).unwrap();
        assert_eq!(f.evaluate(&q("3")).unwrap(), q("2"));
        assert!(matches!(f.evaluate(&q("1")), Err(Error::Pole(_))));
        let g = canonicalize_fraction(&p("3,6"), &p("-2,6")).unwrap();
        assert_eq!(g.evaluate(&q("0")).unwrap(), q("-3/2"));
        assert_eq!(g.evaluate_at_integer(0).unwrap(), q("-3/2"));
        assert!(matches!(f.evaluate_at_integer(1), Err(Error::Pole(_))));
    }

    #[test]
    fn test_fraction_parse_display_roundtrip() {
        for s in ["1 | 1,1", "0,1 | -2,2", "5 | 1", "3,6 | -2,6"] {
            let f: RationalFraction = s.parse().unwrap();
            assert_eq!(f.to_string().parse::<RationalFraction>().unwrap(), f);
        }
        // a bare polynomial parses with denominator 1
        let f: RationalFraction = "0,1".parse().unwrap();
        assert!(f.is_polynomial());
        assert!("1 | 1 | 1".parse::<RationalFraction>().is_err());
        assert!("1 | 0".parse::<RationalFraction>().is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn small_poly(max_len: usize) -> impl Strategy<Value = DensePoly> {
        proptest::collection::vec(small_rational(), 1..=max_len).prop_map(DensePoly::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        /// canonical form is a fixed point of canonicalization, and scaling
        /// numerator and denominator together changes nothing
        #[test]
        fn canonicalize_idempotent_and_scale_invariant(
            num in small_poly(4), den in small_poly(4),
            sn in 1i64..20, sd in 1i64..20, neg in any::<bool>(),
        ) {
            prop_assume!(!den.is_zero());
            let f = canonicalize_fraction(&num, &den).unwrap();
            let again = canonicalize_fraction(f.num(), f.den()).unwrap();
            prop_assert_eq!(&again, &f);

            let s = Rational::new(if neg { -sn } else { sn }, sd).unwrap();
            let g = canonicalize_fraction(&num.scale(&s), &den.scale(&s)).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.height().value().to_bits(), f.height().value().to_bits());
        }

        /// h(F(x)) ≤ d·h(x) + h(F) + log(d+1)
        #[test]
        fn evaluation_height_bound_holds(
            num in small_poly(5), den in small_poly(5),
            xn in -1000i64..1000, xd in 1i64..1000,
        ) {
            prop_assume!(!den.is_zero());
            let f = canonicalize_fraction(&num, &den).unwrap();
            let x = Rational::new(xn, xd).unwrap();
            if let Ok(v) = f.evaluate(&x) {
                let bound = evaluation_height_bound(&f, &x);
                prop_assert!(v.height().value() <= bound + slack(bound));
            }
        }

        /// division with remainder reconstructs the dividend exactly
        #[test]
        fn div_rem_reconstructs(a in small_poly(6), b in small_poly(4)) {
            prop_assume!(!b.is_zero());
            let (quot, rem) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&(&quot * &b) + &rem), &a);
            if !rem.is_zero() {
                prop_assert!(rem.degree().unwrap() < b.degree().unwrap());
            }
        }

        /// the polynomial height equals the log of the exact clearing
        /// integer max(a, |a·P|_∞)
        #[test]
        fn poly_height_matches_clearing_oracle(poly in small_poly(6)) {
            prop_assume!(!poly.is_zero());
            let (a, ap) = poly.cleared();
            let cleared_max = BigInt::from(ap.inf_norm().unwrap()).max(a);
            let oracle = ln_big(&cleared_max);
            prop_assert!((poly.height().value() - oracle).abs() < 1e-9);
        }
    }
}
