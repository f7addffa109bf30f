//! Real quadratic fields Q(√m) with exact arithmetic.
//!
//! Elements are stored as a + b√m with rational a, b; every comparison
//! (sign, |x| against 1, integrality) is decided exactly on integers, and
//! floating point appears only in the final logarithms.
//!
//! The field's fundamental unit comes from the continued fraction of √m,
//! with the half-integer correction for m ≡ 1 (mod 4) (the continued
//! fraction produces the fundamental unit of Z[√m], which is either the
//! fundamental unit of the full ring of integers or its cube; the cube
//! root is extracted exactly when it exists).
//!
//! Heights decompose over the two real embeddings plus the norm of the
//! denominator ideal; [`unit_reduce`] multiplies an algebraic integer by
//! the unit power that drives its height down to
//! max{4·h(ε₀), ½·log|N(x)|}.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::integer::Roots;
use num::{Integer, One, Signed, Zero};

use crate::factor::factor_u64;
use crate::height::{ln_big, ln_rational_abs, slack, Height};
use crate::rational::Rational;
use crate::{Error, Result};

/// The real quadratic field Q(√m) for squarefree m ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadField {
    m: i64,
}

impl QuadField {
    pub fn new(m: i64) -> Result<Self> {
        if m < 2 || factor_u64(m as u64).iter().any(|&(_, e)| e > 1) {
            return Err(Error::NotSquarefree(m));
        }
        Ok(QuadField { m })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// a + b√m.
    pub fn element(&self, a: Rational, b: Rational) -> QuadElement {
        QuadElement {
            m: self.m,
            a,
            b,
        }
    }

    pub fn from_integers(&self, a: i64, b: i64) -> QuadElement {
        self.element(Rational::from(a), Rational::from(b))
    }

    pub fn zero(&self) -> QuadElement {
        self.from_integers(0, 0)
    }

    pub fn one(&self) -> QuadElement {
        self.from_integers(1, 0)
    }

    pub fn sqrt_m(&self) -> QuadElement {
        self.from_integers(0, 1)
    }

    /// Generator of the ring of integers over Z: √m, or (1+√m)/2 when
    /// m ≡ 1 (mod 4).
    pub fn omega(&self) -> QuadElement {
        if self.m % 4 == 1 {
            self.element(Rational::new(1, 2).unwrap(), Rational::new(1, 2).unwrap())
        } else {
            self.sqrt_m()
        }
    }

    /// The fundamental unit ε₀ > 1 of the ring of integers.
    pub fn fundamental_unit(&self) -> QuadElement {
        let m = self.m as u64;
        let (a0, period) = continued_fraction_sqrt(m);
        let l = period.len();
        // convergent p/q over the terms [a0; period[0], …, period[l−2]]
        // satisfies p² − m·q² = (−1)^l
        let mut p_prev = BigInt::one();
        let mut p = BigInt::from(a0);
        let mut q_prev = BigInt::zero();
        let mut q = BigInt::one();
        for &ak in &period[..l - 1] {
            let p_next = BigInt::from(ak) * &p + &p_prev;
            let q_next = BigInt::from(ak) * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
        }
        let s: i64 = if l % 2 == 1 { -1 } else { 1 };
        debug_assert_eq!(&p * &p - BigInt::from(self.m) * &q * &q, BigInt::from(s));

        if self.m % 4 == 1 {
            // the full unit group may be three times larger: look for
            // ε = (u + v√m)/2 with ε³ = p + q√m, which forces
            // u³ − 3su = 2p and v² = (u² − 4s)/m
            let two_p: BigUint = (BigInt::from(2) * &p).magnitude().clone();
            let u0 = two_p.cbrt();
            for du in 0..=2u32 {
                let u = BigInt::from(u0.clone()) + BigInt::from(du) - BigInt::from(1);
                if u < BigInt::one() {
                    continue;
                }
                if &u * &u * &u - BigInt::from(3 * s) * &u != BigInt::from(2) * &p {
                    continue;
                }
                let v2_num = &u * &u - BigInt::from(4 * s);
                let (v2, rem) = v2_num.div_rem(&BigInt::from(self.m));
                if !rem.is_zero() || v2 < BigInt::zero() {
                    continue;
                }
                let v = BigInt::from(v2.magnitude().sqrt());
                if &v * &v != v2 {
                    continue;
                }
                let half = Rational::new(1, 2).unwrap();
                return self.element(
                    &Rational::from(u) * &half,
                    &Rational::from(v) * &half,
                );
            }
        }
        self.element(Rational::from(p), Rational::from(q))
    }
}

/// Continued fraction of √m for nonsquare m ≥ 2: the integer part a₀ and
/// the periodic tail (whose last term is 2a₀).
pub fn continued_fraction_sqrt(m: u64) -> (u64, Vec<u64>) {
    let a0 = m.sqrt();
    assert!(a0 * a0 != m, "continued_fraction_sqrt: m must not be a square");
    let mut period = Vec::new();
    let (mut p, mut q, mut a) = (0u64, 1u64, a0);
    loop {
        p = a * q - p;
        q = (m - p * p) / q;
        a = (a0 + p) / q;
        period.push(a);
        if a == 2 * a0 {
            return (a0, period);
        }
    }
}

/// An element a + b√m of Q(√m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadElement {
    m: i64,
    a: Rational,
    b: Rational,
}

/// Exact sign of c + d√m (m ≥ 2 nonsquare, so the value is irrational
/// unless d = 0).
fn sign_of(c: &Rational, d: &Rational, m: i64) -> Ordering {
    match (c.is_zero(), d.is_zero()) {
        (true, true) => Ordering::Equal,
        (false, true) => {
            if c.is_negative() {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (true, false) => {
            if d.is_negative() {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (false, false) => match (c.is_negative(), d.is_negative()) {
            (false, false) => Ordering::Greater,
            (true, true) => Ordering::Less,
            // c > 0 > d: positive iff c² > m·d²; c < 0 < d: the reverse
            (false, true) => (c * c).cmp(&(&(d * d) * &Rational::from(m))),
            (true, false) => (&(d * d) * &Rational::from(m)).cmp(&(c * c)),
        },
    }
}

impl QuadElement {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_field(&self, rhs: &QuadElement) -> Result<()> {
        if self.m == rhs.m {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.m, rhs.m))
        }
    }

    pub fn add(&self, rhs: &QuadElement) -> Result<QuadElement> {
        self.same_field(rhs)?;
        Ok(QuadElement {
            m: self.m,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        })
    }

    pub fn sub(&self, rhs: &QuadElement) -> Result<QuadElement> {
        self.same_field(rhs)?;
        Ok(QuadElement {
            m: self.m,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        })
    }

    pub fn mul(&self, rhs: &QuadElement) -> Result<QuadElement> {
        self.same_field(rhs)?;
        let m = Rational::from(self.m);
        Ok(QuadElement {
            m: self.m,
            a: &(&self.a * &rhs.a) + &(&m * &(&self.b * &rhs.b)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        })
    }

    pub fn div(&self, rhs: &QuadElement) -> Result<QuadElement> {
        self.mul(&rhs.recip()?)
    }

    pub fn neg(&self) -> QuadElement {
        QuadElement {
            m: self.m,
            a: -&self.a,
            b: -&self.b,
        }
    }

    /// The Galois conjugate a − b√m.
    pub fn conj(&self) -> QuadElement {
        QuadElement {
            m: self.m,
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// N(x) = x·x̄ = a² − m·b².
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&Rational::from(self.m) * &(&self.b * &self.b))
    }

    /// Tr(x) = x + x̄ = 2a.
    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn recip(&self) -> Result<QuadElement> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let n = self.norm();
        debug_assert!(!n.is_zero(), "m squarefree: only 0 has norm 0");
        let inv = n.recip()?;
        let c = self.conj();
        Ok(QuadElement {
            m: self.m,
            a: &c.a * &inv,
            b: &c.b * &inv,
        })
    }

    pub fn pow(&self, e: i64) -> Result<QuadElement> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = QuadElement {
            m: self.m,
            a: Rational::one(),
            b: Rational::zero(),
        };
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq).expect("same field");
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq).expect("same field");
            }
        }
        Ok(acc)
    }

    /// Exact sign of the element as a real number (principal embedding,
    /// √m > 0).
    pub fn sign(&self) -> Ordering {
        sign_of(&self.a, &self.b, self.m)
    }

    /// Exact comparison of |x| against 1.
    pub fn abs_cmp_one(&self) -> Ordering {
        // |x| > 1 iff x − 1 > 0 or x + 1 < 0; |x| = 1 iff either is zero
        let one = Rational::one();
        let s_minus = sign_of(&(&self.a - &one), &self.b, self.m);
        let s_plus = sign_of(&(&self.a + &one), &self.b, self.m);
        if s_minus == Ordering::Equal || s_plus == Ordering::Equal {
            Ordering::Equal
        } else if s_minus == Ordering::Greater || s_plus == Ordering::Less {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// ln|a + b√m| for a nonzero element, computed without cancellation:
    /// the embedding whose two terms share a sign is evaluated directly
    /// from big integers, and the other one through the norm.
    pub fn ln_abs(&self) -> f64 {
        assert!(!self.is_zero(), "ln_abs of zero");
        if self.b.is_zero() {
            return ln_rational_abs(&self.a);
        }
        if self.a.is_zero() {
            return ln_rational_abs(&self.b) + 0.5 * (self.m as f64).ln();
        }
        if self.a.is_negative() == self.b.is_negative() {
            ln_same_sign_combination(&self.a.abs(), &self.b.abs(), self.m)
        } else {
            // |x| = |N(x)| / |x̄|, and x̄'s terms share a sign
            ln_rational_abs(&self.norm())
                - ln_same_sign_combination(&self.a.abs(), &self.b.abs(), self.m)
        }
    }

    /// (ln|σ₁x|, ln|σ₂x|) over the two real embeddings; sums to ln|N(x)|.
    pub fn log_vector(&self) -> [f64; 2] {
        [self.ln_abs(), self.conj().ln_abs()]
    }

    /// Coordinates (u, v, t) with x = (u + vω)/t, gcd(u, v, t) = 1, t ≥ 1,
    /// where ω generates the ring of integers.
    pub fn basis_coords(&self) -> (BigInt, BigInt, BigInt) {
        let (c1, c2) = if self.m % 4 == 1 {
            // a + b√m = (a − b) + 2b·ω with ω = (1+√m)/2
            (&self.a - &self.b, &self.b + &self.b)
        } else {
            (self.a.clone(), self.b.clone())
        };
        let t = c1.den().lcm(c2.den());
        let u = (&c1 * &Rational::from(t.clone())).num().clone();
        let v = (&c2 * &Rational::from(t.clone())).num().clone();
        let g = u.gcd(&v).gcd(&t);
        debug_assert!(!g.is_zero() || self.is_zero());
        if g.is_zero() {
            return (BigInt::zero(), BigInt::zero(), BigInt::one());
        }
        (&u / &g, &v / &g, &t / &g)
    }

    /// True exactly when x lies in the ring of integers.
    pub fn is_algebraic_integer(&self) -> bool {
        let (_, _, t) = self.basis_coords();
        let result = t.is_one();
        debug_assert_eq!(
            result,
            self.trace().is_integer() && self.norm().is_integer(),
            "quadratic integrality must match trace and norm integrality"
        );
        result
    }

    /// Norm of the denominator ideal: t² divided by the norm of the ideal
    /// generated by t and the integral numerator.
    fn denominator_ideal_norm(&self) -> BigUint {
        let (u, v, t) = self.basis_coords();
        if t.is_one() {
            return BigUint::one();
        }
        // y = u + vω; z-basis generators of (t, y): t, tω, y, yω
        let (w1, w2, norm_y) = if self.m % 4 == 1 {
            let quarter = BigInt::from((self.m - 1) / 4);
            (
                &quarter * &v,
                &u + &v,
                &u * &u + &u * &v - &quarter * &v * &v,
            )
        } else {
            let m = BigInt::from(self.m);
            (&m * &v, u.clone(), &u * &u - &m * &v * &v)
        };
        // index of the lattice: gcd of all 2×2 minors of the generators
        let ideal_norm = (&t * &t)
            .gcd(&(&t * &u))
            .gcd(&(&t * &v))
            .gcd(&(&t * &w1))
            .gcd(&(&t * &w2))
            .gcd(&norm_y);
        let (q, r) = (&t * &t).div_rem(&ideal_norm);
        debug_assert!(r.is_zero(), "ideal norm divides t²");
        q.magnitude().clone()
    }

    /// Absolute logarithmic height: half the sum of log⁺ over both real
    /// embeddings plus the log of the denominator-ideal norm.
    pub fn height(&self) -> Height {
        if self.is_zero() {
            return Height::ZERO;
        }
        let log_plus = |x: &QuadElement| -> f64 {
            match x.abs_cmp_one() {
                Ordering::Greater => x.ln_abs().max(0.0),
                _ => 0.0,
            }
        };
        let finite = ln_big(&BigInt::from(self.denominator_ideal_norm()));
        Height::from_ln(0.5 * (log_plus(self) + log_plus(&self.conj()) + finite))
    }

    /// ½·ln|N(x)| for nonzero x: a lower bound for the height of an
    /// algebraic integer, invariant under multiplication by units.
    pub fn hmod(&self) -> Result<f64> {
        if self.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        Ok(0.5 * ln_rational_abs(&self.norm()))
    }
}

/// ln(α + β√m) for nonnegative rationals α, β, not both zero, free of
/// cancellation: everything is scaled to one big integer. √m is embedded
/// at 64 fractional bits, so the relative error stays near f64 precision.
fn ln_same_sign_combination(alpha: &Rational, beta: &Rational, m: i64) -> f64 {
    debug_assert!(!alpha.is_negative() && !beta.is_negative());
    let p1 = alpha.num().magnitude().clone();
    let q1 = alpha.den().magnitude().clone();
    let p2 = beta.num().magnitude().clone();
    let q2 = beta.den().magnitude().clone();
    // α + β√m = (p1·q2 + p2·q1·√m) / (q1·q2)
    let sqrt_scaled = (BigUint::from(m as u64) << 128u32).sqrt(); // ⌊√m · 2^64⌋
    let numerator = ((&p1 * &q2) << 64u32) + &p2 * &q1 * sqrt_scaled;
    let denominator = &q1 * &q2;
    ln_big(&BigInt::from(numerator)) - 64.0 * std::f64::consts::LN_2
        - ln_big(&BigInt::from(denominator))
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b_abs = self.b.abs();
        let sign = if self.b.is_negative() { "-" } else { "+" };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{}*sqrt({})", b_abs, self.m)
            } else {
                write!(f, "{}*sqrt({})", b_abs, self.m)
            }
        } else {
            write!(f, "{} {} {}*sqrt({})", self.a, sign, b_abs, self.m)
        }
    }
}

/// Result of reducing an algebraic integer by a power of the fundamental
/// unit.
#[derive(Debug, Clone)]
pub struct UnitReduction {
    /// The exponent: reduced = ε₀ⁿ · x.
    pub n: i64,
    pub reduced: QuadElement,
    pub height_before: f64,
    pub height_after: f64,
    /// max{4·h(ε₀), ½·log|N(x)|}; the reduced height never exceeds it.
    pub bound: f64,
}

/// Multiplies x by the power of the fundamental unit that minimizes the
/// height over the candidates nearest the log-balancing exponent,
/// preferring small |n| on ties. Requires x to be a nonzero algebraic
/// integer. The result satisfies h(ε₀ⁿx) ≤ max{4·h(ε₀), ½·log|N(x)|}.
pub fn unit_reduce(x: &QuadElement) -> Result<UnitReduction> {
    if x.is_zero() {
        return Err(Error::UnitOrZeroArgument("0".to_string()));
    }
    if !x.is_algebraic_integer() {
        return Err(Error::NotAnAlgebraicInteger(x.to_string()));
    }
    let field = QuadField::new(x.m())?;
    let eps = field.fundamental_unit();
    let lambda = eps.ln_abs();
    debug_assert!(lambda > 0.0);
    let [t1, t2] = x.log_vector();
    // multiplying by ε₀ⁿ sends (t1, t2) to (t1 + nλ, t2 − nλ); balance them
    let n_star = ((t2 - t1) / (2.0 * lambda)).round() as i64;
    let mut candidates = [n_star - 1, n_star, n_star + 1];
    candidates.sort_by_key(|n| (n.abs(), n.signum()));
    let mut best: Option<(f64, i64, QuadElement)> = None;
    for n in candidates {
        let y = eps.pow(n)?.mul(x)?;
        let h = y.height().value();
        if best.as_ref().map_or(true, |(bh, _, _)| h + 1e-9 < *bh) {
            best = Some((h, n, y));
        }
    }
    let (height_after, n, reduced) = best.expect("three candidates");
    let bound = (4.0 * eps.height().value()).max(x.hmod()?);
    debug_assert!(
        height_after <= bound + slack(bound),
        "unit reduction must reach the bound"
    );
    Ok(UnitReduction {
        n,
        reduced,
        height_before: x.height().value(),
        height_after,
        bound,
    })
}
