//! Lagrange interpolation at integer nodes and the coefficient-height
//! bounds it obeys.
//!
//! Nodes live in an explicit integer interval [A, B]; the bound formulas
//! depend on its length D = B − A and magnitude M = max{|A|, |B|}. The
//! interpolant itself is computed by exact Newton divided differences; the
//! scaled Lagrange basis polynomials D!·∏(X−x_j)/∏(x_i−x_j) are expanded
//! separately by [`lagrange_basis_bound_check`], which verifies both their
//! integrality and the sup-norm bound D!(2M)^d they satisfy.
//!
//! [`count_bad_points`] counts the points of the interval where a
//! polynomial's value is anomalously small at one place — at most deg P
//! such points exist, which is what lets an oversampled height bound
//! discard the worst points per place.

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

use crate::factor::{factorial, vp_factorial, vp_int};
use crate::height::{ln_big, slack, Place};
use crate::poly::DensePoly;
use crate::rational::Rational;
use crate::{Error, Result};

/// Distinct integer nodes inside an explicit interval [lo, hi] with
/// hi − lo ≥ 1. Order is preserved: callers pair each node with a value
/// by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSet {
    points: Vec<i64>,
    lo: i64,
    hi: i64,
}

impl NodeSet {
    pub fn new(points: Vec<i64>, lo: i64, hi: i64) -> Result<Self> {
        if hi - lo < 1 {
            return Err(Error::IntervalTooShort { lo, hi });
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateNode(w[0]));
            }
        }
        for &x in &points {
            if x < lo || x > hi {
                return Err(Error::NodeOutOfRange { node: x, lo, hi });
            }
        }
        Ok(NodeSet { points, lo, hi })
    }

    /// The tightest valid interval around the nodes (padded to length ≥ 1).
    pub fn spanning(points: Vec<i64>) -> Result<Self> {
        let lo = *points.iter().min().ok_or(Error::CountMismatch {
            nodes: 0,
            values: 1,
        })?;
        let hi = *points.iter().max().expect("nonempty");
        NodeSet::new(points, lo, hi.max(lo + 1))
    }

    /// The first n nodes, kept inside the same interval.
    pub fn prefix(&self, n: usize) -> Result<Self> {
        if n > self.points.len() {
            return Err(Error::CountMismatch {
                nodes: self.points.len(),
                values: n,
            });
        }
        NodeSet::new(self.points[..n].to_vec(), self.lo, self.hi)
    }

    pub fn points(&self) -> &[i64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// D = hi − lo ≥ 1.
    pub fn span(&self) -> u64 {
        (self.hi - self.lo) as u64
    }

    /// M = max{|lo|, |hi|} ≥ 1.
    pub fn magnitude(&self) -> u64 {
        self.lo.unsigned_abs().max(self.hi.unsigned_abs())
    }
}

/// The monic node polynomial ∏ (X − x_i).
pub fn node_polynomial(nodes: &NodeSet) -> DensePoly {
    let mut acc = DensePoly::one();
    for &x in nodes.points() {
        acc = &acc * &DensePoly::from_integers(&[-x, 1]);
    }
    acc
}

/// The unique polynomial of degree ≤ d through (x_i, values_i), computed
/// by exact Newton divided differences. Requires exactly d+1 nodes with
/// aligned values.
pub fn lagrange_interpolate(
    nodes: &NodeSet,
    values: &[Rational],
    d: usize,
) -> Result<DensePoly> {
    if nodes.len() != values.len() {
        return Err(Error::CountMismatch {
            nodes: nodes.len(),
            values: values.len(),
        });
    }
    if nodes.len() != d + 1 {
        return Err(Error::CountMismatch {
            nodes: nodes.len(),
            values: d + 1,
        });
    }
    let xs = nodes.points();
    let mut dd = values.to_vec();
    for j in 1..dd.len() {
        for i in (j..dd.len()).rev() {
            let diff = Rational::from(xs[i] - xs[i - j]);
            dd[i] = &(&dd[i] - &dd[i - 1]) / &diff;
        }
    }
    // Horner over the Newton basis: p ← p·(X − x_i) + dd_i
    let mut poly = DensePoly::zero();
    for i in (0..dd.len()).rev() {
        poly = &(&poly * &DensePoly::from_integers(&[-xs[i], 1]))
            + &DensePoly::constant(dd[i].clone());
    }
    debug_assert!(poly.degree_or_zero() <= d);
    Ok(poly)
}

/// Result of expanding every scaled Lagrange basis polynomial
/// Q_i = D!·∏_{j≠i}(X − x_j) / ∏_{j≠i}(x_i − x_j) over a node set.
#[derive(Debug, Clone)]
pub struct BasisBoundReport {
    /// Largest sup norm |Q_i|_∞ seen.
    pub max_sup_norm: BigUint,
    /// The bound D!(2M)^d they must all satisfy.
    pub bound: BigUint,
    /// max_i |Q_i|_∞ / bound, always ≤ 1 when `ok`.
    pub max_ratio: f64,
    /// Every |Q_i|_∞ ≤ bound, compared exactly on integers.
    pub ok: bool,
}

/// Expands each Q_i exactly, checks the denominator ∏(x_i − x_j) divides
/// D! (which makes Q_i an integer polynomial), and compares |Q_i|_∞
/// against D!(2M)^d as exact integers.
pub fn lagrange_basis_bound_check(nodes: &NodeSet, d: usize) -> Result<BasisBoundReport> {
    if nodes.len() != d + 1 {
        return Err(Error::CountMismatch {
            nodes: nodes.len(),
            values: d + 1,
        });
    }
    let fact = BigInt::from(factorial(nodes.span()));
    let two_m = BigUint::from(2 * nodes.magnitude());
    let bound = factorial(nodes.span()) * two_m.pow(d as u32);
    let full = node_polynomial(nodes);
    let mut max_sup = BigUint::zero();
    let mut ok = true;
    for (i, &xi) in nodes.points().iter().enumerate() {
        let mut w = BigInt::one();
        for (j, &xj) in nodes.points().iter().enumerate() {
            if j != i {
                w *= BigInt::from(xi - xj);
            }
        }
        if (&fact % &w) != BigInt::zero() {
            return Err(Error::BasisNotIntegral(w.to_string()));
        }
        let (numerator, rem) = full.div_rem(&DensePoly::from_integers(&[-xi, 1]))?;
        debug_assert!(rem.is_zero());
        let q_i = numerator.scale(&(&Rational::from(fact.clone()) / &Rational::from(w)));
        let sup = q_i.inf_norm().expect("integer basis polynomial");
        ok &= sup <= bound;
        max_sup = max_sup.max(sup);
    }
    let max_ratio = if max_sup.is_zero() {
        0.0
    } else {
        (ln_big(&BigInt::from(max_sup.clone())) - ln_big(&BigInt::from(bound.clone()))).exp()
    };
    Ok(BasisBoundReport {
        max_sup_norm: max_sup,
        bound,
        max_ratio,
        ok,
    })
}

/// Coefficient-height bound for a degree-d interpolant through d+1 points
/// of value height ≤ H on nodes in an interval of length D and magnitude M:
/// (d+1)H + D·log D + d·log(2M) + log(d+1).
pub fn poly_bound_basic(degree: u64, value_height: f64, span: u64, magnitude: u64) -> f64 {
    assert!(degree >= 1 && span >= 1 && magnitude >= 1 && value_height >= 0.0);
    let d = degree as f64;
    let big_d = span as f64;
    (d + 1.0) * value_height
        + big_d * big_d.ln()
        + d * (2.0 * magnitude as f64).ln()
        + (d + 1.0).ln()
}

/// Oversampled form: with N > d nodes the height coefficient drops from
/// d+1 to N/(N−d): N/(N−d)·H + D·log D + d·log(2M) + log(d+1).
pub fn poly_bound_oversampled(
    n_points: u64,
    degree: u64,
    value_height: f64,
    span: u64,
    magnitude: u64,
) -> Result<f64> {
    if n_points <= degree {
        return Err(Error::NotOversampled {
            n: n_points,
            d: degree,
        });
    }
    assert!(degree >= 1 && span >= 1 && magnitude >= 1 && value_height >= 0.0);
    let d = degree as f64;
    let big_d = span as f64;
    Ok(n_points as f64 / (n_points - degree) as f64 * value_height
        + big_d * big_d.ln()
        + d * (2.0 * magnitude as f64).ln()
        + (d + 1.0).ln())
}

/// Counts the integers x ∈ [lo, hi] where the value of P is anomalously
/// small at one place: |P(x)| < |P|_∞ / ((2M)^d (d+1)) at the archimedean
/// place, or |P(x)|_p < |D!·P|_p at a finite place (a zero value counts).
/// At most deg P such points exist.
pub fn count_bad_points(p: &DensePoly, lo: i64, hi: i64, place: Place) -> Result<u64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if hi - lo < 1 {
        return Err(Error::IntervalTooShort { lo, hi });
    }
    let span = (hi - lo) as u64;
    let magnitude = lo.unsigned_abs().max(hi.unsigned_abs());
    let d = p.degree().expect("nonzero");
    let mut count = 0;
    match place {
        Place::Archimedean => {
            let pinf = BigInt::from(p.inf_norm()?);
            let factor =
                BigUint::from(2 * magnitude).pow(d as u32) * BigUint::from(d as u64 + 1);
            let factor = BigInt::from(factor);
            for x in lo..=hi {
                let v = p.evaluate_integer(&BigInt::from(x))?;
                if v.magnitude() * factor.magnitude() < *pinf.magnitude() {
                    count += 1;
                }
            }
        }
        Place::Finite(prime) => {
            let threshold = vp_factorial(span, prime) + p.vp(prime)?.max(0) as u64;
            for x in lo..=hi {
                let v = p.evaluate_integer(&BigInt::from(x))?;
                if v.is_zero() || u64::from(vp_int(&v, prime)) > threshold {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// One per-place inequality of the oversampled bound, on an
/// integer-coefficient polynomial P of degree ≤ d through N > d nodes:
/// log max{1, |P|_v} ≤ C_v + (1/(N−d))·Σ_i log max{1, |P(x_i)|_v},
/// with C_∞ = d·log(2M) + log(d+1) and C_p = v_p(D!)·log p.
#[derive(Debug, Clone)]
pub struct LocalBoundCheck {
    pub place: Place,
    pub lhs: f64,
    pub rhs: f64,
}

/// Per-place report: the archimedean place plus every prime ≤ 50 dividing
/// some coefficient of P or some value P(x_i).
#[derive(Debug, Clone)]
pub struct LocalCheckReport {
    pub checks: Vec<LocalBoundCheck>,
    pub ok: bool,
}

const LOCAL_CHECK_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

pub fn oversampled_local_check(
    p: &DensePoly,
    nodes: &NodeSet,
    d: u64,
) -> Result<LocalCheckReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = nodes.len() as u64;
    if n <= d {
        return Err(Error::NotOversampled { n, d });
    }
    let coeffs = p.to_int_coeffs()?;
    let values: Vec<BigInt> = nodes
        .points()
        .iter()
        .map(|&x| p.evaluate_integer(&BigInt::from(x)))
        .collect::<Result<_>>()?;
    let excess = (n - d) as f64;
    let mut checks = Vec::new();

    let lhs = ln_big(&BigInt::from(p.inf_norm()?)).max(0.0);
    let mean: f64 = values
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| ln_big(v).max(0.0))
        .sum::<f64>()
        / excess;
    let rhs = d as f64 * (2.0 * nodes.magnitude() as f64).ln()
        + (d as f64 + 1.0).ln()
        + mean;
    checks.push(LocalBoundCheck {
        place: Place::Archimedean,
        lhs,
        rhs,
    });

    for prime in LOCAL_CHECK_PRIMES {
        let divides_datum = coeffs
            .iter()
            .chain(values.iter())
            .any(|c| !c.is_zero() && vp_int(c, prime) > 0);
        if !divides_datum {
            continue;
        }
        // integer coefficients: |P|_p ≤ 1, so the left side is 0
        let lhs = 0.0;
        let rhs = vp_factorial(nodes.span(), prime) as f64 * (prime as f64).ln();
        checks.push(LocalBoundCheck {
            place: Place::Finite(prime),
            lhs,
            rhs,
        });
    }
    let ok = checks.iter().all(|c| c.lhs <= c.rhs + slack(c.rhs));
    Ok(LocalCheckReport { checks, ok })
}
