//! Subresultants and rational-fraction reconstruction from values.
//!
//! The k-th subresultant of two integer polynomials T, Z is defined by
//! determinants of submatrices of their Sylvester matrix: it produces a
//! triple (R, U, V) with R = U·T + V·Z, deg R ≤ k, deg U ≤ deg Z − k − 1,
//! deg V ≤ deg T − k − 1, and all three have integer coefficients whose
//! heights are controlled by the heights of T and Z alone — no node data
//! enters the bound. That control is the engine behind
//! [`cauchy_interpolate`]: interpolate the values by a single polynomial
//! S, clear denominators (a, T = aS), and take the dP-th subresultant of T
//! against the node polynomial Z; then R/(aU) is the unique rational
//! fraction of the requested degree profile through the data whenever one
//! exists.
//!
//! Determinants are computed by fraction-free (Bareiss) elimination, so
//! every intermediate quantity stays an integer.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::interpolate::{lagrange_interpolate, node_polynomial, NodeSet};
use crate::poly::{canonicalize_fraction, DensePoly, RationalFraction};
use crate::rational::Rational;
use crate::{Error, Result};

/// Determinant of a square integer matrix by Bareiss one-step
/// fraction-free elimination with row pivoting. The empty matrix has
/// determinant 1.
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev; // exact by Bareiss' identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// The k-th subresultant triple (R, U, V) of T and Z, satisfying
/// R = U·T + V·Z with the degree bounds listed on [`subresultant`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubresultantTriple {
    pub r: DensePoly,
    pub u: DensePoly,
    pub v: DensePoly,
    pub k: usize,
    t: DensePoly,
    z: DensePoly,
}

impl SubresultantTriple {
    /// R = U·T + V·Z, checked by exact polynomial arithmetic.
    pub fn identity_holds(&self) -> bool {
        &(&self.u * &self.t) + &(&self.v * &self.z) == self.r
    }

    /// deg R ≤ k, deg U ≤ deg Z − k − 1, deg V ≤ deg T − k − 1
    /// (zero polynomials pass vacuously).
    pub fn degrees_ok(&self) -> bool {
        let m = self.t.degree_or_zero();
        let n = self.z.degree_or_zero();
        self.r.degree().map_or(true, |d| d <= self.k)
            && self.u.degree().map_or(true, |d| d + self.k + 1 <= n)
            && self.v.degree().map_or(true, |d| d + self.k + 1 <= m)
    }
}

/// The k-th subresultant of T (degree m ≥ 1) and Z (degree n ≥ 1), for
/// 0 ≤ k with k ≤ min(m, n) and m + n − 2k ≥ 1. The triple satisfies
/// R = U·T + V·Z, deg R ≤ k, deg U ≤ n − k − 1, deg V ≤ m − k − 1, and
/// when T, Z have integer coefficients so do R, U, V.
pub fn subresultant(t: &DensePoly, z: &DensePoly, k: usize) -> Result<SubresultantTriple> {
    let (Some(m), Some(n)) = (t.degree(), z.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    subresultant_at_degrees(t, z, m, n, k)
}

/// Subresultant at *formal* degrees dt ≥ deg T, dz ≥ deg Z: T and Z are
/// treated as elements of the spaces of polynomials of degree ≤ dt, ≤ dz,
/// with zero leading coefficients allowed. The reconstruction pipeline
/// needs this because a·S may have degree < dP + dQ.
pub(crate) fn subresultant_at_degrees(
    t: &DensePoly,
    z: &DensePoly,
    dt: usize,
    dz: usize,
    k: usize,
) -> Result<SubresultantTriple> {
    if k > dt.min(dz) || dt + dz < 2 * k + 1 {
        return Err(Error::SubresultantIndex {
            k,
            deg_t: dt,
            deg_z: dz,
        });
    }
    debug_assert!(t.degree_or_zero() <= dt && z.degree_or_zero() <= dz);
    let tc = t.to_int_coeffs()?;
    let zc = z.to_int_coeffs()?;
    let coeff = |c: &[BigInt], i: usize| -> BigInt {
        c.get(i).cloned().unwrap_or_else(BigInt::zero)
    };

    // Sylvester-like matrix: rows X^{dz-k-1}T … T then X^{dt-k-1}Z … Z;
    // columns hold the coefficients of degrees dt+dz-k-1 down to k+1, and
    // the last column holds the row polynomial itself. Expanding the
    // determinant along that last column yields R directly, and grouping
    // the expansion by which input each row shifts yields U and V.
    let rows_t = dz - k;
    let rows_z = dt - k;
    let size = rows_t + rows_z; // = dt + dz − 2k ≥ 1
    let top_degree = dt + dz - k - 1;

    // row r is X^{shift} times (T for r < rows_t, else Z)
    let row_coeff = |r: usize, degree: usize| -> BigInt {
        let (c, shift) = if r < rows_t {
            (&tc, rows_t - 1 - r)
        } else {
            (&zc, rows_z - 1 - (r - rows_t))
        };
        if degree < shift {
            BigInt::zero()
        } else {
            coeff(c, degree - shift)
        }
    };

    let mut u = vec![BigInt::zero(); rows_t.max(1)];
    let mut v = vec![BigInt::zero(); rows_z.max(1)];
    for r in 0..size {
        // minor: drop row r, keep the size−1 coefficient columns
        let minor: Vec<Vec<BigInt>> = (0..size)
            .filter(|&i| i != r)
            .map(|i| (0..size - 1).map(|j| row_coeff(i, top_degree - j)).collect())
            .collect();
        let det = det_bareiss(minor);
        let signed = if (r + size - 1) % 2 == 0 { det } else { -det };
        if r < rows_t {
            u[rows_t - 1 - r] = signed;
        } else {
            v[rows_z - 1 - (r - rows_t)] = signed;
        }
    }
    let u = DensePoly::from_int_coeffs(u);
    let v = DensePoly::from_int_coeffs(v);
    let r = &(&u * t) + &(&v * z);
    let triple = SubresultantTriple {
        r,
        u,
        v,
        k,
        t: t.clone(),
        z: z.clone(),
    };
    debug_assert!(triple.degrees_ok());
    Ok(triple)
}

/// The resultant Res(P, Q): the 0-th subresultant's R, a constant. Two
/// constant inputs have resultant 1 (empty Sylvester matrix).
pub fn resultant(p: &DensePoly, q: &DensePoly) -> Result<BigInt> {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if m == 0 && n == 0 {
        return Ok(BigInt::one());
    }
    let triple = subresultant_at_degrees(p, q, m, n, 0)?;
    debug_assert!(triple.r.degree_or_zero() == 0);
    let c = triple.r.coeff(0);
    debug_assert!(c.is_integer());
    Ok(c.num().clone())
}

/// Content-and-sign-normalized version: integer coefficients with content
/// 1 and positive leading coefficient.
fn primitive_part(p: &DensePoly) -> DensePoly {
    let (_, cleared) = p.cleared();
    let content = cleared.content_int().expect("cleared is integral");
    let mut prim = cleared.scale(&Rational::from(content).recip().expect("nonzero content"));
    if prim.leading().expect("nonzero input").is_negative() {
        prim = -prim;
    }
    prim
}

/// GCD of two polynomials over the rationals, returned as a primitive
/// integer polynomial with positive leading coefficient (constant 1 for
/// coprime inputs). Uses the subresultant polynomial-remainder sequence,
/// which keeps every intermediate remainder integral with predictable
/// coefficient growth.
pub fn poly_gcd(a: &DensePoly, b: &DensePoly) -> DensePoly {
    if a.is_zero() {
        return if b.is_zero() {
            DensePoly::zero()
        } else {
            primitive_part(b)
        };
    }
    if b.is_zero() {
        return primitive_part(a);
    }
    let (mut f, mut g) = if a.degree_or_zero() >= b.degree_or_zero() {
        (primitive_part(a), primitive_part(b))
    } else {
        (primitive_part(b), primitive_part(a))
    };
    // Knuth's g: the dividend's leading coefficient, lagging one round
    let mut lag = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = f.degree_or_zero() - g.degree_or_zero();
        let g_lc = g.leading().expect("nonzero in PRS loop").num().clone();
        // pseudo-remainder: lc(g)^{δ+1}·f mod g is integral
        let scaled = f.scale(&Rational::from(g_lc.pow(delta as u32 + 1)));
        let (_, r) = scaled.div_rem(&g).expect("g nonzero");
        if r.is_zero() {
            return primitive_part(&g);
        }
        let divisor = &lag * &h.pow(delta as u32);
        let next = r.scale(&Rational::from(divisor).recip().expect("nonzero divisor"));
        debug_assert!(next.has_integer_coeffs(), "subresultant PRS stays integral");
        f = g;
        g = next;
        lag = f.leading().expect("nonzero in PRS loop").num().clone();
        h = match delta {
            0 => h,
            1 => lag.clone(),
            _ => {
                let num = lag.pow(delta as u32);
                let den = h.pow(delta as u32 - 1);
                debug_assert!((&num % &den).is_zero());
                num / den
            }
        };
    }
}

/// The unique rational fraction P/Q with deg P ≤ dP, deg Q ≤ dQ through
/// the dP + dQ + 1 data points, when one exists.
///
/// Pipeline: interpolate the values by one polynomial S of degree
/// ≤ dP + dQ, clear denominators into (a, T = aS), and take the dP-th
/// subresultant of T (at formal degree dP + dQ) against the node
/// polynomial Z = ∏(X − x_i). The triple gives R = U·T + V·Z, so
/// R ≡ aU·S mod Z: the fraction R/(aU) agrees with the data wherever its
/// denominator is nonzero. A final exact evaluation at every node either
/// confirms the fit or reports that no fraction of this profile exists.
pub fn cauchy_interpolate(
    nodes: &NodeSet,
    values: &[Rational],
    d_p: usize,
    d_q: usize,
) -> Result<RationalFraction> {
    if nodes.len() != values.len() {
        return Err(Error::CountMismatch {
            nodes: nodes.len(),
            values: values.len(),
        });
    }
    if nodes.len() != d_p + d_q + 1 {
        return Err(Error::CountMismatch {
            nodes: nodes.len(),
            values: d_p + d_q + 1,
        });
    }
    if values.iter().all(|v| v.is_zero()) {
        return Ok(RationalFraction::from(DensePoly::zero()));
    }
    let s = lagrange_interpolate(nodes, values, d_p + d_q)?;
    let (a, t) = s.cleared();
    let z = node_polynomial(nodes);
    let triple = subresultant_at_degrees(&t, &z, d_p + d_q, d_p + d_q + 1, d_p)?;
    if triple.u.is_zero() {
        return Err(Error::NoFractionFits);
    }
    let den = triple.u.scale(&Rational::from(a));
    let fraction = canonicalize_fraction(&triple.r, &den)?;
    for (&x, want) in nodes.points().iter().zip(values) {
        match fraction.evaluate(&Rational::from(x)) {
            Ok(got) if &got == want => {}
            _ => return Err(Error::NoFractionFits),
        }
    }
    Ok(fraction)
}

/// Reconstruction when only the total degree is known: tries every split
/// dP + dQ = total for total = d down to the smallest that the node count
/// allows, using the first dP + dQ + 1 nodes for each candidate and
/// checking the result against *all* values. Needs at least 2d + 1 nodes
/// — that many points determine a fraction of numerator and denominator
/// degree ≤ d uniquely, so the first fit is the only one.
pub fn cauchy_interpolate_auto(
    nodes: &NodeSet,
    values: &[Rational],
    d: usize,
) -> Result<RationalFraction> {
    if nodes.len() != values.len() {
        return Err(Error::CountMismatch {
            nodes: nodes.len(),
            values: values.len(),
        });
    }
    let need = 2 * d + 1;
    if nodes.len() < need {
        return Err(Error::NotOversampled {
            n: nodes.len() as u64,
            d: 2 * d as u64,
        });
    }
    if values.iter().all(|v| v.is_zero()) {
        return Ok(RationalFraction::from(DensePoly::zero()));
    }
    for total in 0..=2 * d {
        for d_p in total.saturating_sub(d)..=total.min(d) {
            let d_q = total - d_p;
            let m = total + 1;
            let sub = nodes.prefix(m)?;
            let candidate = match cauchy_interpolate(&sub, &values[..m], d_p, d_q) {
                Ok(f) => f,
                Err(Error::NoFractionFits) => continue,
                Err(e) => return Err(e),
            };
            let fits_all = nodes.points().iter().zip(values).all(|(&x, want)| {
                matches!(candidate.evaluate(&Rational::from(x)), Ok(got) if &got == want)
            });
            if fits_all {
                return Ok(candidate);
            }
        }
    }
    Err(Error::NoFractionFits)
}

/// Height bounds for the k-th subresultant triple of P (degree dP, height
/// hP) and Q (degree dQ, height hQ), with s = dP + dQ, valid for
/// 0 ≤ k ≤ min(dP, dQ) − 1 (so every multiplicity below is nonnegative):
///
/// - h(R) ≤ (dQ−k)·hP + (dP−k)·hQ + ((s−2k)/2)·log(s−2k)
/// - h(U) ≤ (dQ−k−1)·hP + (dP−k)·hQ + ((s−2k−1)/2)·log(s−2k−1)
/// - h(V) ≤ (dQ−k)·hP + (dP−k−1)·hQ + ((s−2k−1)/2)·log(s−2k−1)
#[derive(Debug, Clone, Copy)]
pub struct FractionHeightBounds {
    pub r: f64,
    pub u: f64,
    pub v: f64,
}

pub fn subresultant_height_bound(
    d_p: usize,
    d_q: usize,
    k: usize,
    h_p: f64,
    h_q: f64,
) -> Result<FractionHeightBounds> {
    if k >= d_p.min(d_q) {
        return Err(Error::SubresultantIndex {
            k,
            deg_t: d_p,
            deg_z: d_q,
        });
    }
    let (dp, dq, kk) = (d_p as f64, d_q as f64, k as f64);
    let s = dp + dq;
    let hadamard = |rows: f64| if rows <= 1.0 { 0.0 } else { (rows / 2.0) * rows.ln() };
    Ok(FractionHeightBounds {
        r: (dq - kk) * h_p + (dp - kk) * h_q + hadamard(s - 2.0 * kk),
        u: (dq - kk - 1.0) * h_p + (dp - kk) * h_q + hadamard(s - 2.0 * kk - 1.0),
        v: (dq - kk) * h_p + (dp - kk - 1.0) * h_q + hadamard(s - 2.0 * kk - 1.0),
    })
}

/// Height bound for the rational fraction of numerator and denominator
/// degree ≤ d reconstructed from 2d + 1 values of height ≤ H at nodes in
/// an interval of length D and magnitude M:
/// (d+1)(2d+1)·H + (d+1)·D·log D + (4d² + 3d)·log(2M) + (2d+2)·log(2d+1).
pub fn fraction_bound_basic(degree: u64, value_height: f64, span: u64, magnitude: u64) -> f64 {
    assert!(degree >= 1 && span >= 1 && magnitude >= 1 && value_height >= 0.0);
    let d = degree as f64;
    let big_d = span as f64;
    (d + 1.0) * (2.0 * d + 1.0) * value_height
        + (d + 1.0) * big_d * big_d.ln()
        + (4.0 * d * d + 3.0 * d) * (2.0 * magnitude as f64).ln()
        + (2.0 * d + 2.0) * (2.0 * d + 1.0).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::fraction_height;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> DensePoly {
        s.parse().unwrap()
    }

    fn nodes(points: &[i64]) -> NodeSet {
        NodeSet::spanning(points.to_vec()).unwrap()
    }

    #[test]
    fn test_det_bareiss() {
        assert_eq!(det_bareiss(vec![]), BigInt::one());
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(det_bareiss(m(&[&[7]])), BigInt::from(7));
        assert_eq!(det_bareiss(m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        // needs a row swap
        assert_eq!(det_bareiss(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        // singular
        assert_eq!(
            det_bareiss(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])),
            BigInt::zero()
        );
        assert_eq!(
            det_bareiss(m(&[&[2, 0, 1], &[1, 3, 2], &[0, 1, 4]])),
            BigInt::from(21)
        );
    }

    #[test]
    fn test_subresultant_worked_examples() {
        // T = X−1, Z = X+1, k = 0: R = 2, U = −1, V = 1
        let tr = subresultant(&poly("-1,1"), &poly("1,1"), 0).unwrap();
        assert_eq!(tr.r, poly("2"));
        assert_eq!(tr.u, poly("-1"));
        assert_eq!(tr.v, poly("1"));
        assert!(tr.identity_holds() && tr.degrees_ok());

        // T = X², Z = X, k = 0: common root ⇒ R = 0
        let tr = subresultant(&poly("0,0,1"), &poly("0,1"), 0).unwrap();
        assert_eq!(tr.r, DensePoly::zero());
        assert_eq!(tr.u, poly("1"));
        assert_eq!(tr.v, poly("0,-1"));
        assert!(tr.identity_holds() && tr.degrees_ok());

        // degenerate 1×1 matrix: T = X, Z = 1 at k = 0
        let tr = subresultant_at_degrees(&poly("0,1"), &poly("1"), 1, 0, 0).unwrap();
        assert_eq!(tr.r, DensePoly::one());
        assert_eq!(tr.u, DensePoly::zero());
        assert_eq!(tr.v, DensePoly::one());
        assert!(tr.identity_holds() && tr.degrees_ok());
    }

    #[test]
    fn test_subresultant_index_errors() {
        // k beyond min degree
        assert!(matches!(
            subresultant(&poly("0,1"), &poly("1,1"), 2),
            Err(Error::SubresultantIndex { .. })
        ));
        // k = min degree with matrix size 0: X against X at k = 1
        assert!(matches!(
            subresultant(&poly("0,1"), &poly("0,1"), 1),
            Err(Error::SubresultantIndex { .. })
        ));
        assert!(matches!(
            subresultant(&DensePoly::zero(), &poly("1,1"), 0),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn test_resultant_examples() {
        assert_eq!(resultant(&poly("1,1"), &poly("-1,1")).unwrap(), BigInt::from(-2));
        assert_eq!(resultant(&poly("0,1"), &poly("1")).unwrap(), BigInt::one());
        assert_eq!(resultant(&poly("3"), &poly("5")).unwrap(), BigInt::one());
        // Res(X²−1, X²+1) = 4 (difference of the evaluations at ±1)
        assert_eq!(
            resultant(&poly("-1,0,1"), &poly("1,0,1")).unwrap(),
            BigInt::from(4)
        );
        // shares a root ⇒ 0
        assert_eq!(
            resultant(&poly("-1,0,1"), &poly("-1,1")).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn test_poly_gcd_examples() {
        // gcd(X²−1, X−1) = X−1
        assert_eq!(poly_gcd(&poly("-1,0,1"), &poly("-1,1")), poly("-1,1"));
        // coprime ⇒ 1
        assert_eq!(poly_gcd(&poly("1,1"), &poly("-1,1")), DensePoly::one());
        // content is stripped, sign normalized
        assert_eq!(poly_gcd(&poly("-2,-2"), &poly("-4,-4")), poly("1,1"));
        // gcd((X−1)²(X+2), (X−1)(X+2)²) = (X−1)(X+2) = X²+X−2
        let a = &(&poly("-1,1") * &poly("-1,1")) * &poly("2,1");
        let b = &poly("-1,1") * &(&poly("2,1") * &poly("2,1"));
        assert_eq!(poly_gcd(&a, &b), poly("-2,1,1"));
        // zero handling
        assert_eq!(poly_gcd(&DensePoly::zero(), &poly("0,-3")), poly("0,1"));
        assert_eq!(poly_gcd(&DensePoly::zero(), &DensePoly::zero()), DensePoly::zero());
        // rational inputs are fine: gcd(X/2 − 1/2, X − 1) = X − 1
        assert_eq!(poly_gcd(&poly("-1/2,1/2"), &poly("-1,1")), poly("-1,1"));
    }

    #[test]
    fn test_cauchy_worked_examples() {
        // values of 1/(X+1) at {0, 1}: dP = 0, dQ = 1
        let f = cauchy_interpolate(&nodes(&[0, 1]), &[q("1"), q("1/2")], 0, 1).unwrap();
        assert_eq!(f.num(), &poly("1"));
        assert_eq!(f.den(), &poly("1,1"));

        // a polynomial through a fraction profile: X at {0, 1} with dP = 1, dQ = 0
        let f = cauchy_interpolate(&nodes(&[0, 1]), &[q("0"), q("1")], 1, 0).unwrap();
        assert_eq!(f.num(), &poly("0,1"));
        assert_eq!(f.den(), &DensePoly::one());

        // (X²−1)/(X²+1) from five values
        let target = RationalFraction::new(poly("-1,0,1"), poly("1,0,1")).unwrap();
        let pts = [0i64, 1, 2, -1, -2];
        let vals: Vec<Rational> = pts
            .iter()
            .map(|&x| target.evaluate(&Rational::from(x)).unwrap())
            .collect();
        let f = cauchy_interpolate(&nodes(&pts), &vals, 2, 2).unwrap();
        assert_eq!(f, target);
    }

    #[test]
    fn test_cauchy_all_zero_values() {
        let f = cauchy_interpolate(&nodes(&[0, 1, 2]), &[q("0"), q("0"), q("0")], 1, 1).unwrap();
        assert!(f.num().is_zero());
        assert_eq!(f.den(), &DensePoly::one());
    }

    #[test]
    fn test_cauchy_no_fit() {
        // values (0, 1, 4) with dP = 0, dQ = 2: a constant numerator would
        // have to vanish at x = 0 and be nonzero elsewhere
        assert!(matches!(
            cauchy_interpolate(&nodes(&[0, 1, 2]), &[q("0"), q("1"), q("4")], 0, 2),
            Err(Error::NoFractionFits)
        ));
    }

    #[test]
    fn test_cauchy_auto_examples() {
        // 1/(X+1) at three nodes with d = 1
        let f =
            cauchy_interpolate_auto(&nodes(&[0, 1, 2]), &[q("1"), q("1/2"), q("1/3")], 1).unwrap();
        assert_eq!(f.num(), &DensePoly::one());
        assert_eq!(f.den(), &poly("1,1"));

        // constant data picks the (0,0) split first
        let f = cauchy_interpolate_auto(&nodes(&[0, 1, 2]), &[q("5"), q("5"), q("5")], 1).unwrap();
        assert_eq!(f.num(), &poly("5"));
        assert_eq!(f.den(), &DensePoly::one());

        // (2X+1)/(X−5) at five nodes with d = 2: auto finds the (1,1) split
        let target = RationalFraction::new(poly("1,2"), poly("-5,1")).unwrap();
        let pts = [0i64, 1, 2, 3, 4];
        let vals: Vec<Rational> = pts
            .iter()
            .map(|&x| target.evaluate(&Rational::from(x)).unwrap())
            .collect();
        let f = cauchy_interpolate_auto(&nodes(&pts), &vals, 2).unwrap();
        assert_eq!(f, target);

        // X² sampled at five nodes with budget d = 1: nothing of total
        // degree ≤ 2 fits all five points
        let vals: Vec<Rational> = [0i64, 1, 2, 3, 4].iter().map(|&x| q(&(x * x).to_string())).collect();
        assert!(matches!(
            cauchy_interpolate_auto(&nodes(&[0, 1, 2, 3, 4]), &vals, 1),
            Err(Error::NoFractionFits)
        ));

        // too few nodes
        assert!(matches!(
            cauchy_interpolate_auto(&nodes(&[0, 1]), &[q("1"), q("2")], 1),
            Err(Error::NotOversampled { n: 2, d: 2 })
        ));
    }

    #[test]
    fn test_subresultant_height_bound_values() {
        // dP = dQ = 1, k = 0: h(R) ≤ hP + hQ + log 2, h(U) ≤ hQ, h(V) ≤ hP
        let b = subresultant_height_bound(1, 1, 0, 2.0, 3.0).unwrap();
        assert!((b.r - (2.0 + 3.0 + 2f64.ln())).abs() < 1e-12);
        assert!((b.u - 3.0).abs() < 1e-12);
        assert!((b.v - 2.0).abs() < 1e-12);
        assert!(matches!(
            subresultant_height_bound(1, 1, 1, 0.0, 0.0),
            Err(Error::SubresultantIndex { .. })
        ));
    }

    #[test]
    fn test_fraction_bound_values() {
        // (d=1, H=0, D=2, M=2) → 4 log 2 + 7 log 4 + 4 log 3
        let b = fraction_bound_basic(1, 0.0, 2, 2);
        let expect = 2.0 * 2.0 * 2f64.ln() + 7.0 * 4f64.ln() + 4.0 * 3f64.ln();
        assert!((b - expect).abs() < 1e-12);
        // (d=2, H=0, D=4, M=4) → 12 log 4 + 22 log 8 + 6 log 5
        let b = fraction_bound_basic(2, 0.0, 4, 4);
        let expect = 12.0 * 4f64.ln() + 22.0 * 8f64.ln() + 6.0 * 5f64.ln();
        assert!((b - expect).abs() < 1e-12);
    }

    fn int_poly(max_deg: usize) -> impl Strategy<Value = DensePoly> {
        proptest::collection::vec(-50i64..50, 1..=max_deg + 1)
            .prop_map(|cs| DensePoly::from_integers(&cs))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        /// the triple's identity and degree bounds hold for every valid k,
        /// and the three height bounds hold wherever they are defined
        /// (k strictly below the smaller degree)
        #[test]
        fn triple_invariants_and_heights(t in int_poly(5), z in int_poly(5)) {
            let (m, n) = (t.degree().unwrap(), z.degree().unwrap());
            let (hp, hq) = (t.height().value(), z.height().value());
            for k in 0..=m.min(n) {
                if m + n < 2 * k + 1 {
                    continue;
                }
                let tr = subresultant(&t, &z, k).unwrap();
                prop_assert!(tr.identity_holds());
                prop_assert!(tr.degrees_ok());
                if k + 1 <= m.min(n) {
                    let b = subresultant_height_bound(m, n, k, hp, hq).unwrap();
                    let eps = 1e-9;
                    prop_assert!(tr.r.height().value() <= b.r + eps * (1.0 + b.r));
                    prop_assert!(tr.u.height().value() <= b.u + eps * (1.0 + b.u));
                    prop_assert!(tr.v.height().value() <= b.v + eps * (1.0 + b.v));
                }
            }
        }

        /// gcd divides both inputs and is commutative
        #[test]
        fn gcd_divides(a in int_poly(4), b in int_poly(4)) {
            let g = poly_gcd(&a, &b);
            prop_assert!(!g.is_zero());
            let (_, ra) = a.div_rem(&g).unwrap();
            let (_, rb) = b.div_rem(&g).unwrap();
            prop_assert!(ra.is_zero());
            prop_assert!(rb.is_zero());
            prop_assert_eq!(poly_gcd(&b, &a), g);
        }

        /// a planted common factor always shows up in the gcd
        #[test]
        fn gcd_catches_planted_factor(a in int_poly(3), b in int_poly(3), root in -10i64..10) {
            let factor = DensePoly::from_integers(&[-root, 1]);
            let g = poly_gcd(&(&a * &factor), &(&b * &factor));
            let (_, r) = g.div_rem(&factor).unwrap();
            prop_assert!(r.is_zero());
        }

        /// resultant is zero exactly when the inputs share a factor
        #[test]
        fn resultant_zero_iff_common_factor(a in int_poly(4), b in int_poly(4)) {
            prop_assume!(a.degree().unwrap() + b.degree().unwrap() >= 1);
            let res = resultant(&a, &b).unwrap();
            let g = poly_gcd(&a, &b);
            prop_assert_eq!(res.is_zero(), g.degree_or_zero() >= 1);
        }

        /// reconstructing a random reduced fraction from its own values
        /// returns it exactly, and its height obeys the reconstruction bound
        #[test]
        fn cauchy_roundtrip(num in int_poly(2), den in int_poly(2), start in -30i64..30) {
            let Ok(target) = RationalFraction::new(num, den) else {
                return Ok(());
            };
            let (dp, dq) = (target.num().degree_or_zero(), target.den().degree_or_zero());
            let mut pts = Vec::new();
            let mut vals = Vec::new();
            let mut x = start;
            while pts.len() < dp + dq + 1 {
                if let Ok(v) = target.evaluate(&Rational::from(x)) {
                    pts.push(x);
                    vals.push(v);
                }
                x += 1;
            }
            let set = nodes(&pts);
            let f = cauchy_interpolate(&set, &vals, dp, dq).unwrap();
            prop_assert_eq!(&f, &target);

            let d = dp.max(dq).max(1) as u64;
            if set.len() == 2 * d as usize + 1 {
                let h_vals = vals.iter().map(|v| v.height().value()).fold(0.0, f64::max);
                let bound = fraction_bound_basic(d, h_vals, set.span(), set.magnitude());
                prop_assert!(fraction_height(&f).value() <= bound + 1e-9 * (1.0 + bound));
            }
        }

        /// auto reconstruction recovers a fraction from oversampled data
        /// without being told the degree split
        #[test]
        fn cauchy_auto_roundtrip(num in int_poly(2), den in int_poly(2), start in -30i64..30) {
            let Ok(target) = RationalFraction::new(num, den) else {
                return Ok(());
            };
            let d = target.num().degree_or_zero().max(target.den().degree_or_zero()).max(1);
            let mut pts = Vec::new();
            let mut vals = Vec::new();
            let mut x = start;
            while pts.len() < 2 * d + 1 {
                if let Ok(v) = target.evaluate(&Rational::from(x)) {
                    pts.push(x);
                    vals.push(v);
                }
                x += 1;
            }
            let f = cauchy_interpolate_auto(&nodes(&pts), &vals, d).unwrap();
            prop_assert_eq!(f, target);
        }
    }
}
