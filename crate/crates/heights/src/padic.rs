//! Counting lemmas at finite places.
//!
//! Three self-contained facts used by the main bound:
//!
//! - a set occupying at least a 1/η fraction of an integer interval has a
//!   short subinterval (length ⌈2ηk⌉) holding k+1 of its members
//!   ([`find_dense_subinterval`]);
//! - the primes dividing a fixed integer R contribute at most
//!   2·log log|R| + 3.5 to Σ log p/(p−1) ([`prime_log_sum`]);
//! - the p-adic valuations of a polynomial's values at distinct integer
//!   nodes, each capped at β, sum to at most
//!   d·(β + log D/log p + D/(p−1)) ([`valuation_sum_bound_check`]).

use num::bigint::{BigInt, BigUint};
use num::{Signed, ToPrimitive, Zero};

use crate::factor::{factor_big, is_prime_u64, vp_int};
use crate::height::ln_big;
use crate::poly::DensePoly;
use crate::rational::Rational;
use crate::{Error, Result};

/// A subinterval [lo, hi] of the ambient interval together with the
/// members of S it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubintervalWitness {
    pub lo: i64,
    pub hi: i64,
    /// Members of S inside [lo, hi], in increasing order.
    pub members: Vec<i64>,
}

/// Finds the leftmost subinterval of ⟦a, b⟧ of length ⌈2ηk⌉ containing at
/// least k+1 members of S.
///
/// Requires η ≥ 1, S ⊆ ⟦a, b⟧ with distinct members and |S| ≥ (b−a)/η,
/// and 1 ≤ k ≤ (b−a)/(2η). Under those conditions the window always
/// exists: blocks of ⌈2ηk⌉+1 consecutive integers cover the interval in
/// fewer than |S|/k pieces, so one of them holds k+1 members.
pub fn find_dense_subinterval(
    a: i64,
    b: i64,
    s: &[i64],
    eta: &Rational,
    k: u64,
) -> Result<SubintervalWitness> {
    if b - a < 1 {
        return Err(Error::SubintervalPrecondition(
            "interval must have positive length",
        ));
    }
    let d = b - a;
    if eta < &Rational::from(1) {
        return Err(Error::SubintervalPrecondition("eta must be at least 1"));
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::SubintervalPrecondition(
            "members of S must be distinct",
        ));
    }
    if sorted.first().is_some_and(|&x| x < a) || sorted.last().is_some_and(|&x| x > b) {
        return Err(Error::SubintervalPrecondition("S must lie inside [a, b]"));
    }
    // |S|·η ≥ D, exactly
    if &(&Rational::from(s.len() as i64) * eta) < &Rational::from(d) {
        return Err(Error::SubintervalPrecondition(
            "S must have at least (b - a)/eta members",
        ));
    }
    if k < 1 {
        return Err(Error::SubintervalPrecondition("k must be at least 1"));
    }
    // 2ηk ≤ D, exactly
    let two_eta_k = &(&Rational::from(2) * eta) * &Rational::from(BigInt::from(k));
    if &two_eta_k > &Rational::from(d) {
        return Err(Error::SubintervalPrecondition(
            "k must be at most (b - a)/(2 eta)",
        ));
    }
    let len = two_eta_k
        .as_ratio()
        .ceil()
        .to_integer()
        .to_i64()
        .expect("window length fits i64, being at most b - a");

    // leftmost window: the first run of k+1 consecutive members spanning
    // at most `len` starts it (window starts are monotone in the run index)
    let k = k as usize;
    for i in 0..sorted.len().saturating_sub(k) {
        if i128::from(sorted[i + k]) - i128::from(sorted[i]) <= i128::from(len) {
            let lo = (sorted[i + k] - len).max(a);
            let hi = lo + len;
            let members: Vec<i64> = sorted
                .iter()
                .copied()
                .filter(|&x| lo <= x && x <= hi)
                .collect();
            debug_assert!(members.len() > k);
            return Ok(SubintervalWitness { lo, hi, members });
        }
    }
    unreachable!("pigeonhole: the checked preconditions force a dense window to exist")
}

/// Σ log p/(p−1) over the distinct primes dividing R, and the universal
/// bound 2·log log|R| + 3.5 it satisfies.
#[derive(Debug, Clone, Copy)]
pub struct PrimeLogSum {
    pub sum: f64,
    pub bound: f64,
}

impl PrimeLogSum {
    pub fn holds(&self) -> bool {
        self.sum <= self.bound
    }
}

/// Requires |R| ≥ 2 (a unit or zero has no meaningful prime support).
pub fn prime_log_sum(r: &BigInt) -> Result<PrimeLogSum> {
    if r.magnitude() < &BigUint::from(2u32) {
        return Err(Error::UnitOrZeroArgument(r.to_string()));
    }
    let mut sum = 0.0;
    for (p, _) in factor_big(r) {
        let lp = ln_big(&BigInt::from(p.clone()));
        let pm1 = BigInt::from(p) - BigInt::from(1);
        sum += lp / pm1.to_f64().expect("p - 1 is positive");
    }
    let bound = 2.0 * ln_big(&r.abs()).ln() + 3.5;
    Ok(PrimeLogSum { sum, bound })
}

/// The capped valuation sum Σ_i min{β, v_p(Q(x_i))} over the nodes, and
/// the bound d·(β + log D/log p + D/(p−1)) it satisfies for nonzero
/// integer-coefficient Q with content prime to p.
#[derive(Debug, Clone, Copy)]
pub struct ValuationSumCheck {
    pub lhs: u64,
    pub rhs: f64,
}

impl ValuationSumCheck {
    pub fn holds(&self) -> bool {
        (self.lhs as f64) <= self.rhs
    }
}

/// Requires p prime, Q nonzero with integer coefficients of content prime
/// to p, and distinct nodes inside [lo, hi] with hi − lo ≥ 1. A node where
/// Q vanishes contributes the cap β.
pub fn valuation_sum_bound_check(
    q: &DensePoly,
    p: u64,
    lo: i64,
    hi: i64,
    nodes: &[i64],
    beta: u32,
) -> Result<ValuationSumCheck> {
    assert!(is_prime_u64(p), "valuation_sum_bound_check: p must be prime");
    if hi - lo < 1 {
        return Err(Error::IntervalTooShort { lo, hi });
    }
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.vp(p)? != 0 {
        return Err(Error::PrimeDividesContent { p });
    }
    q.to_int_coeffs()?;
    let mut sorted = nodes.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateNode(w[0]));
        }
    }
    for &x in nodes {
        if x < lo || x > hi {
            return Err(Error::NodeOutOfRange { node: x, lo, hi });
        }
    }
    let mut lhs = 0u64;
    for &x in nodes {
        let v = q.evaluate_integer(&BigInt::from(x)).expect("integer coefficients");
        let val = if v.is_zero() {
            beta
        } else {
            beta.min(vp_int(&v, p))
        };
        lhs += u64::from(val);
    }
    let d = q.degree().expect("nonzero") as f64;
    let big_d = (hi - lo) as f64;
    let rhs = d * (f64::from(beta) + big_d.ln() / (p as f64).ln() + big_d / (p as f64 - 1.0));
    Ok(ValuationSumCheck { lhs, rhs })
}
