//! Height bounds for rational fractions recovered from their values at
//! many integer points, and machinery to verify them empirically.
//!
//! The central inequality: if F = P/Q has degree at most d, its values on
//! a dense enough subset S of an integer interval of length D all have
//! height at most H, and D ≥ max{ηd³H, 4ηd}, then
//!
//! ```text
//! h(F) ≤ H + 960·η·d·log(ηdH) + d·log(2M) + log(d+1)
//! ```
//!
//! where M bounds the magnitude of the interval's endpoints. A corollary
//! for fractions of slow height growth — h(F(x)) ≤ c·max{1, d·log d +
//! d·h(x)} away from finitely many poles — bounds h(F) by C·d·log(4d)
//! with C explicit in c and the number of excluded points.
//!
//! Every checker returns a [`BoundReport`] carrying the bound, the
//! measured quantity, and whether the hypotheses were actually satisfied,
//! so that a "pass" can never come from a vacuous instance.

use num::bigint::BigInt;
use num::{Integer, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cauchy::{fraction_bound_basic, resultant};
use crate::height::slack;
use crate::poly::{DensePoly, RationalFraction};
use crate::rational::Rational;
use crate::{Error, Result};

/// The explicit constant in the main growth bound over Q.
pub const RATIONAL_MAIN_CONSTANT: f64 = 960.0;

/// Outcome of one empirical bound check: the claimed bound, the measured
/// quantity, and whether the inequality's hypotheses held on this input.
/// `passed` requires both `hypotheses_ok` and `measured ≤ bound + slack`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub hypotheses_ok: bool,
    pub bound: f64,
    pub measured: f64,
    pub passed: bool,
    /// Hash of the instance, so reports are traceable to their inputs.
    pub inputs_digest: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub notes: String,
}

impl BoundReport {
    pub fn from_parts(
        name: impl Into<String>,
        hypotheses_ok: bool,
        bound: f64,
        measured: f64,
        inputs_digest: String,
        notes: impl Into<String>,
    ) -> Self {
        let passed = hypotheses_ok && measured <= bound + slack(bound);
        BoundReport {
            name: name.into(),
            hypotheses_ok,
            bound,
            measured,
            passed,
            inputs_digest,
            notes: notes.into(),
        }
    }
}

/// First 16 hex characters of the SHA-256 of the given parts,
/// NUL-separated.
pub(crate) fn digest_hex(parts: &[String]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p.as_bytes());
        hasher.update([0u8]);
    }
    let out = hasher.finalize();
    out.iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// One instance of the main growth bound: a fraction, an interval
/// ⟦lo, hi⟧, a pole-free subset of evaluation points, the density
/// parameter η ≥ 1, and a ceiling H for the value heights.
#[derive(Debug, Clone)]
pub struct MainTheoremInput {
    pub f: RationalFraction,
    pub lo: i64,
    pub hi: i64,
    pub points: Vec<i64>,
    pub eta: Rational,
    pub value_height: f64,
}

impl MainTheoremInput {
    /// D = hi − lo.
    pub fn span(&self) -> u64 {
        (self.hi - self.lo) as u64
    }

    /// M = max{|lo|, |hi|, 1}.
    pub fn magnitude(&self) -> u64 {
        self.lo.unsigned_abs().max(self.hi.unsigned_abs()).max(1)
    }

    /// Degree parameter d ≥ 1.
    pub fn degree(&self) -> u64 {
        (self.f.degree() as u64).max(1)
    }

    fn digest(&self) -> String {
        digest_hex(&[
            self.f.to_string(),
            self.lo.to_string(),
            self.hi.to_string(),
            format!("{:?}", self.points),
            self.eta.to_string(),
            format!("{:.17e}", self.value_height),
        ])
    }
}

/// Which of the main bound's hypotheses hold on an instance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MainHypotheses {
    /// η ≥ 1.
    pub eta_ok: bool,
    /// H ≥ max{4, log 2M}.
    pub height_floor_ok: bool,
    /// h(F(x)) ≤ H for every evaluation point.
    pub values_ok: bool,
    /// |S| ≥ D/η (checked in exact arithmetic).
    pub cardinality_ok: bool,
    /// D ≥ max{η·d³·H, 4·η·d}.
    pub span_ok: bool,
}

impl MainHypotheses {
    pub fn all(&self) -> bool {
        self.eta_ok
            && self.height_floor_ok
            && self.values_ok
            && self.cardinality_ok
            && self.span_ok
    }
}

/// Checks every hypothesis of the main bound on the given instance.
/// Structural defects are errors: points outside the interval or
/// duplicated, and poles among the evaluation points.
pub fn check_main_hypotheses(input: &MainTheoremInput) -> Result<MainHypotheses> {
    if input.hi - input.lo < 1 {
        return Err(Error::IntervalTooShort {
            lo: input.lo,
            hi: input.hi,
        });
    }
    let mut sorted = input.points.clone();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateNode(w[0]));
        }
    }
    for &x in &input.points {
        if x < input.lo || x > input.hi {
            return Err(Error::NodeOutOfRange {
                node: x,
                lo: input.lo,
                hi: input.hi,
            });
        }
    }

    let eta_ok = input.eta >= Rational::one();
    let h = input.value_height;
    let m = input.magnitude();
    let height_floor_ok = h >= 4.0 && h >= (2.0 * m as f64).ln();

    let mut values_ok = true;
    for &x in &input.points {
        let value = input.f.evaluate_at_integer(x)?;
        let hv = value.height().value();
        if hv > h + slack(h) {
            values_ok = false;
        }
    }

    // |S| ≥ D/η  ⟺  |S|·η ≥ D, decided exactly
    let d_span = input.span();
    let card = &Rational::from(input.points.len() as i64) * &input.eta;
    let cardinality_ok = card >= Rational::from(d_span as i64);

    let d = input.degree();
    let eta_f = input.eta.as_ratio().to_f64().unwrap_or(f64::INFINITY);
    let four_eta_d = &(&Rational::from(4) * &input.eta) * &Rational::from(d as i64);
    let span_ok = (d_span as f64) >= eta_f * (d * d * d) as f64 * h
        && Rational::from(d_span as i64) >= four_eta_d;

    Ok(MainHypotheses {
        eta_ok,
        height_floor_ok,
        values_ok,
        cardinality_ok,
        span_ok,
    })
}

/// Right-hand side of the main growth bound:
/// H + 960·η·d·log(ηdH) + d·log(2M) + log(d+1).
pub fn main_bound(degree: u64, value_height: f64, magnitude: u64, eta: f64) -> f64 {
    let d = degree.max(1) as f64;
    let h = value_height;
    let m = magnitude.max(1) as f64;
    h + RATIONAL_MAIN_CONSTANT * eta * d * (eta * d * h).ln()
        + d * (2.0 * m).ln()
        + (d + 1.0).ln()
}

/// Measures h(F) against the main growth bound on one instance.
pub fn verify_main_theorem(input: &MainTheoremInput) -> Result<BoundReport> {
    let hyps = check_main_hypotheses(input)?;
    let eta_f = input.eta.as_ratio().to_f64().unwrap_or(f64::INFINITY);
    let bound = main_bound(
        input.degree(),
        input.value_height,
        input.magnitude(),
        eta_f,
    );
    let measured = input.f.height().value();
    Ok(BoundReport::from_parts(
        "main-growth-bound",
        hyps.all(),
        bound,
        measured,
        input.digest(),
        "",
    ))
}

/// Builds a hypothesis-satisfying instance for F on an interval [0, D]
/// by growing D until D ≥ max{η·d³·H(D), 4ηd}, where H(D) is the largest
/// value height on the interval (floored at max{4, log 2D}). Returns
/// None when F has too many integer poles for the density requirement.
pub fn main_instance(f: &RationalFraction, eta: &Rational) -> Option<MainTheoremInput> {
    let d = (f.degree() as u64).max(1);
    let eta_f = eta.as_ratio().to_f64()?;
    if eta_f < 1.0 {
        return None;
    }
    let mut big_d: u64 = ((4.0 * eta_f * d as f64).ceil() as u64).max(16);
    for _ in 0..64 {
        let mut points = Vec::with_capacity(big_d as usize + 1);
        let mut h = 4f64.max((2.0 * big_d as f64).ln());
        for x in 0..=big_d as i64 {
            match f.evaluate_at_integer(x) {
                Ok(v) => {
                    h = h.max(v.height().value());
                    points.push(x);
                }
                Err(_) => {} // pole: excluded from S
            }
        }
        let required = ((eta_f * (d * d * d) as f64 * h).ceil() as u64)
            .max((4.0 * eta_f * d as f64).ceil() as u64)
            .max(16);
        if required <= big_d {
            let input = MainTheoremInput {
                f: f.clone(),
                lo: 0,
                hi: big_d as i64,
                points,
                eta: eta.clone(),
                value_height: h,
            };
            match check_main_hypotheses(&input) {
                Ok(hyps) if hyps.all() => return Some(input),
                _ => return None, // typically: too many poles for |S| ≥ D/η
            }
        }
        big_d = required;
    }
    None
}

/// gcd(|P(x)|, |Q(x)|) for F = P/Q in canonical form — the cancellation
/// that happens when the value F(x) is reduced. Errors at a pole.
pub fn simplification_gcd(f: &RationalFraction, x: i64) -> Result<BigInt> {
    let xi = BigInt::from(x);
    let q = f.den().evaluate_integer(&xi)?;
    if q.is_zero() {
        return Err(Error::Pole(x.to_string()));
    }
    let p = f.num().evaluate_integer(&xi)?;
    Ok(p.gcd(&q))
}

/// Checks that the value cancellation divides the resultant of numerator
/// and denominator at every given point: gcd(P(x), Q(x)) | Res(P, Q).
/// This is what caps the total cancellation across many evaluations.
pub fn gcd_divides_resultant_check(f: &RationalFraction, points: &[i64]) -> Result<bool> {
    let r = resultant(f.num(), f.den())?;
    if r.is_zero() {
        return Err(Error::ZeroResultant);
    }
    for &x in points {
        let xi = BigInt::from(x);
        let p = f.num().evaluate_integer(&xi)?;
        let q = f.den().evaluate_integer(&xi)?;
        let g = p.gcd(&q);
        // both values vanishing would force a common root, hence Res = 0
        debug_assert!(!g.is_zero());
        if !r.is_multiple_of(&g) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The explicit constant of the slow-growth corollary:
/// C = (4c + 1923)·(12 + log max{1, #V} + 2·log c), for c ≥ 1.
pub fn corollary_constant(c: f64, excluded_count: u64) -> f64 {
    assert!(c >= 1.0, "the corollary requires c ≥ 1");
    let nv = excluded_count.max(1) as f64;
    (4.0 * c + 1923.0) * (12.0 + nv.ln() + 2.0 * c.ln())
}

/// Interval length D used to prove the corollary:
/// max{2·#V, ⌈4cd⁴·log(4cd⁴)⌉, 8d³}. The last term floors D so that
/// D ≥ 2d³·H(D) and D ≥ 8d hold even for small c·d, where the middle
/// term alone dips below the requirement.
pub fn corollary_d(c: f64, degree: u64, excluded_count: u64) -> u64 {
    assert!(c >= 1.0, "the corollary requires c ≥ 1");
    let d = degree.max(1);
    let x = 4.0 * c * (d * d * d * d) as f64;
    let mid = (x * x.ln()).ceil() as u64;
    (2 * excluded_count).max(mid).max(8 * d * d * d)
}

/// Value-height ceiling used when applying the main bound on [0, D]:
/// H(D) = max{4, log 2D, c·(d·log d + d·log D)}.
pub fn corollary_value_height(c: f64, degree: u64, big_d: u64) -> f64 {
    let d = degree.max(1) as f64;
    let dd = big_d.max(1) as f64;
    4f64.max((2.0 * dd).ln())
        .max(c * (d * d.ln() + d * dd.ln()))
}

/// Number of evaluation points beyond which the corollary's pointwise
/// hypothesis is sampled on a stride instead of checked exhaustively.
pub const COROLLARY_SCAN_CAP: u64 = 100_000;

/// Measures h(F) against the slow-growth corollary bound C·d·log(4d).
///
/// The pointwise hypothesis h(F(x)) ≤ c·max{1, d·log d + d·h(x)} is
/// checked for x in ⟦0, D⟧ outside `excluded` — exhaustively when the
/// interval is small, on an even stride otherwise (noted in the report).
/// A pole at a non-excluded point is an error: the corollary does not
/// apply to such F at all.
pub fn verify_corollary_bound(
    f: &RationalFraction,
    c: f64,
    excluded: &[i64],
) -> Result<BoundReport> {
    assert!(c >= 1.0, "the corollary requires c ≥ 1");
    let d = (f.degree() as u64).max(1);
    let mut v: Vec<i64> = excluded.to_vec();
    v.sort_unstable();
    v.dedup();
    let nv = v.len() as u64;

    let big_d = corollary_d(c, d, nv);
    let h_ceiling = corollary_value_height(c, d, big_d);

    // the two reductions that let the main bound apply with η = 2
    let chain_ok = h_ceiling <= 4.0 * c * d as f64 * ((d * big_d) as f64).ln()
        && 2.0 * d as f64 * h_ceiling <= big_d as f64
        && 2.0 * (d * d * d) as f64 * h_ceiling <= big_d as f64
        && big_d >= 8 * d
        && big_d >= 2 * nv;

    let stride = ((big_d + 1) / COROLLARY_SCAN_CAP).max(1);
    let exhaustive = stride == 1;
    let df = d as f64;
    let mut values_ok = true;
    let mut scanned: u64 = 0;
    let mut x: i64 = 0;
    while x <= big_d as i64 {
        if v.binary_search(&x).is_err() {
            let value = match f.evaluate_at_integer(x) {
                Ok(val) => val,
                Err(Error::Pole(_)) => return Err(Error::PoleNotExcluded { x }),
                Err(e) => return Err(e),
            };
            let lhs = value.height().value();
            let rhs = c * 1f64.max(df * df.ln() + df * Rational::from(x).height().value());
            if lhs > rhs + slack(rhs) {
                values_ok = false;
            }
            scanned += 1;
        }
        x += stride as i64;
    }

    let measured = f.height().value();
    let bound = corollary_constant(c, nv) * df * (4.0 * df).ln();
    let notes = if exhaustive {
        format!("hypothesis checked exhaustively on [0, {big_d}]")
    } else {
        format!("hypothesis sampled, not exhaustive: {scanned} of {} points", big_d + 1)
    };
    let digest = digest_hex(&[
        f.to_string(),
        format!("{c:.17e}"),
        format!("{v:?}"),
    ]);
    Ok(BoundReport::from_parts(
        "slow-growth-corollary",
        chain_ok && values_ok,
        bound,
        measured,
        digest,
        notes,
    ))
}

/// One row of the tightness experiment: how large the proven bounds are
/// relative to the true height of a random fraction.
#[derive(Debug, Clone, Serialize)]
pub struct TightnessRow {
    pub trial: u64,
    pub d: u64,
    #[serde(rename = "hF")]
    pub h_f: f64,
    pub bound_basic: f64,
    pub bound_main: f64,
    pub ratio_basic: f64,
    pub ratio_main: f64,
}

/// Generates random fractions of each degree 1..=d_max, fits a
/// hypothesis-satisfying instance to each, and records the ratio of both
/// proven bounds to the true height. Deterministic in the seed.
pub fn tightness_experiment(d_max: u64, trials: u64, seed: u64) -> Vec<TightnessRow> {
    assert!(d_max >= 1);
    let eta = Rational::one();
    let mut rows = Vec::with_capacity((d_max * trials) as usize);
    for trial in 0..trials {
        for d in 1..=d_max {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial * d_max + d);
            let (f, instance) = loop {
                let f = random_fraction(&mut rng, d);
                if let Some(instance) = main_instance(&f, &eta) {
                    break (f, instance);
                }
            };
            let h_f = f.height().value();
            let bound_main = main_bound(d, instance.value_height, instance.magnitude(), 1.0);
            let bound_basic = fraction_bound_basic(
                d,
                instance.value_height,
                instance.span(),
                instance.magnitude(),
            );
            rows.push(TightnessRow {
                trial,
                d,
                h_f,
                bound_basic,
                bound_main,
                ratio_basic: bound_basic / h_f,
                ratio_main: bound_main / h_f,
            });
        }
    }
    rows
}

/// Random fraction of exact degree d with height at least log 2, so
/// tightness ratios stay meaningful.
fn random_fraction(rng: &mut ChaCha8Rng, d: u64) -> RationalFraction {
    loop {
        let digits: u32 = rng.gen_range(1..=6);
        let bound = 10i64.pow(digits);
        let den_degree = rng.gen_range(0..=d);
        let mut coeffs = |deg: u64| -> DensePoly {
            let mut cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
            let lead = cs.last_mut().expect("deg + 1 coefficients");
            if *lead == 0 {
                *lead = 1;
            }
            DensePoly::from_integers(&cs)
        };
        let num = coeffs(d);
        let den = coeffs(den_degree);
        let Ok(f) = RationalFraction::new(num, den) else {
            continue;
        };
        if f.degree() as u64 == d && f.height().value() >= std::f64::consts::LN_2 {
            return f;
        }
    }
}
