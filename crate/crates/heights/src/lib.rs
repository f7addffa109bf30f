//! Exact arithmetic for absolute logarithmic heights.
//!
//! The crate computes Weil heights of rationals, tuples, polynomials and
//! rational fractions over Q without rounding: every height is the natural
//! log of an exactly computed integer (or a sum of such logs), so inequality
//! checks can be pinned down to floating-point slack of known size.
//!
//! On top of the height layer sit:
//!
//! * [`interpolate`] — Lagrange interpolation at integer nodes, the sup-norm
//!   bound for scaled basis polynomials, and coefficient-height bounds for an
//!   interpolated polynomial (exact-count and oversampled forms);
//! * [`cauchy`] — rational-function reconstruction (Cauchy interpolation)
//!   through determinantal subresultants, with height bounds for the
//!   subresultant and its Bézout cofactors;
//! * [`padic`] — pigeonhole subinterval extraction, prime log sums, and
//!   p-adic valuation sums of polynomial values;
//! * [`quadratic`] — real quadratic fields: norms, heights, fundamental
//!   units via continued fractions, and unit reduction;
//! * [`bounds`] — the oversampled height bound for reconstructed fractions,
//!   its corollary for polynomially bounded value heights, and the
//!   machinery that verifies both on generated instances;
//! * [`verify`] — seeded, reproducible verification suites producing
//!   [`bounds::BoundReport`] values for every inequality the crate exposes.

pub mod bounds;
pub mod cauchy;
pub mod factor;
pub mod height;
pub mod interpolate;
pub mod padic;
pub mod poly;
pub mod quadratic;
pub mod rational;
pub mod verify;

pub use height::{height_affine_tuple, height_projective_tuple, height_rational, Height, Place};
pub use poly::{canonicalize_fraction, fraction_height, DensePoly, RationalFraction};
pub use rational::Rational;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A text token did not parse in the expected format.
    #[error("malformed {what}: offending token {token:?}")]
    Parse { what: &'static str, token: String },
    /// A rational was constructed with denominator zero.
    #[error("zero denominator")]
    ZeroDenominator,
    /// Projective height of the all-zero tuple is undefined.
    #[error("degenerate projective point")]
    DegenerateProjectivePoint,
    /// p-adic valuation of zero is undefined.
    #[error("valuation of zero")]
    ValuationOfZero,
    /// An operation restricted to integer coefficients met a fractional one.
    #[error("non-integer coefficient {0}")]
    NonIntegerCoefficient(String),
    /// An operation needing a nonzero polynomial received the zero polynomial.
    #[error("zero polynomial")]
    ZeroPolynomial,
    /// A fraction was built with the zero polynomial as denominator.
    #[error("denominator is the zero polynomial")]
    ZeroDenominatorPoly,
    /// Fraction evaluated where its denominator vanishes; carries the point.
    #[error("pole at {0}")]
    Pole(String),
    /// Node and value lists have different lengths.
    #[error("count mismatch: {nodes} nodes, {values} values")]
    CountMismatch { nodes: usize, values: usize },
    /// A node repeats in the input list.
    #[error("duplicate node {0}")]
    DuplicateNode(i64),
    /// A node lies outside the stated interval.
    #[error("node {node} outside interval [{lo}, {hi}]")]
    NodeOutOfRange { node: i64, lo: i64, hi: i64 },
    /// The interval [A, B] must have length B − A ≥ 1.
    #[error("interval [{lo}, {hi}] shorter than 1")]
    IntervalTooShort { lo: i64, hi: i64 },
    /// Subresultant index k outside the range the determinantal matrix allows.
    #[error("subresultant index {k} out of range for degrees ({deg_t}, {deg_z})")]
    SubresultantIndex { k: usize, deg_t: usize, deg_z: usize },
    /// No fraction with the requested numerator/denominator degrees matches
    /// the supplied values.
    #[error("no fraction of this degree profile fits")]
    NoFractionFits,
    /// Oversampled bound needs strictly more nodes than the degree.
    #[error("need more than {d} nodes, got {n}")]
    NotOversampled { n: u64, d: u64 },
    /// Prime log sums are defined for |R| ≥ 2.
    #[error("|{0}| < 2 has no prime factors to sum over")]
    UnitOrZeroArgument(String),
    /// The prime divides the polynomial's content, so the valuation-sum
    /// precondition v_p(content) = 0 fails.
    #[error("prime {p} divides the content of the polynomial")]
    PrimeDividesContent { p: u64 },
    /// A subinterval-search precondition (membership, density, or window
    /// size) does not hold.
    #[error("dense-subinterval precondition violated: {0}")]
    SubintervalPrecondition(&'static str),
    /// Real quadratic fields need a squarefree m ≥ 2.
    #[error("m = {0} is not a squarefree integer >= 2")]
    NotSquarefree(i64),
    /// The operation is defined only for nonzero algebraic integers.
    #[error("expected a nonzero algebraic integer, got {0}")]
    NotAnAlgebraicInteger(String),
    /// The two operands live in different quadratic fields.
    #[error("elements of different fields: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(i64, i64),
    /// Resultant of the canonical numerator and denominator vanished, which
    /// contradicts coprimality.
    #[error("resultant is zero")]
    ZeroResultant,
    /// The scaled Lagrange basis failed its integrality divisibility; this
    /// would falsify the basis sup-norm bound and indicates corrupt input.
    #[error("basis denominator {0} does not divide the interval factorial")]
    BasisNotIntegral(String),
    /// A corollary-scan input has a pole at a point not excluded by V.
    #[error("pole at {x} not excluded by V")]
    PoleNotExcluded { x: i64 },
    /// A pinned hypothesis constant admits no generated instances of the
    /// requested degree.
    #[error("hypothesis constant {c} too small for degree {degree} instances")]
    ConstantTooSmall { c: String, degree: u64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
