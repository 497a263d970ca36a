//! Exact arithmetic: Laurent monomials and polynomials over ℚ, factored
//! Euler products, truncated power series and seeded rational evaluation.

mod eval;
mod factored;
mod monomial;
mod poly;
mod series;
mod text;

use thiserror::Error;

pub use eval::{
    eval_at, eval_monomial, eval_poly, partial_eval, sampled_equal, Assignment, RationalSampler,
    SampledOutcome, MAX_RESAMPLES, SAMPLE_BOUND,
};
pub use factored::{rf_equal, FactoredLFunction};
pub use monomial::{Exponents, LaurentMonomial, VarId};
pub use poly::LaurentPoly;
pub use series::{series_expand, series_from_powers, TruncatedSeries};
pub use text::to_latex;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("{factor} is not a power series in {grading}")]
    NotPowerSeries { factor: String, grading: String },
    #[error("term {term} has negative degree in {grading}")]
    NegativeDegree { term: String, grading: String },
    #[error("scale {scale} must have degree exactly 1 in {grading}")]
    BadScale { scale: String, grading: String },
    #[error("{var} appears in the series parameters")]
    GradingInParams { var: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("pole at evaluation point: {detail}")]
    PoleAtPoint { detail: String },
    #[error("variable {0} not assigned")]
    Unassigned(String),
    #[error("hit a pole on all {0} re-samples")]
    ResamplesExhausted(usize),
}

/// Parses a rational like `3/2`, `-7` or `0`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let m: LaurentMonomial = s.parse()?;
    if !m.is_constant() {
        return Err(ParseError {
            pos: 0,
            msg: format!("{s:?} is not a rational number"),
        });
    }
    Ok(m.coeff().clone())
}

#[cfg(test)]
mod proptests;
