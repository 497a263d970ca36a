//! Exact unramified L-factor algebra.
//!
//! Satake parameters are multisets of Laurent monomials; L-factors are
//! factored Euler products in `T = q^{-1/2}` and `X = q^{-s}`. On top of that
//! sit the doubling constants and zeta closed forms, the symmetric-function
//! oracles that reproduce them from Whittaker sums, and the orbit
//! combinatorics of `(k,c)` representations.

pub mod doubling;
pub mod exactalg;
pub mod kcorbits;
pub mod satake;
pub mod suite;
pub mod symmfunc;

pub use exactalg::{
    rf_equal, to_latex, FactoredLFunction, LaurentMonomial, LaurentPoly, Rational, TruncatedSeries,
    VarId,
};
pub use kcorbits::{Composition, Dominance, Partition};
pub use satake::{ArgForm, GroupData, GroupKind, SatakeSet};
