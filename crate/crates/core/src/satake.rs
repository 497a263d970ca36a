//! Satake parameter sets and unramified local factors.
//!
//! A parameter set is a multiset of pure monomials (symbols, rationals, or
//! either times powers of `X`/`T`). Contragredients are entry-wise inverses.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{parse_rational, FactoredLFunction, LaurentMonomial, Rational, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatakeError {
    #[error("parameter set must be nonempty")]
    Empty,
    #[error("{0:?} is not a pure monomial parameter")]
    BadEntry(String),
    #[error("lift to GL(N) is only defined for Sp and SO")]
    LiftFromGl,
    #[error("expected {expected} parameters, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}

/// Semisimple conjugacy class as a nonempty multiset of monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SatakeSet {
    entries: Vec<LaurentMonomial>,
}

impl SatakeSet {
    pub fn new(entries: Vec<LaurentMonomial>) -> Result<Self, SatakeError> {
        if entries.is_empty() {
            return Err(SatakeError::Empty);
        }
        if let Some(bad) = entries.iter().find(|m| m.is_zero()) {
            return Err(SatakeError::BadEntry(bad.to_string()));
        }
        Ok(SatakeSet { entries })
    }

    /// `{prefix1, …, prefixk}`.
    pub fn symbolic(prefix: &str, k: usize) -> Self {
        assert!(k > 0, "empty parameter set");
        SatakeSet {
            entries: (1..=k)
                .map(|i| LaurentMonomial::symbol(&format!("{prefix}{i}")))
                .collect(),
        }
    }

    pub fn symbols<S: AsRef<str>>(names: &[S]) -> Result<Self, SatakeError> {
        let entries = names
            .iter()
            .map(|n| {
                VarId::try_param(n.as_ref())
                    .map(LaurentMonomial::var)
                    .ok_or_else(|| SatakeError::BadEntry(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }

    pub fn values(values: &[Rational]) -> Result<Self, SatakeError> {
        Self::new(values.iter().cloned().map(LaurentMonomial::constant).collect())
    }

    /// Parses a comma-separated list of monomials, e.g. `x1,x2^-1,3/2`.
    pub fn parse_list(s: &str) -> Result<Self, SatakeError> {
        let entries = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<LaurentMonomial>()
                    .map_err(|e| SatakeError::BadEntry(format!("{tok}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }

    pub fn from_descriptor(d: &SatakeDescriptor) -> Result<Self, SatakeError> {
        match d {
            SatakeDescriptor::Symbols { symbols } => Self::symbols(symbols),
            SatakeDescriptor::Values { values } => {
                let vals = values
                    .iter()
                    .map(|v| parse_rational(v).map_err(|e| SatakeError::Descriptor(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                if vals.iter().any(|v| v.is_zero()) {
                    return Err(SatakeError::Descriptor("parameter values must be nonzero".into()));
                }
                Self::values(&vals)
            }
        }
    }

    pub fn from_json(s: &str) -> Result<Self, SatakeError> {
        let d: SatakeDescriptor =
            serde_json::from_str(s).map_err(|e| SatakeError::Descriptor(e.to_string()))?;
        Self::from_descriptor(&d)
    }

    pub fn entries(&self) -> &[LaurentMonomial] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn expect_len(&self, expected: usize) -> Result<(), SatakeError> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(SatakeError::WrongSize { expected, got: self.len() })
        }
    }

    /// Entry-wise inverse: the parameters of the contragredient.
    pub fn inverse(&self) -> Self {
        SatakeSet {
            entries: self.entries.iter().map(LaurentMonomial::inv).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        SatakeSet {
            entries: self.entries.iter().chain(&other.entries).cloned().collect(),
        }
    }

    pub fn map<F: Fn(&LaurentMonomial) -> LaurentMonomial>(&self, f: F) -> Self {
        SatakeSet {
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Product of all entries (the central character at `ϖ`).
    pub fn determinant(&self) -> LaurentMonomial {
        self.entries
            .iter()
            .fold(LaurentMonomial::one(), |acc, m| acc.mul(m))
    }

    /// True when every entry is a constant.
    pub fn is_numeric(&self) -> bool {
        self.entries.iter().all(LaurentMonomial::is_constant)
    }

    /// Canonically sorted copy, for multiset comparison.
    pub fn sorted(&self) -> Vec<LaurentMonomial> {
        let mut v = self.entries.clone();
        v.sort();
        v
    }

    pub fn multiset_eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.entries.iter().flat_map(|m| m.vars().cloned()).collect()
    }
}

impl fmt::Display for SatakeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// JSON descriptor: `{"symbols":["x1","x2"]}` or `{"values":["3/2","2/3"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum SatakeDescriptor {
    Symbols { symbols: Vec<String> },
    Values { values: Vec<String> },
}

/// Affine L-argument `μ·s + ν` with `ν ∈ ½ℤ` stored as `2ν`.
///
/// Renders to the monomial `X^μ · T^{2ν}`. `μ` may be negative: the
/// functional-equation side of a γ-factor lives at `−ks + ½`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArgForm {
    pub mu: i32,
    pub two_nu: i32,
}

impl ArgForm {
    pub fn new(mu: i32, two_nu: i32) -> Self {
        ArgForm { mu, two_nu }
    }

    /// `μ·s + ½`.
    pub fn half(mu: i32) -> Self {
        ArgForm { mu, two_nu: 1 }
    }

    /// `μ·s + j` for integer `j`.
    pub fn int(mu: i32, j: i32) -> Self {
        ArgForm { mu, two_nu: 2 * j }
    }

    pub fn monomial(&self) -> LaurentMonomial {
        LaurentMonomial::x_t(self.mu, self.two_nu)
    }

    pub fn from_json(s: &str) -> Result<Self, SatakeError> {
        serde_json::from_str(s).map_err(|e| SatakeError::Descriptor(e.to_string()))
    }
}

impl fmt::Display for ArgForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nu = Rational::new(self.two_nu.into(), 2.into());
        match (self.mu, nu.is_zero()) {
            (0, _) => write!(f, "{nu}"),
            (mu, true) => write!(f, "{mu}s"),
            (mu, false) if nu.is_negative() => write!(f, "{mu}s - {}", -nu),
            (mu, false) => write!(f, "{mu}s + {nu}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Sp,
    So,
    Gl,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Sp => "Sp",
            GroupKind::So => "SO",
            GroupKind::Gl => "GL",
        })
    }
}

/// `Sp_{2n}`, `SO_{2n}` or `GL_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupData {
    kind: GroupKind,
    n: usize,
}

impl GroupData {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self, SatakeError> {
        if n == 0 {
            return Err(SatakeError::ZeroRank);
        }
        Ok(GroupData { kind, n })
    }

    pub fn sp(n: usize) -> Self {
        Self::new(GroupKind::Sp, n).expect("n >= 1")
    }

    pub fn so(n: usize) -> Self {
        Self::new(GroupKind::So, n).expect("n >= 1")
    }

    pub fn gl(n: usize) -> Self {
        Self::new(GroupKind::Gl, n).expect("n >= 1")
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_classical(&self) -> bool {
        self.kind != GroupKind::Gl
    }

    /// Dimension of the standard representation of the dual group.
    pub fn big_n(&self) -> usize {
        match self.kind {
            GroupKind::Sp => 2 * self.n + 1,
            GroupKind::So => 2 * self.n,
            GroupKind::Gl => self.n,
        }
    }

    /// The multiplier `α` of `s` in the doubling integral for `GL_k`.
    pub fn alpha(&self, k: usize) -> i32 {
        let kn = (k * self.n) as i32;
        match self.kind {
            GroupKind::Sp => 2 * kn + 1,
            GroupKind::So => 2 * kn - 1,
            GroupKind::Gl => kn,
        }
    }
}

impl fmt::Display for GroupData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Sp => write!(f, "Sp(2·{})", self.n),
            GroupKind::So => write!(f, "SO(2·{})", self.n),
            GroupKind::Gl => write!(f, "GL({})", self.n),
        }
    }
}

/// `∏_{a∈A, b∈B} (1 − a·b·X^μ·T^{2ν})^{-1}`.
pub fn l_rankin_selberg(a: &SatakeSet, b: &SatakeSet, arg: ArgForm) -> FactoredLFunction {
    let m = arg.monomial();
    FactoredLFunction::l_product(
        a.entries()
            .iter()
            .flat_map(|x| b.entries().iter().map(move |y| x.mul(y)))
            .map(|xy| xy.mul(&m)),
    )
}

pub fn l_standard(a: &SatakeSet, arg: ArgForm) -> FactoredLFunction {
    let m = arg.monomial();
    FactoredLFunction::l_product(a.entries().iter().map(|x| x.mul(&m)))
}

/// Symmetric square: unordered pairs `i ≤ j`.
pub fn l_sym2(a: &SatakeSet, arg: ArgForm) -> FactoredLFunction {
    pair_product(a, arg, true)
}

/// Exterior square: pairs `i < j`; empty (= 1) for a single parameter.
pub fn l_wedge2(a: &SatakeSet, arg: ArgForm) -> FactoredLFunction {
    pair_product(a, arg, false)
}

fn pair_product(a: &SatakeSet, arg: ArgForm, diagonal: bool) -> FactoredLFunction {
    let m = arg.monomial();
    let e = a.entries();
    FactoredLFunction::l_product((0..e.len()).flat_map(|i| {
        let start = if diagonal { i } else { i + 1 };
        let m = m.clone();
        (start..e.len()).map(move |j| e[i].mul(&e[j]).mul(&m))
    }))
}

/// Transfers parameters of `Sp_{2n}` / `SO_{2n}` to `GL_N` through the
/// standard embedding of the dual group.
pub fn lift_to_gl(group: GroupData, pi_params: &SatakeSet) -> Result<SatakeSet, SatakeError> {
    pi_params.expect_len(group.n())?;
    let forward = pi_params.entries().iter().cloned();
    let backward = pi_params.entries().iter().rev().map(LaurentMonomial::inv);
    let entries: Vec<LaurentMonomial> = match group.kind() {
        GroupKind::Sp => forward
            .chain(std::iter::once(LaurentMonomial::one()))
            .chain(backward)
            .collect(),
        GroupKind::So => forward.chain(backward).collect(),
        GroupKind::Gl => return Err(SatakeError::LiftFromGl),
    };
    SatakeSet::new(entries)
}

/// Siegel-parabolic factorization
/// `L(s, π×τ) = [L(s,τ)] · L(s, π_n×τ) · L(s, π_n^∨×τ)`.
pub fn siegel_factorization_check(
    group: GroupData,
    pi_n: &SatakeSet,
    tau: &SatakeSet,
    arg: ArgForm,
) -> Result<bool, SatakeError> {
    let (lhs, rhs) = siegel_factorization_sides(group, pi_n, tau, arg)?;
    Ok(lhs.rf_equal(&rhs))
}

pub fn siegel_factorization_sides(
    group: GroupData,
    pi_n: &SatakeSet,
    tau: &SatakeSet,
    arg: ArgForm,
) -> Result<(FactoredLFunction, FactoredLFunction), SatakeError> {
    let lifted = lift_to_gl(group, pi_n)?;
    let lhs = l_rankin_selberg(&lifted, tau, arg);
    let mut rhs = l_rankin_selberg(pi_n, tau, arg).mul(&l_rankin_selberg(&pi_n.inverse(), tau, arg));
    if group.kind() == GroupKind::Sp {
        rhs = rhs.mul(&l_standard(tau, arg));
    }
    Ok((lhs, rhs))
}

/// Unramified γ-factor with ε = 1:
/// `γ(ks+½, π^{-1}×τ) = L(−ks+½, π×τ^∨) / L(ks+½, π^{-1}×τ)`.
pub fn gamma_unramified(p: &LaurentMonomial, tau: &SatakeSet, k: usize) -> FactoredLFunction {
    let k = k as i32;
    let pi = SatakeSet::new(vec![p.clone()]).expect("nonzero π-parameter");
    let numerator = l_rankin_selberg(&pi, &tau.inverse(), ArgForm::half(-k));
    let denominator = l_rankin_selberg(&pi.inverse(), tau, ArgForm::half(k));
    numerator.div(&denominator)
}

/// `|χ_i/χ_j| < q` for all `i ≠ j`.
///
/// Sufficient for `1 − q^{-s}χ_i χ_j^{-1} ≠ 0` on `Re(s) ≥ 1`, which is what
/// the nonvanishing of the `(k,c)` functional needs.
pub fn unitary_regularity_check(tau_values: &[Rational], q: &Rational) -> bool {
    assert!(*q > Rational::one(), "q must exceed 1");
    assert!(tau_values.iter().all(|v| !v.is_zero()), "parameters must be nonzero");
    let abs: Vec<Rational> = tau_values.iter().map(Signed::abs).collect();
    let max = abs.iter().max();
    let min = abs.iter().min();
    match (max, min) {
        // The largest ratio over i ≠ j is max/min unless there is one entry.
        (Some(hi), Some(lo)) if abs.len() > 1 => hi / lo < *q,
        _ => true,
    }
}
