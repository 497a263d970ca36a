use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// A formal variable.
///
/// `T` stands for `q^{-1/2}` and `X` for `q^{-s}`; everything else (Satake
/// symbols, the `π`-parameter, the `ζ` regulator) is a named parameter.
/// Variant order is the canonical rendering order: parameters by name, then
/// `T`, then `X`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Param(Arc<str>),
    T,
    X,
}

impl VarId {
    /// Builds a parameter variable. Panics on reserved or malformed names;
    /// use [`VarId::try_param`] for untrusted input.
    pub fn param(name: &str) -> Self {
        Self::try_param(name).unwrap_or_else(|| panic!("invalid parameter name {name:?}"))
    }

    pub fn try_param(name: &str) -> Option<Self> {
        if is_valid_param_name(name) {
            Some(VarId::Param(Arc::from(name)))
        } else {
            None
        }
    }

    pub fn name(&self) -> &str {
        match self {
            VarId::Param(name) => name,
            VarId::T => "T",
            VarId::X => "X",
        }
    }
}

pub(crate) fn is_valid_param_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    (first.is_ascii_alphabetic() || first == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "T"
        && name != "X"
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sparse exponent vector: sorted by variable, no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents(Vec<(VarId, i32)>);

impl Exponents {
    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    pub fn var(v: VarId, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Exponents(vec![(v, e)])
        }
    }

    /// Builds from arbitrary `(var, exponent)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, i32)>>(pairs: I) -> Self {
        let mut v: Vec<(VarId, i32)> = pairs.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(VarId, i32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == var => *acc += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        Exponents(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, i32)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    pub fn degree_in(&self, var: &VarId) -> i32 {
        self.0
            .binary_search_by(|(v, _)| v.cmp(var))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn without(&self, var: &VarId) -> Self {
        Exponents(self.0.iter().filter(|(v, _)| v != var).cloned().collect())
    }

    pub fn vars(&self) -> impl Iterator<Item = &VarId> {
        self.0.iter().map(|(v, _)| v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Exponents(out)
    }

    pub fn pow(&self, n: i32) -> Self {
        if n == 0 {
            return Self::one();
        }
        Exponents(self.0.iter().map(|(v, e)| (v.clone(), e * n)).collect())
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Flips the sign of the exponent of every variable in `vars`.
    pub fn invert_vars(&self, vars: &BTreeSet<VarId>) -> Self {
        Exponents(
            self.0
                .iter()
                .map(|(v, e)| (v.clone(), if vars.contains(v) { -e } else { *e }))
                .collect(),
        )
    }
}

/// `coefficient · ∏ var^exponent` with an exact rational coefficient.
///
/// The only monomial with a zero coefficient is the canonical zero, which has
/// an empty exponent map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    exps: Exponents,
    coeff: Rational,
}

impl LaurentMonomial {
    pub fn new(coeff: Rational, exps: Exponents) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            LaurentMonomial { exps, coeff }
        }
    }

    pub fn zero() -> Self {
        LaurentMonomial {
            exps: Exponents::one(),
            coeff: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, Exponents::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::new(Rational::one(), Exponents::var(v, e))
    }

    /// Shorthand for a parameter symbol `name^1`.
    pub fn symbol(name: &str) -> Self {
        Self::var(VarId::param(name))
    }

    /// `X^mu · T^two_nu`.
    pub fn x_t(mu: i32, two_nu: i32) -> Self {
        Self::new(
            Rational::one(),
            Exponents::from_pairs([(VarId::X, mu), (VarId::T, two_nu)]),
        )
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn exponents(&self) -> &Exponents {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_one() && self.coeff.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.is_one()
    }

    pub fn degree_in(&self, var: &VarId) -> i32 {
        self.exps.degree_in(var)
    }

    pub fn vars(&self) -> impl Iterator<Item = &VarId> {
        self.exps.vars()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coeff * &other.coeff, self.exps.mul(&other.exps))
    }

    /// Multiplicative inverse. Panics on the zero monomial.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero monomial");
        LaurentMonomial {
            coeff: self.coeff.recip(),
            exps: self.exps.inv(),
        }
    }

    pub fn pow(&self, n: i32) -> Self {
        if n == 0 {
            return Self::one();
        }
        if self.is_zero() {
            assert!(n > 0, "negative power of the zero monomial");
            return Self::zero();
        }
        let base = if n < 0 { self.coeff.recip() } else { self.coeff.clone() };
        LaurentMonomial {
            coeff: num_traits::pow(base, n.unsigned_abs() as usize),
            exps: self.exps.pow(n),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentMonomial {
            coeff: -self.coeff.clone(),
            exps: self.exps.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.coeff * c, self.exps.clone())
    }

    /// Drops `var` from the exponent map (i.e. specializes it to 1).
    pub fn without(&self, var: &VarId) -> Self {
        Self::new(self.coeff.clone(), self.exps.without(var))
    }

    pub fn invert_vars(&self, vars: &BTreeSet<VarId>) -> Self {
        Self::new(self.coeff.clone(), self.exps.invert_vars(vars))
    }

    /// Splits off the `(X, T)` part: returns `(rest, mu, two_nu)` with
    /// `self = rest · X^mu · T^two_nu`.
    pub fn split_argument(&self) -> (LaurentMonomial, i32, i32) {
        let mu = self.degree_in(&VarId::X);
        let two_nu = self.degree_in(&VarId::T);
        let rest = self.without(&VarId::X).without(&VarId::T);
        (rest, mu, two_nu)
    }

    pub fn is_negative(&self) -> bool {
        self.coeff.is_negative()
    }
}

impl Default for LaurentMonomial {
    fn default() -> Self {
        Self::one()
    }
}
