use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::monomial::{Exponents, LaurentMonomial, VarId};
use super::Rational;

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent map; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(LaurentMonomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from(LaurentMonomial::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending exponent-map) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = LaurentMonomial> + '_ {
        self.terms
            .iter()
            .map(|(e, c)| LaurentMonomial::new(c.clone(), e.clone()))
    }

    pub(crate) fn raw_terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term in the canonical monomial order, if any.
    pub fn leading_term(&self) -> Option<LaurentMonomial> {
        self.terms().next_back()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|e| e.vars().cloned())
            .collect()
    }

    pub fn add_monomial(&mut self, m: &LaurentMonomial) {
        if m.is_zero() {
            return;
        }
        self.add_term(m.exponents().clone(), m.coeff().clone());
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &LaurentMonomial) -> Self {
        if m.is_zero() {
            return Self::zero();
        }
        // Multiplying by a monomial is injective on exponent maps, so no merging.
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.mul(m.exponents()), c * m.coeff()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Largest and smallest exponent of `var` across all terms.
    pub fn degree_range(&self, var: &VarId) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.degree_in(var));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn map_monomials<F: Fn(&LaurentMonomial) -> LaurentMonomial>(&self, f: F) -> Self {
        self.terms().map(|m| f(&m)).collect()
    }

    /// Evaluates with `var ↦ value` for every variable in `assignment`;
    /// variables not assigned are kept symbolic.
    pub fn partial_eval(
        &self,
        assignment: &BTreeMap<VarId, Rational>,
    ) -> Result<Self, super::EvalError> {
        let mut out = Self::zero();
        for m in self.terms() {
            out.add_monomial(&super::eval::partial_eval_monomial(&m, assignment)?);
        }
        Ok(out)
    }
}

impl From<LaurentMonomial> for LaurentPoly {
    fn from(m: LaurentMonomial) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_monomial(&m);
        p
    }
}

impl FromIterator<LaurentMonomial> for LaurentPoly {
    fn from_iter<I: IntoIterator<Item = LaurentMonomial>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for m in iter {
            p.add_monomial(&m);
        }
        p
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
