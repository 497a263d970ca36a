use std::collections::{BTreeMap, BTreeSet};

use super::monomial::{LaurentMonomial, VarId};
use super::poly::LaurentPoly;

/// `unit · ∏ (1 − M)^e` over pure monomials `M` with nonzero integer `e`.
///
/// Every L-factor, zeta closed form and reduction constant is carried in this
/// shape. Keys are kept exactly as constructed; no attempt is made to
/// identify `(1 − M)` with `−M · (1 − M^{-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredLFunction {
    unit: LaurentMonomial,
    factors: BTreeMap<LaurentMonomial, i32>,
}

impl FactoredLFunction {
    pub fn one() -> Self {
        Self::from_unit(LaurentMonomial::one())
    }

    /// Panics if `unit` is zero.
    pub fn from_unit(unit: LaurentMonomial) -> Self {
        assert!(!unit.is_zero(), "factored function with zero unit");
        FactoredLFunction {
            unit,
            factors: BTreeMap::new(),
        }
    }

    /// The single factor `(1 − m)^e`. A zero `m` gives the empty product.
    pub fn euler(m: LaurentMonomial, e: i32) -> Self {
        let mut f = Self::one();
        f.push_factor(m, e);
        f
    }

    /// The local L-factor `(1 − m)^{-1}`.
    pub fn l_factor(m: LaurentMonomial) -> Self {
        Self::euler(m, -1)
    }

    /// Product of `(1 − m)^{-1}` over the given monomials.
    pub fn l_product<I: IntoIterator<Item = LaurentMonomial>>(ms: I) -> Self {
        let mut f = Self::one();
        for m in ms {
            f.push_factor(m, -1);
        }
        f
    }

    /// Builds from raw parts, merging equal keys.
    pub fn from_parts<I: IntoIterator<Item = (LaurentMonomial, i32)>>(
        unit: LaurentMonomial,
        factors: I,
    ) -> Self {
        let mut f = Self::from_unit(unit);
        for (m, e) in factors {
            f.push_factor(m, e);
        }
        f
    }

    pub(crate) fn push_factor(&mut self, m: LaurentMonomial, e: i32) {
        if e == 0 || m.is_zero() {
            return;
        }
        let slot = self.factors.entry(m).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.retain(|_, e| *e != 0);
        }
    }

    pub fn unit(&self) -> &LaurentMonomial {
        &self.unit
    }

    pub fn factors(&self) -> impl Iterator<Item = (&LaurentMonomial, i32)> {
        self.factors.iter().map(|(m, e)| (m, *e))
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Sum of all exponents; `−|A||B|` for a Rankin–Selberg factor.
    pub fn total_exponent(&self) -> i64 {
        self.factors.values().map(|&e| i64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty() && self.unit.is_one()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.unit
            .vars()
            .chain(self.factors.keys().flat_map(|m| m.vars()))
            .cloned()
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (big, small) = if self.factors.len() >= other.factors.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        out.unit = self.unit.mul(&other.unit);
        for (m, e) in &small.factors {
            out.push_factor(m.clone(), *e);
        }
        out
    }

    pub fn inv(&self) -> Self {
        FactoredLFunction {
            unit: self.unit.inv(),
            factors: self.factors.iter().map(|(m, e)| (m.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, n: i32) -> Self {
        if n == 0 {
            return Self::one();
        }
        FactoredLFunction {
            unit: self.unit.pow(n),
            factors: self.factors.iter().map(|(m, e)| (m.clone(), e * n)).collect(),
        }
    }

    /// Applies `f` to the unit and to every factor key, re-merging.
    pub fn map_monomials<F: Fn(&LaurentMonomial) -> LaurentMonomial>(&self, f: F) -> Self {
        Self::from_parts(f(&self.unit), self.factors.iter().map(|(m, e)| (f(m), *e)))
    }

    /// Substitutes `v ↦ v^{-1}` for each `v` in `vars`.
    pub fn invert_vars(&self, vars: &BTreeSet<VarId>) -> Self {
        self.map_monomials(|m| m.invert_vars(vars))
    }

    /// Specializes `var` to 1.
    pub fn specialize_to_one(&self, var: &VarId) -> Self {
        self.map_monomials(|m| m.without(var))
    }

    /// Returns `(numerator, denominator)` polynomials: the unit and the
    /// positive-exponent factors on top, the negative-exponent ones below.
    pub fn to_fraction(&self) -> (LaurentPoly, LaurentPoly) {
        let mut num = LaurentPoly::from(self.unit.clone());
        let mut den = LaurentPoly::one();
        for (m, &e) in &self.factors {
            let one_minus = &LaurentPoly::one() - &LaurentPoly::from(m.clone());
            let p = one_minus.pow(e.unsigned_abs());
            if e > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        (num, den)
    }

    /// `None` when `self = other` as rational functions; otherwise the
    /// leading term of the cross-multiplied difference.
    ///
    /// Identical canonical factor multisets short-circuit. Otherwise the
    /// quotient `self/other` is formed first, so shared factors cancel
    /// before the residual numerator and denominator are expanded.
    pub fn difference_witness(&self, other: &Self) -> Option<LaurentMonomial> {
        if self == other {
            return None;
        }
        let (num, den) = self.div(other).to_fraction();
        (&num - &den).leading_term()
    }

    pub fn rf_equal(&self, other: &Self) -> bool {
        self.difference_witness(other).is_none()
    }
}

impl Default for FactoredLFunction {
    fn default() -> Self {
        Self::one()
    }
}

/// Equality of rational functions; see [`FactoredLFunction::difference_witness`].
pub fn rf_equal(f: &FactoredLFunction, g: &FactoredLFunction) -> bool {
    f.rf_equal(g)
}
