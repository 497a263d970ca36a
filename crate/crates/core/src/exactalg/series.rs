use std::collections::BTreeMap;


use super::factored::FactoredLFunction;
use super::monomial::{LaurentMonomial, VarId};
use super::poly::LaurentPoly;
use super::{EvalError, Rational, SeriesError};

/// Power series in one grading variable, truncated at degree `bound`.
///
/// Coefficient `i` multiplies `grading^i` and never itself contains the
/// grading variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    grading: VarId,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(grading: VarId, bound: usize) -> Self {
        TruncatedSeries {
            grading,
            coeffs: vec![LaurentPoly::zero(); bound + 1],
        }
    }

    pub fn one(grading: VarId, bound: usize) -> Self {
        let mut s = Self::zero(grading, bound);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Builds from explicit coefficients; panics if any coefficient carries
    /// the grading variable.
    pub fn from_coeffs(grading: VarId, coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        assert!(
            coeffs.iter().all(|c| c.degree_range(&grading).is_none_or(|r| r == (0, 0))),
            "coefficient depends on the grading variable"
        );
        TruncatedSeries { grading, coeffs }
    }

    /// Reads `p = Σ c_i · grading^i` into a series; terms above `bound` are dropped.
    pub fn from_poly(grading: VarId, bound: usize, p: &LaurentPoly) -> Result<Self, SeriesError> {
        let mut s = Self::zero(grading.clone(), bound);
        for m in p.terms() {
            let d = m.degree_in(&grading);
            if d < 0 {
                return Err(SeriesError::NegativeDegree {
                    term: m.to_string(),
                    grading: grading.to_string(),
                });
            }
            if let Some(slot) = s.coeffs.get_mut(d as usize) {
                slot.add_monomial(&m.without(&grading));
            }
        }
        Ok(s)
    }

    pub fn grading(&self) -> &VarId {
        &self.grading
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &LaurentPoly {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: LaurentPoly) {
        assert!(c.degree_range(&self.grading).is_none_or(|r| r == (0, 0)));
        self.coeffs[i] = c;
    }

    /// Truncated product. Both factors must share grading and bound.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.grading, other.grading, "grading mismatch");
        let bound = self.bound().min(other.bound());
        let mut out = Self::zero(self.grading.clone(), bound);
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(bound + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.grading, other.grading, "grading mismatch");
        let bound = self.bound().min(other.bound());
        TruncatedSeries {
            grading: self.grading.clone(),
            coeffs: (0..=bound).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        assert!(p.degree_range(&self.grading).is_none_or(|r| r == (0, 0)));
        TruncatedSeries {
            grading: self.grading.clone(),
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn truncate(&self, bound: usize) -> Self {
        TruncatedSeries {
            grading: self.grading.clone(),
            coeffs: self.coeffs.iter().take(bound + 1).cloned().collect(),
        }
    }

    /// Evaluates every coefficient at `assignment` (which must not need the
    /// grading variable).
    pub fn eval_coeffs(
        &self,
        assignment: &BTreeMap<VarId, Rational>,
    ) -> Result<Vec<Rational>, EvalError> {
        self.coeffs
            .iter()
            .map(|c| super::eval::eval_poly(c, assignment))
            .collect()
    }
}

/// Expands `f` as a power series in `grading` up to degree `bound`.
///
/// Each denominator factor `(1 − M)^{-e}` must have `M` of strictly positive
/// degree in the grading variable; numerator factors may have degree zero
/// (they then act as polynomial coefficients). The unit must have
/// non-negative degree.
pub fn series_expand(
    f: &FactoredLFunction,
    grading: &VarId,
    bound: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let unit_deg = f.unit().degree_in(grading);
    if unit_deg < 0 {
        return Err(SeriesError::NotPowerSeries {
            factor: f.unit().to_string(),
            grading: grading.to_string(),
        });
    }
    for (m, e) in f.factors() {
        let d = m.degree_in(grading);
        if (e < 0 && d <= 0) || (e > 0 && d < 0) {
            return Err(SeriesError::NotPowerSeries {
                factor: format!("(1 - {m})^{e}"),
                grading: grading.to_string(),
            });
        }
    }

    let mut acc = TruncatedSeries::zero(grading.clone(), bound);
    if (unit_deg as usize) <= bound {
        acc.coeffs[unit_deg as usize] = LaurentPoly::from(f.unit().without(grading));
    }
    for (m, e) in f.factors() {
        let d = m.degree_in(grading) as usize;
        let base = m.without(grading);
        if d == 0 {
            // e > 0 here: a polynomial coefficient.
            let p = (&LaurentPoly::one() - &LaurentPoly::from(base)).pow(e as u32);
            acc = acc.scale_poly(&p);
            continue;
        }
        for _ in 0..e.unsigned_abs() {
            if e < 0 {
                // Divide by (1 − M): c_i += base·c_{i−d}, ascending.
                for i in d..=bound {
                    let t = acc.coeffs[i - d].mul_monomial(&base);
                    acc.coeffs[i] += &t;
                }
            } else {
                // Multiply by (1 − M): c_i −= base·c_{i−d}, descending.
                for i in (d..=bound).rev() {
                    let t = acc.coeffs[i - d].mul_monomial(&base);
                    acc.coeffs[i] -= &t;
                }
            }
        }
    }
    Ok(acc)
}

/// Σ_{i ≤ bound} coeffs[i] · m^i for a monomial `m` of grading degree 1.
pub fn series_from_powers(
    grading: &VarId,
    scale: &LaurentMonomial,
    coeffs: &[LaurentPoly],
) -> Result<TruncatedSeries, SeriesError> {
    if scale.degree_in(grading) != 1 {
        return Err(SeriesError::BadScale {
            scale: scale.to_string(),
            grading: grading.to_string(),
        });
    }
    let stripped = scale.without(grading);
    let mut s = TruncatedSeries::zero(grading.clone(), coeffs.len().saturating_sub(1));
    for (i, c) in coeffs.iter().enumerate() {
        s.coeffs[i] = c.mul_monomial(&stripped.pow(i as i32));
    }
    Ok(s)
}
