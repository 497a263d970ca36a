//! Symmetric polynomials in Satake parameters and the unramified Whittaker
//! values built from them.

use std::collections::HashMap;

use itertools::Itertools;
use thiserror::Error;

use crate::exactalg::{
    series_expand, series_from_powers, FactoredLFunction, LaurentMonomial, LaurentPoly,
    SeriesError, TruncatedSeries, VarId,
};
use crate::kcorbits::partitions_bounded;
use crate::satake::{l_rankin_selberg, ArgForm, SatakeError, SatakeSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmError {
    #[error("weight has {weight} parts but there are {vars} variables")]
    SizeMismatch { weight: usize, vars: usize },
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i64>),
    #[error("Schur polynomials need non-negative parts, got {0:?}")]
    NegativePart(Vec<i64>),
    #[error("grading variable {0} occurs in the parameters")]
    GradingInParams(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Satake(#[from] SatakeError),
}

/// Weakly decreasing integer vector `λ_1 ≥ … ≥ λ_k`, parts may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self, SymmError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymmError::NotDominant(parts));
        }
        Ok(DominantWeight(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pads with zeros up to `k` parts.
    pub fn padded(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v.resize(k.max(v.len()), 0);
        DominantWeight(v)
    }
}

/// `h_m`: the sum of all degree-`m` monomials in the entries (`h_0 = 1`).
///
/// Computed by direct enumeration of multisets of size `m`.
pub fn complete_homogeneous(m: usize, vars: &SatakeSet) -> LaurentPoly {
    let e = vars.entries();
    (0..e.len())
        .combinations_with_replacement(m)
        .map(|idx| {
            idx.into_iter()
                .fold(LaurentMonomial::one(), |acc, i| acc.mul(&e[i]))
        })
        .collect()
}

/// Schur polynomial by the Jacobi–Trudi determinant `det(h_{λ_i − i + j})`.
pub fn schur(lambda: &DominantWeight, vars: &SatakeSet) -> Result<LaurentPoly, SymmError> {
    let k = lambda.len();
    if k != vars.len() {
        return Err(SymmError::SizeMismatch { weight: k, vars: vars.len() });
    }
    if lambda.parts().iter().any(|&p| p < 0) {
        return Err(SymmError::NegativePart(lambda.parts().to_vec()));
    }
    Ok(jacobi_trudi(lambda.parts(), vars))
}

fn jacobi_trudi(parts: &[i64], vars: &SatakeSet) -> LaurentPoly {
    let k = parts.len();
    if k == 0 {
        return LaurentPoly::one();
    }
    let mut h_cache: HashMap<i64, LaurentPoly> = HashMap::new();
    let mut h = |m: i64| -> LaurentPoly {
        if m < 0 {
            return LaurentPoly::zero();
        }
        h_cache
            .entry(m)
            .or_insert_with(|| complete_homogeneous(m as usize, vars))
            .clone()
    };
    let matrix: Vec<Vec<LaurentPoly>> = (0..k)
        .map(|i| (0..k).map(|j| h(parts[i] - i as i64 + j as i64)).collect())
        .collect();
    determinant(&matrix)
}

/// Laplace expansion along rows, memoized on the set of used columns.
fn determinant(a: &[Vec<LaurentPoly>]) -> LaurentPoly {
    fn minor(a: &[Vec<LaurentPoly>], used: u32, memo: &mut HashMap<u32, LaurentPoly>) -> LaurentPoly {
        let n = a.len();
        let row = used.count_ones() as usize;
        if row == n {
            return LaurentPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero();
        let mut position = 0;
        for col in 0..n {
            if used >> col & 1 == 1 {
                continue;
            }
            let entry = &a[row][col];
            if !entry.is_zero() {
                let term = entry * &minor(a, used | 1 << col, memo);
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            position += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    minor(a, 0, &mut HashMap::new())
}

/// Normalized unramified Whittaker value `W⁰(diag(ϖ^λ)) = δ_B^{1/2}(ϖ^λ) · s_λ(t_τ)`.
///
/// `δ_B^{1/2}(ϖ^λ) = T^{Σ λ_i (k+1−2i)}`; negative weights are handled by
/// factoring out `det^{λ_k}`. Non-dominant `λ` gives 0.
pub fn shintani_whittaker(tau: &SatakeSet, lambda: &[i64]) -> Result<LaurentPoly, SymmError> {
    let k = tau.len();
    if lambda.len() != k {
        return Err(SymmError::SizeMismatch { weight: lambda.len(), vars: k });
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Ok(LaurentPoly::zero());
    }
    let t_exp: i64 = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l * (k as i64 + 1 - 2 * (i as i64 + 1)))
        .sum();
    let shift = lambda[k - 1];
    let reduced: Vec<i64> = lambda.iter().map(|l| l - shift).collect();
    let s = jacobi_trudi(&reduced, tau);
    let factor = tau
        .determinant()
        .pow(shift as i32)
        .mul(&LaurentMonomial::x_t(0, t_exp as i32));
    Ok(s.mul_monomial(&factor))
}

fn check_scale(params: &SatakeSet, scale: &LaurentMonomial, grading: &VarId) -> Result<(), SymmError> {
    if params.vars().contains(grading) {
        return Err(SymmError::GradingInParams(grading.to_string()));
    }
    if scale.degree_in(grading) != 1 {
        return Err(SeriesError::BadScale {
            scale: scale.to_string(),
            grading: grading.to_string(),
        }
        .into());
    }
    Ok(())
}

/// Both sides of `Σ_m h_m(params)·u^m = ∏_a (1 − a·u)^{-1}` to degree `bound`,
/// where `u = scale`. Left: the `h_m` sum; right: the expanded product.
pub fn rs_series_sides(
    params: &SatakeSet,
    scale: &LaurentMonomial,
    grading: &VarId,
    bound: usize,
) -> Result<(TruncatedSeries, TruncatedSeries), SymmError> {
    check_scale(params, scale, grading)?;
    let hs: Vec<LaurentPoly> = (0..=bound).map(|m| complete_homogeneous(m, params)).collect();
    let lhs = series_from_powers(grading, scale, &hs)?;
    let product = FactoredLFunction::l_product(params.entries().iter().map(|a| a.mul(scale)));
    let rhs = series_expand(&product, grading, bound)?;
    Ok((lhs, rhs))
}

/// The generating identity behind every `GL_N × GL_1` unramified evaluation.
pub fn rs_series_check(
    params: &SatakeSet,
    scale: &LaurentMonomial,
    grading: &VarId,
    bound: usize,
) -> Result<bool, SymmError> {
    let (lhs, rhs) = rs_series_sides(params, scale, grading, bound)?;
    Ok(lhs == rhs)
}

/// Satake parameters of `Ind(|det|^{ks} τ'^∨ ⊗ |det|^{-ks} τ^∨)`:
/// `{y_j^{-1} X^k} ∪ {x_i^{-1} X^{-k}}`.
pub fn induced_params(tau: &SatakeSet, tau_prime: &SatakeSet, k: usize) -> Result<SatakeSet, SymmError> {
    tau.expect_len(k)?;
    tau_prime.expect_len(k)?;
    let up = LaurentMonomial::x_t(k as i32, 0);
    let down = up.inv();
    let entries = tau_prime
        .inverse()
        .entries()
        .iter()
        .map(|y| y.mul(&up))
        .chain(tau.inverse().entries().iter().map(|x| x.mul(&down)))
        .collect();
    Ok(SatakeSet::new(entries)?)
}

/// Both sides of the truncated Cauchy identity
/// `Σ_{|λ| ≤ D} s_λ(x) s_λ(y) X^{|λ|} = L(s, x × y)` expanded in `X`.
pub fn cauchy_sides(
    x: &SatakeSet,
    y: &SatakeSet,
    bound: usize,
) -> Result<(TruncatedSeries, TruncatedSeries), SymmError> {
    let k = x.len();
    y.expect_len(k)?;
    let mut lhs = TruncatedSeries::zero(VarId::X, bound);
    for d in 0..=bound {
        let mut coeff = LaurentPoly::zero();
        for lambda in partitions_bounded(d, d, k) {
            let parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
            let w = DominantWeight::new(parts)?.padded(k);
            coeff = &coeff + &(&schur(&w, x)? * &schur(&w, y)?);
        }
        lhs.set_coeff(d, coeff);
    }
    let rhs = series_expand(&l_rankin_selberg(x, y, ArgForm::new(1, 0)), &VarId::X, bound)?;
    Ok((lhs, rhs))
}

pub fn truncated_cauchy_check(x: &SatakeSet, y: &SatakeSet, bound: usize) -> Result<bool, SymmError> {
    let (lhs, rhs) = cauchy_sides(x, y, bound)?;
    Ok(lhs == rhs)
}
