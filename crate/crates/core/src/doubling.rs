//! Unramified doubling ledger: the constants `d_τ` and `d_{τ,τ',a,b}`, the
//! zeta closed forms for `GL_n × GL_k` and `G × GL_k`, and the rank-one
//! γ-relation.
//!
//! Every constructor takes the multiplier of `s` explicitly where the
//! reductions need it, so that substitutions like `s ↦ αs/(ka)` are realized
//! by building the arguments on the `αs` lattice directly.

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    series_expand, series_from_powers, FactoredLFunction, LaurentMonomial, SeriesError,
    TruncatedSeries, VarId,
};
use crate::satake::{
    gamma_unramified, l_rankin_selberg, l_standard, l_sym2, l_wedge2, lift_to_gl, ArgForm,
    GroupData, GroupKind, SatakeError, SatakeSet,
};
use crate::symmfunc::{complete_homogeneous, induced_params, SymmError};

/// Name of the formal variable standing for `q^{-ζ}`.
pub const ZETA: &str = "zeta";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoublingError {
    #[error("{0} is not a classical group")]
    NotClassical(GroupData),
    #[error("split {a}+{b} does not give n = {n}")]
    BadSplit { a: usize, b: usize, n: usize },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("central characters are not inverse: det(τ)·det(τ') = {0}")]
    CentralCharacter(String),
    #[error("grading variable {0} occurs in τ or τ'")]
    GradingInParams(String),
    #[error(transparent)]
    Satake(#[from] SatakeError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Symm(#[from] SymmError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaClosedForm {
    pub group: GroupData,
    pub k: usize,
    /// Coefficient of `s` in the first-order arguments (`α` or `kn`).
    pub multiplier: i32,
    #[serde(serialize_with = "serialize_display")]
    pub value: FactoredLFunction,
}

fn serialize_display<S: serde::Serializer>(v: &FactoredLFunction, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl ZetaClosedForm {
    pub fn n(&self) -> usize {
        self.group.n()
    }
}

fn require_classical(group: GroupData) -> Result<(), DoublingError> {
    if group.is_classical() {
        Ok(())
    } else {
        Err(DoublingError::NotClassical(group))
    }
}

fn tau_cross_dual(tau: &SatakeSet, tau_prime: &SatakeSet, arg: ArgForm) -> FactoredLFunction {
    l_rankin_selberg(tau, &tau_prime.inverse(), arg)
}

fn check_central_character(tau: &SatakeSet, tau_prime: &SatakeSet) -> Result<(), DoublingError> {
    if tau.is_numeric() && tau_prime.is_numeric() {
        let prod = tau.determinant().mul(&tau_prime.determinant());
        if !prod.is_one() {
            return Err(DoublingError::CentralCharacter(prod.to_string()));
        }
    }
    Ok(())
}

/// `d_{τ,τ',a,b}(s) = ∏_{j≤b} L(2αs+j, τ×τ'^∨) / L(2αs+a+j, τ×τ'^∨)`.
pub fn d_gl_reduction(
    a: usize,
    b: usize,
    k: usize,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
    alpha: i32,
) -> Result<FactoredLFunction, DoublingError> {
    if a == 0 || b == 0 || k == 0 {
        return Err(DoublingError::ZeroRank);
    }
    tau.expect_len(k)?;
    tau_prime.expect_len(k)?;
    let mut out = FactoredLFunction::one();
    for j in 1..=b as i32 {
        out = out
            .mul(&tau_cross_dual(tau, tau_prime, ArgForm::int(2 * alpha, j)))
            .div(&tau_cross_dual(tau, tau_prime, ArgForm::int(2 * alpha, a as i32 + j)));
    }
    Ok(out)
}

/// `GL_n × GL_k` closed form with `s` scaled by `multiplier`:
/// `L(μs+½, π^∨×τ) L(μs+½, π×τ'^∨) / ∏_{j≤n} L(2μs+j, τ×τ'^∨)`.
pub fn z_gl_with_multiplier(
    n: usize,
    k: usize,
    multiplier: i32,
    pi: &SatakeSet,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
) -> Result<ZetaClosedForm, DoublingError> {
    if n == 0 || k == 0 {
        return Err(DoublingError::ZeroRank);
    }
    pi.expect_len(n)?;
    tau.expect_len(k)?;
    tau_prime.expect_len(k)?;
    check_central_character(tau, tau_prime)?;
    let first = ArgForm::half(multiplier);
    let mut value = l_rankin_selberg(&pi.inverse(), tau, first)
        .mul(&l_rankin_selberg(pi, &tau_prime.inverse(), first));
    for j in 1..=n as i32 {
        value = value.div(&tau_cross_dual(tau, tau_prime, ArgForm::int(2 * multiplier, j)));
    }
    Ok(ZetaClosedForm {
        group: GroupData::gl(n),
        k,
        multiplier,
        value,
    })
}

/// The `GL_n × GL_k` closed form in its own variable (`multiplier = kn`).
pub fn z_gl_closed(
    n: usize,
    k: usize,
    pi: &SatakeSet,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
) -> Result<ZetaClosedForm, DoublingError> {
    z_gl_with_multiplier(n, k, (k * n) as i32, pi, tau, tau_prime)
}

/// Left: `Z_n`. Right: `d_{a,b} · Z_a · Z_b`, all on the `alpha·s` lattice.
/// The honest identity uses `alpha = kn`.
#[allow(clippy::too_many_arguments)]
pub fn gl_reduction_sides(
    n: usize,
    a: usize,
    b: usize,
    k: usize,
    pi_a: &SatakeSet,
    pi_b: &SatakeSet,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
    alpha: i32,
) -> Result<(FactoredLFunction, FactoredLFunction), DoublingError> {
    if a + b != n {
        return Err(DoublingError::BadSplit { a, b, n });
    }
    let lhs = z_gl_closed(n, k, &pi_a.union(pi_b), tau, tau_prime)?.value;
    let za = z_gl_with_multiplier(a, k, alpha, pi_a, tau, tau_prime)?.value;
    let zb = z_gl_with_multiplier(b, k, alpha, pi_b, tau, tau_prime)?.value;
    let d = d_gl_reduction(a, b, k, tau, tau_prime, alpha)?;
    Ok((lhs, d.mul(&za).mul(&zb)))
}

#[allow(clippy::too_many_arguments)]
pub fn verify_gl_reduction(
    n: usize,
    a: usize,
    b: usize,
    k: usize,
    pi_a: &SatakeSet,
    pi_b: &SatakeSet,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
) -> Result<bool, DoublingError> {
    let alpha = (k * n) as i32;
    let (lhs, rhs) = gl_reduction_sides(n, a, b, k, pi_a, pi_b, tau, tau_prime, alpha)?;
    Ok(lhs.rf_equal(&rhs))
}

/// Splits `n = a+b+c` as `(a, b+c)` then `(b, c)`, and as `(a+b, c)` then
/// `(a, b)`. Returns the two resulting products on the `kn·s` lattice.
pub fn gl_associativity_sides(
    parts: [&SatakeSet; 3],
    k: usize,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
) -> Result<(FactoredLFunction, FactoredLFunction), DoublingError> {
    let [pa, pb, pc] = parts;
    let (a, b, c) = (pa.len(), pb.len(), pc.len());
    let alpha = (k * (a + b + c)) as i32;
    let z = |p: &SatakeSet| z_gl_with_multiplier(p.len(), k, alpha, p, tau, tau_prime).map(|z| z.value);
    let d = |x, y| d_gl_reduction(x, y, k, tau, tau_prime, alpha);
    let leaves = z(pa)?.mul(&z(pb)?).mul(&z(pc)?);
    let right_first = d(a, b + c)?.mul(&d(b, c)?).mul(&leaves);
    let left_first = d(a + b, c)?.mul(&d(a, b)?).mul(&leaves);
    Ok((right_first, left_first))
}

/// Both association orders agree with each other and with `Z_{a+b+c}`.
pub fn verify_gl_associativity(
    parts: [&SatakeSet; 3],
    k: usize,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
) -> Result<bool, DoublingError> {
    let (r, l) = gl_associativity_sides(parts, k, tau, tau_prime)?;
    let n = parts.iter().map(|p| p.len()).sum();
    let all = parts[0].union(parts[1]).union(parts[2]);
    let whole = z_gl_closed(n, k, &all, tau, tau_prime)?.value;
    Ok(r.rf_equal(&l) && r.rf_equal(&whole))
}

/// `L(αs+½, τ) / L(αs+n+½, τ)`.
pub fn standard_quotient(n: usize, alpha: i32, tau: &SatakeSet) -> FactoredLFunction {
    l_standard(tau, ArgForm::half(alpha)).div(&l_standard(tau, ArgForm::new(alpha, 2 * n as i32 + 1)))
}

/// `∏_{i≤k} ∏_{j≤n} L(αs+j−½, χ_i) / L(αs+j+½, χ_i)` before telescoping.
pub fn gk_standard_part(n: usize, alpha: i32, tau: &SatakeSet) -> FactoredLFunction {
    let mut out = FactoredLFunction::one();
    for chi in tau.entries() {
        let chi = SatakeSet::new(vec![chi.clone()]).expect("nonzero parameter");
        for j in 1..=n as i32 {
            out = out
                .mul(&l_standard(&chi, ArgForm::new(alpha, 2 * j - 1)))
                .div(&l_standard(&chi, ArgForm::new(alpha, 2 * j + 1)));
        }
    }
    out
}

/// `d_τ(s)` in closed form, with `α` taken from the group.
pub fn d_tau_closed(group: GroupData, k: usize, tau: &SatakeSet) -> Result<FactoredLFunction, DoublingError> {
    d_tau_closed_with_alpha(group, k, group.alpha(k), tau)
}

pub fn d_tau_closed_with_alpha(
    group: GroupData,
    k: usize,
    alpha: i32,
    tau: &SatakeSet,
) -> Result<FactoredLFunction, DoublingError> {
    require_classical(group)?;
    tau.expect_len(k)?;
    let n = group.n() as i32;
    let (floor, ceil) = (n / 2, (n + 1) / 2);
    let mut out = if group.kind() == GroupKind::Sp {
        standard_quotient(group.n(), alpha, tau)
    } else {
        FactoredLFunction::one()
    };
    for j in 1..=floor {
        out = out
            .mul(&l_sym2(tau, ArgForm::int(2 * alpha, 2 * j)))
            .div(&l_sym2(tau, ArgForm::int(2 * alpha, 2 * j + 2 * n - 2 * floor - 1)));
    }
    for j in 1..=ceil {
        out = out
            .mul(&l_wedge2(tau, ArgForm::int(2 * alpha, 2 * j - 1)))
            .div(&l_wedge2(tau, ArgForm::int(2 * alpha, 2 * j + 2 * n - 2 * ceil)));
    }
    Ok(out)
}

/// The raw Gindikin–Karpelevich product for `d_τ`, one rank-one factor per
/// positive root in the unipotent radical, before any telescoping.
pub fn d_tau_gk(group: GroupData, k: usize, tau: &SatakeSet) -> Result<FactoredLFunction, DoublingError> {
    require_classical(group)?;
    tau.expect_len(k)?;
    let n = group.n() as i32;
    let alpha = group.alpha(k);
    let chi = tau.entries();
    let quotient = |m: &LaurentMonomial, shift: i32| {
        let top = FactoredLFunction::l_factor(m.mul(&ArgForm::int(2 * alpha, shift - 1).monomial()));
        let bottom = FactoredLFunction::l_factor(m.mul(&ArgForm::int(2 * alpha, shift).monomial()));
        top.div(&bottom)
    };
    let mut out = if group.kind() == GroupKind::Sp {
        gk_standard_part(group.n(), alpha, tau)
    } else {
        FactoredLFunction::one()
    };
    for i in 0..chi.len() {
        for i2 in i + 1..chi.len() {
            let m = chi[i].mul(&chi[i2]);
            for j in 1..=n {
                for j2 in 1..=n {
                    out = out.mul(&quotient(&m, j + j2));
                }
            }
        }
        let sq = chi[i].pow(2);
        for j1 in 1..=n {
            for j2 in j1 + 1..=n {
                out = out.mul(&quotient(&sq, j1 + j2));
            }
        }
    }
    Ok(out)
}

/// `G × GL_k` closed form:
/// `L(αs+½, π×τ) / ([L(αs+n+½, τ)] ∏_{j≤n} L(2αs+2j, τ, ∧²) L(2αs+2j−1, τ, Sym²))`.
pub fn z_classical_closed(
    group: GroupData,
    k: usize,
    pi_n: &SatakeSet,
    tau: &SatakeSet,
) -> Result<ZetaClosedForm, DoublingError> {
    require_classical(group)?;
    if k == 0 {
        return Err(DoublingError::ZeroRank);
    }
    tau.expect_len(k)?;
    let n = group.n() as i32;
    let alpha = group.alpha(k);
    let pi = lift_to_gl(group, pi_n)?;
    let mut value = l_rankin_selberg(&pi, tau, ArgForm::half(alpha));
    if group.kind() == GroupKind::Sp {
        value = value.div(&l_standard(tau, ArgForm::new(alpha, 2 * n + 1)));
    }
    for j in 1..=n {
        value = value
            .div(&l_wedge2(tau, ArgForm::int(2 * alpha, 2 * j)))
            .div(&l_sym2(tau, ArgForm::int(2 * alpha, 2 * j - 1)));
    }
    Ok(ZetaClosedForm {
        group,
        k,
        multiplier: alpha,
        value,
    })
}

/// Left: the classical closed form. Right: `d_τ · Z_GL(π_n, τ, τ^∨)` with
/// both factors built on the `alpha·s` lattice (honest: `alpha = α(G,k)`).
pub fn classical_reduction_sides(
    group: GroupData,
    k: usize,
    pi_n: &SatakeSet,
    tau: &SatakeSet,
    alpha: i32,
) -> Result<(FactoredLFunction, FactoredLFunction), DoublingError> {
    let lhs = z_classical_closed(group, k, pi_n, tau)?.value;
    let d = d_tau_closed_with_alpha(group, k, alpha, tau)?;
    let z = z_gl_with_multiplier(group.n(), k, alpha, pi_n, tau, &tau.inverse())?.value;
    Ok((lhs, d.mul(&z)))
}

pub fn verify_classical_reduction(
    group: GroupData,
    k: usize,
    pi_n: &SatakeSet,
    tau: &SatakeSet,
) -> Result<bool, DoublingError> {
    let (lhs, rhs) = classical_reduction_sides(group, k, pi_n, tau, group.alpha(k))?;
    Ok(lhs.rf_equal(&rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zeta {
    Zero,
    /// Keep `q^{-ζ}` as the parameter named [`ZETA`].
    Formal,
}

/// `Ψ(ζ) = L(−ζ−ks+½, π×τ^∨) L(−ζ+ks+½, π×τ'^∨) / L(2ks+1, τ×τ'^∨)`.
pub fn psi_closed(
    k: usize,
    p: &LaurentMonomial,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
    zeta: Zeta,
) -> FactoredLFunction {
    let k = k as i32;
    let shift = match zeta {
        Zeta::Zero => LaurentMonomial::one(),
        Zeta::Formal => LaurentMonomial::symbol(ZETA).inv(),
    };
    let pi = SatakeSet::new(vec![p.mul(&shift)]).expect("nonzero π-parameter");
    l_rankin_selberg(&pi, &tau.inverse(), ArgForm::half(-k))
        .mul(&l_rankin_selberg(&pi, &tau_prime.inverse(), ArgForm::half(k)))
        .div(&tau_cross_dual(tau, tau_prime, ArgForm::int(2 * k, 1)))
}

/// Left: `L(2ks+1, τ×τ'^∨)^{-1} · Σ_{m≤D} W(ϖ^{(m,0,…,0)}) · p^m · T^{m(2−2k)}`,
/// summing the unramified Whittaker values of the induced representation.
/// Right: `Ψ(0)` expanded in `p`. With `normalize = false` the prefactor is
/// dropped.
pub fn psi_series_sides(
    k: usize,
    p: &VarId,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
    bound: usize,
    normalize: bool,
) -> Result<(TruncatedSeries, TruncatedSeries), DoublingError> {
    if k == 0 {
        return Err(DoublingError::ZeroRank);
    }
    if tau.vars().contains(p) || tau_prime.vars().contains(p) {
        return Err(DoublingError::GradingInParams(p.to_string()));
    }
    let induced = induced_params(tau, tau_prime, k)?;
    // W(ϖ^{(m,0..0)}) = T^{m(2k−1)} h_m, so the whole term is p^m T^m h_m.
    let hs: Vec<_> = (0..=bound).map(|m| complete_homogeneous(m, &induced)).collect();
    let scale = LaurentMonomial::var(p.clone()).mul(&LaurentMonomial::x_t(0, 1));
    let mut lhs = series_from_powers(p, &scale, &hs)?;
    if normalize {
        let prefactor = tau_cross_dual(tau, tau_prime, ArgForm::int(2 * k as i32, 1)).inv();
        lhs = series_expand(&prefactor, p, bound)?.mul(&lhs);
    }
    let pm = LaurentMonomial::var(p.clone());
    let rhs = series_expand(&psi_closed(k, &pm, tau, tau_prime, Zeta::Zero), p, bound)?;
    Ok((lhs, rhs))
}

pub fn psi_series_check(
    k: usize,
    p: &VarId,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
    bound: usize,
) -> Result<bool, DoublingError> {
    let (lhs, rhs) = psi_series_sides(k, p, tau, tau_prime, bound, true)?;
    Ok(lhs == rhs)
}

/// Left: `γ(ks+½, π^{-1}×τ) · Z_GL(1)`. Right: `Ψ(0)`.
pub fn prop_gl1_sides(
    k: usize,
    p: &LaurentMonomial,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
) -> Result<(FactoredLFunction, FactoredLFunction), DoublingError> {
    let pi = SatakeSet::new(vec![p.clone()])?;
    let z = z_gl_closed(1, k, &pi, tau, tau_prime)?.value;
    let lhs = gamma_unramified(p, tau, k).mul(&z);
    Ok((lhs, psi_closed(k, p, tau, tau_prime, Zeta::Zero)))
}

pub fn verify_prop_gl1(
    k: usize,
    p: &LaurentMonomial,
    tau: &SatakeSet,
    tau_prime: &SatakeSet,
) -> Result<bool, DoublingError> {
    let (lhs, rhs) = prop_gl1_sides(k, p, tau, tau_prime)?;
    Ok(lhs.rf_equal(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{to_latex, Exponents};

    fn sym(prefix: &str, k: usize) -> SatakeSet {
        SatakeSet::symbolic(prefix, k)
    }

    fn f(s: &str) -> FactoredLFunction {
        s.parse().unwrap()
    }

    #[test]
    fn d_gl_small_cases() {
        let (x, y) = (sym("x", 1), sym("y", 1));
        let d = d_gl_reduction(1, 1, 1, &x, &y, 2).unwrap();
        assert!(d.rf_equal(&f("(1 - x1*y1^-1*T^2*X^4)^-1 * (1 - x1*y1^-1*T^4*X^4)")));
        // a=1, b=n−1 telescopes.
        let n = 4;
        let d = d_gl_reduction(1, n - 1, 1, &x, &y, n as i32).unwrap();
        let expect = tau_cross_dual(&x, &y, ArgForm::int(2 * n as i32, 1))
            .div(&tau_cross_dual(&x, &y, ArgForm::int(2 * n as i32, n as i32)));
        assert_eq!(d, expect);
        // a=b=2: {1,2} over {3,4}.
        let d = d_gl_reduction(2, 2, 1, &x, &y, 3).unwrap();
        let exps: Vec<i32> = d.factors().map(|(m, e)| e * m.degree_in(&VarId::T) / 2).collect();
        assert_eq!(exps, vec![-1, -2, 3, 4]);
    }

    #[test]
    fn z_gl_rank_one() {
        let (p, x, y) = (sym("p", 1), sym("x", 1), sym("y", 1));
        let z = z_gl_closed(1, 1, &p, &x, &y).unwrap();
        assert_eq!(z.multiplier, 1);
        let trivial = SatakeSet::symbols(&["u"]).unwrap().map(|_| LaurentMonomial::one());
        let z = z_gl_closed(1, 1, &trivial, &trivial, &trivial).unwrap().value;
        assert!(z.rf_equal(&f("(1 - T^2*X^2) * (1 - T*X)^-2")));
        assert!(z.rf_equal(&f("(1 + T*X) * (1 - T*X)^-1")));
    }

    #[test]
    fn z_gl_self_dual_denominator() {
        let tau = sym("x", 3);
        let z = z_gl_closed(2, 3, &sym("p", 2), &tau, &tau).unwrap().value;
        let mut expect = l_rankin_selberg(&sym("p", 2).inverse(), &tau, ArgForm::half(6))
            .mul(&l_rankin_selberg(&sym("p", 2), &tau.inverse(), ArgForm::half(6)));
        for j in 1..=2 {
            let arg = ArgForm::int(12, j);
            let tt = l_sym2(&tau, arg).mul(&l_wedge2(&tau, arg));
            assert!(tt.rf_equal(&l_rankin_selberg(&tau, &tau, arg)));
            expect = expect.div(&l_rankin_selberg(&tau, &tau.inverse(), arg));
        }
        assert!(z.rf_equal(&expect));
    }

    #[test]
    fn central_character_enforced_for_numbers() {
        let tau = SatakeSet::parse_list("2,3").unwrap();
        let bad = SatakeSet::parse_list("1,1").unwrap();
        let good = SatakeSet::parse_list("1/2,1/3").unwrap();
        let pi = SatakeSet::parse_list("5").unwrap();
        assert!(matches!(z_gl_closed(1, 2, &pi, &tau, &bad), Err(DoublingError::CentralCharacter(_))));
        assert!(z_gl_closed(1, 2, &pi, &tau, &good).is_ok());
    }

    #[test]
    fn gl_reduction_examples() {
        let (x, y) = (sym("x", 1), sym("y", 1));
        assert!(verify_gl_reduction(2, 1, 1, 1, &sym("a", 1), &sym("b", 1), &x, &y).unwrap());
        let (x, y) = (sym("x", 2), sym("y", 2));
        assert!(verify_gl_reduction(3, 1, 2, 2, &sym("a", 1), &sym("b", 2), &x, &y).unwrap());
        assert!(matches!(
            verify_gl_reduction(3, 1, 1, 2, &sym("a", 1), &sym("b", 1), &x, &y),
            Err(DoublingError::BadSplit { .. })
        ));
    }

    #[test]
    fn gl_reduction_mutation() {
        let (x, y) = (sym("x", 2), sym("y", 2));
        let (a, b, k) = (1, 2, 2);
        let (pa, pb) = (sym("a", 1), sym("b", 2));
        let (lhs, rhs) = gl_reduction_sides(3, a, b, k, &pa, &pb, &x, &y, 6).unwrap();
        let fix = d_gl_reduction(a + 1, b, k, &x, &y, 6)
            .unwrap()
            .div(&d_gl_reduction(a, b, k, &x, &y, 6).unwrap());
        assert!(!lhs.rf_equal(&rhs.mul(&fix)));
    }

    #[test]
    fn gl_associativity() {
        let (x, y) = (sym("x", 2), sym("y", 2));
        let parts = [&sym("a", 1), &sym("b", 2), &sym("c", 1)];
        assert!(verify_gl_associativity(parts, 2, &x, &y).unwrap());
    }

    #[test]
    fn d_tau_examples() {
        let x = sym("x", 1);
        let sp = d_tau_closed(GroupData::sp(1), 1, &x).unwrap();
        assert_eq!(sp, f("(1 - x1*T*X^3)^-1 * (1 - x1*T^3*X^3)"));
        let so = d_tau_closed(GroupData::so(1), 1, &x).unwrap();
        assert!(so.is_one());
        let so2 = d_tau_closed(GroupData::so(1), 2, &sym("x", 2)).unwrap();
        assert_eq!(so2, f("(1 - x1*x2*T^2*X^6)^-1 * (1 - x1*x2*T^4*X^6)"));
        assert!(matches!(
            d_tau_closed(GroupData::gl(2), 1, &x),
            Err(DoublingError::NotClassical(_))
        ));
    }

    #[test]
    fn d_tau_sp_two_two_shape() {
        let tau = sym("x", 2);
        let d = d_tau_closed(GroupData::sp(2), 2, &tau).unwrap();
        let alpha = 9;
        let expect = standard_quotient(2, alpha, &tau)
            .mul(&l_sym2(&tau, ArgForm::int(2 * alpha, 2)))
            .div(&l_sym2(&tau, ArgForm::int(2 * alpha, 3)))
            .mul(&l_wedge2(&tau, ArgForm::int(2 * alpha, 1)))
            .div(&l_wedge2(&tau, ArgForm::int(2 * alpha, 4)));
        assert_eq!(d, expect);
    }

    #[test]
    fn gk_examples() {
        let x = sym("x", 1);
        let sp = d_tau_gk(GroupData::sp(1), 1, &x).unwrap();
        assert!(sp.rf_equal(&f("(1 - x1*T*X^3)^-1 * (1 - x1*T^3*X^3)")));
        let so = d_tau_gk(GroupData::so(1), 2, &sym("x", 2)).unwrap();
        assert_eq!(so, f("(1 - x1*x2*T^2*X^6)^-1 * (1 - x1*x2*T^4*X^6)"));
    }

    #[test]
    fn gk_telescopes_small() {
        for kind in [GroupKind::Sp, GroupKind::So] {
            for n in 1..=3 {
                for k in 1..=3 {
                    let g = GroupData::new(kind, n).unwrap();
                    let tau = sym("x", k);
                    let raw = d_tau_gk(g, k, &tau).unwrap();
                    let closed = d_tau_closed(g, k, &tau).unwrap();
                    assert!(raw.rf_equal(&closed), "{g} k={k}");
                }
            }
        }
    }

    #[test]
    fn standard_part_telescopes() {
        let tau = sym("x", 3);
        assert_eq!(gk_standard_part(4, 7, &tau), standard_quotient(4, 7, &tau));
    }

    #[test]
    fn classical_closed_examples() {
        let b = SatakeSet::symbols(&["b"]).unwrap();
        let x = sym("x", 1);
        let z = z_classical_closed(GroupData::sp(1), 1, &b, &x).unwrap();
        assert_eq!(z.multiplier, 3);
        let expect = f("(1 - b*x1*T*X^3)^-1 * (1 - x1*T*X^3)^-1 * (1 - b^-1*x1*T*X^3)^-1 \
                        * (1 - x1*T^3*X^3) * (1 - x1^2*T^2*X^6)");
        assert!(z.value.rf_equal(&expect));
        let z = z_classical_closed(GroupData::so(1), 1, &b, &x).unwrap();
        assert_eq!(z.multiplier, 1);
        assert!(z.value.rf_equal(&f("(1 - b*x1*T*X)^-1 * (1 - b^-1*x1*T*X)^-1 * (1 - x1^2*T^2*X^2)")));
    }

    #[test]
    fn classical_reduction_examples() {
        assert!(verify_classical_reduction(GroupData::sp(1), 1, &sym("b", 1), &sym("x", 1)).unwrap());
        assert!(verify_classical_reduction(GroupData::so(2), 2, &sym("b", 2), &sym("x", 2)).unwrap());
        let g = GroupData::sp(2);
        let (lhs, rhs) = classical_reduction_sides(g, 2, &sym("b", 2), &sym("x", 2), g.alpha(2) + 1).unwrap();
        assert!(!lhs.rf_equal(&rhs));
    }

    #[test]
    fn psi_shape() {
        let p = LaurentMonomial::symbol("p");
        let psi = psi_closed(1, &p, &sym("x", 1), &sym("y", 1), Zeta::Zero);
        assert_eq!(psi.factor_count(), 3);
        assert!(psi.factors().any(|(m, e)| e == -1 && m.degree_in(&VarId::X) == -1));
        assert_eq!(psi.factors().filter(|(_, e)| *e > 0).count(), 1);
        let formal = psi_closed(1, &p, &sym("x", 1), &sym("y", 1), Zeta::Formal);
        assert!(formal.specialize_to_one(&VarId::param(ZETA)).rf_equal(&psi));
        assert!(to_latex(&formal).contains("zeta"));
    }

    #[test]
    fn psi_relabeling_symmetry() {
        let p = LaurentMonomial::symbol("p");
        let (x, y) = (sym("x", 2), sym("y", 2));
        let psi = psi_closed(2, &p, &x, &y, Zeta::Zero);
        let flipped = psi_closed(2, &p.inv(), &y, &x, Zeta::Zero)
            .invert_vars(&[VarId::X, VarId::param("p")].into());
        // Numerators swap; the denominator becomes L(2ks+1, τ'×τ^∨) read at X^{-1}.
        let num = |g: &FactoredLFunction| -> Vec<Exponents> {
            let mut v: Vec<_> = g
                .factors()
                .filter(|(_, e)| *e < 0)
                .map(|(m, _)| m.exponents().clone())
                .collect();
            v.sort();
            v
        };
        assert_eq!(num(&psi), num(&flipped));
    }

    #[test]
    fn psi_series_examples() {
        let p = VarId::param("p");
        assert!(psi_series_check(1, &p, &sym("x", 1), &sym("y", 1), 10).unwrap());
        let (lhs, rhs) = psi_series_sides(1, &p, &sym("x", 1), &sym("y", 1), 6, false).unwrap();
        assert_ne!(lhs, rhs);
        assert!(psi_series_check(1, &VarId::param("x1"), &sym("x", 1), &sym("y", 1), 3).is_err());
    }

    #[test]
    fn prop_gl1_examples() {
        let p = LaurentMonomial::symbol("p");
        for k in [1, 3] {
            assert!(verify_prop_gl1(k, &p, &sym("x", k), &sym("y", k)).unwrap());
        }
        let (lhs, rhs) = prop_gl1_sides(1, &p, &sym("x", 1), &sym("y", 1)).unwrap();
        let gamma = gamma_unramified(&p, &sym("x", 1), 1);
        assert!(!lhs.div(&gamma).div(&gamma).rf_equal(&rhs));
    }
}
