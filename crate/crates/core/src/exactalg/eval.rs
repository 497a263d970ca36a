use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factored::FactoredLFunction;
use super::monomial::{Exponents, LaurentMonomial, VarId};
use super::poly::LaurentPoly;
use super::{EvalError, Rational};

/// A point: exact rational value per variable.
pub type Assignment = BTreeMap<VarId, Rational>;

/// Numerators and denominators of sampled values lie in `1..=SAMPLE_BOUND`.
pub const SAMPLE_BOUND: i64 = 1000;
/// Attempts per point before giving up on poles.
pub const MAX_RESAMPLES: usize = 16;

fn pow_value(v: &Rational, e: i32) -> Result<Rational, EvalError> {
    if e < 0 && v.is_zero() {
        return Err(EvalError::PoleAtPoint {
            detail: "negative power of a variable assigned 0".into(),
        });
    }
    Ok(num_traits::pow::pow(
        if e < 0 { v.recip() } else { v.clone() },
        e.unsigned_abs() as usize,
    ))
}

pub fn eval_monomial(m: &LaurentMonomial, assignment: &Assignment) -> Result<Rational, EvalError> {
    let mut acc = m.coeff().clone();
    for (v, e) in m.exponents().iter() {
        let value = assignment
            .get(v)
            .ok_or_else(|| EvalError::Unassigned(v.to_string()))?;
        acc *= pow_value(value, e)?;
    }
    Ok(acc)
}

pub(crate) fn partial_eval_monomial(
    m: &LaurentMonomial,
    assignment: &Assignment,
) -> Result<LaurentMonomial, EvalError> {
    let mut coeff = m.coeff().clone();
    let mut kept = Vec::new();
    for (v, e) in m.exponents().iter() {
        match assignment.get(v) {
            Some(value) => coeff *= pow_value(value, e)?,
            None => kept.push((v.clone(), e)),
        }
    }
    Ok(LaurentMonomial::new(coeff, Exponents::from_pairs(kept)))
}

/// Exact value of `p` at a point.
///
/// Every term is scaled by one common denominator so the sum runs over
/// integers; only the final quotient is reduced.
pub fn eval_poly(p: &LaurentPoly, assignment: &Assignment) -> Result<Rational, EvalError> {
    // Exponent range per variable, widened to include 0.
    let mut ranges: BTreeMap<&VarId, (i32, i32)> = BTreeMap::new();
    for (exps, _) in p.raw_terms() {
        for (v, e) in exps.iter() {
            let r = ranges.entry(v).or_insert((0, 0));
            *r = (r.0.min(e), r.1.max(e));
        }
    }
    struct Powers {
        lo: i32,
        hi: i32,
        num: Vec<BigInt>,
        den: Vec<BigInt>,
    }
    let mut powers: BTreeMap<&VarId, Powers> = BTreeMap::new();
    for (&v, &(lo, hi)) in &ranges {
        let value = assignment
            .get(v)
            .ok_or_else(|| EvalError::Unassigned(v.to_string()))?;
        if value.is_zero() {
            if lo < 0 {
                return Err(EvalError::PoleAtPoint {
                    detail: format!("negative power of {v}, which is assigned 0"),
                });
            }
            // Rare; the term-by-term path handles zero bases directly.
            return p.terms().try_fold(Rational::zero(), |acc, m| {
                Ok(acc + eval_monomial(&m, assignment)?)
            });
        }
        let span = (hi - lo) as usize;
        let table = |b: &BigInt| {
            let mut t = Vec::with_capacity(span + 1);
            t.push(BigInt::one());
            for i in 0..span {
                let next = &t[i] * b;
                t.push(next);
            }
            t
        };
        powers.insert(v, Powers { lo, hi, num: table(value.numer()), den: table(value.denom()) });
    }
    // value = Σ c · ∏ n^e d^{-e} = (Σ c · ∏ n^{e−lo} d^{hi−e}) / ∏ n^{-lo} d^{hi}
    let mut by_denominator: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for (exps, c) in p.raw_terms() {
        let mut term = c.numer().clone();
        for (v, pw) in &powers {
            let e = exps.degree_in(v);
            term *= &pw.num[(e - pw.lo) as usize];
            term *= &pw.den[(pw.hi - e) as usize];
        }
        *by_denominator.entry(c.denom().clone()).or_insert_with(BigInt::zero) += term;
    }
    let mut scale = BigInt::one();
    for pw in powers.values() {
        scale *= &pw.num[(-pw.lo) as usize];
        scale *= &pw.den[pw.hi as usize];
    }
    let total = by_denominator
        .into_iter()
        .fold(Rational::zero(), |acc, (d, n)| acc + Rational::new(n, d));
    Ok(total / Rational::from_integer(scale))
}

/// Exact value of `f` at a point covering all of its variables.
pub fn eval_at(f: &FactoredLFunction, assignment: &Assignment) -> Result<Rational, EvalError> {
    let mut acc = eval_monomial(f.unit(), assignment)?;
    for (m, e) in f.factors() {
        let base = Rational::one() - eval_monomial(m, assignment)?;
        if base.is_zero() {
            if e < 0 {
                return Err(EvalError::PoleAtPoint {
                    detail: format!("(1 - {m})^{e} vanishes"),
                });
            }
            return Ok(Rational::zero());
        }
        acc *= pow_value(&base, e)?;
    }
    Ok(acc)
}

/// Partially evaluates a factored function, keeping unassigned variables.
pub fn partial_eval(
    f: &FactoredLFunction,
    assignment: &Assignment,
) -> Result<FactoredLFunction, EvalError> {
    let unit = partial_eval_monomial(f.unit(), assignment)?;
    if unit.is_zero() {
        return Err(EvalError::PoleAtPoint {
            detail: "unit vanishes".into(),
        });
    }
    let mut out = FactoredLFunction::from_unit(unit);
    for (m, e) in f.factors() {
        let key = partial_eval_monomial(m, assignment)?;
        if key.is_one() {
            return Err(EvalError::PoleAtPoint {
                detail: format!("(1 - {m}) vanishes"),
            });
        }
        if key.is_constant() {
            let v = pow_value(&(Rational::one() - key.coeff()), e)?;
            out = out.mul(&FactoredLFunction::from_unit(LaurentMonomial::constant(v)));
        } else {
            out.push_factor(key, e);
        }
    }
    Ok(out)
}

/// Seeded sampler of nonzero bounded rationals.
#[derive(Clone, Debug)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self) -> Rational {
        let num: i64 = self.rng.random_range(1..=SAMPLE_BOUND);
        let den: i64 = self.rng.random_range(1..=SAMPLE_BOUND);
        let r = Rational::new(num.into(), den.into());
        if self.rng.random_bool(0.5) {
            -r
        } else {
            r
        }
    }

    pub fn sample_vec(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.sample()).collect()
    }

    pub fn assignment<'a, I: IntoIterator<Item = &'a VarId>>(&mut self, vars: I) -> Assignment {
        vars.into_iter().map(|v| (v.clone(), self.sample())).collect()
    }
}

/// Outcome of a randomized identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampledOutcome {
    Agree,
    /// The point where the two sides differ, with both values.
    Disagree {
        point: Assignment,
        lhs: Rational,
        rhs: Rational,
    },
}

/// Compares `f` and `g` at `points` random points, re-sampling a point up to
/// [`MAX_RESAMPLES`] times when either side has a pole there.
pub fn sampled_equal(
    f: &FactoredLFunction,
    g: &FactoredLFunction,
    sampler: &mut RationalSampler,
    points: usize,
) -> Result<SampledOutcome, EvalError> {
    let vars: BTreeSet<VarId> = f.vars().union(&g.vars()).cloned().collect();
    for _ in 0..points {
        let mut done = false;
        for _ in 0..MAX_RESAMPLES {
            let point = sampler.assignment(&vars);
            match (eval_at(f, &point), eval_at(g, &point)) {
                (Ok(a), Ok(b)) => {
                    if a != b {
                        return Ok(SampledOutcome::Disagree { point, lhs: a, rhs: b });
                    }
                    done = true;
                    break;
                }
                (Err(EvalError::PoleAtPoint { .. }), _) | (_, Err(EvalError::PoleAtPoint { .. })) => {}
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        if !done {
            return Err(EvalError::ResamplesExhausted(MAX_RESAMPLES));
        }
    }
    Ok(SampledOutcome::Agree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn geometric_value() {
        let f = FactoredLFunction::l_factor(LaurentMonomial::symbol("x").mul(&LaurentMonomial::x_t(1, 0)));
        let pt: Assignment = [(VarId::param("x"), q(2, 1)), (VarId::X, q(1, 3))].into();
        assert_eq!(eval_at(&f, &pt).unwrap(), q(3, 1));
    }

    #[test]
    fn unit_value() {
        let f = FactoredLFunction::from_unit(LaurentMonomial::x_t(0, 2).scale(&q(5, 1)));
        let pt: Assignment = [(VarId::T, q(1, 2))].into();
        assert_eq!(eval_at(&f, &pt).unwrap(), q(5, 4));
    }

    #[test]
    fn pole_detected() {
        let f = FactoredLFunction::l_factor(LaurentMonomial::x_t(1, 0));
        let pt: Assignment = [(VarId::X, q(1, 1))].into();
        assert!(matches!(eval_at(&f, &pt), Err(EvalError::PoleAtPoint { .. })));
    }

    #[test]
    fn missing_variable_reported() {
        let f = FactoredLFunction::l_factor(LaurentMonomial::x_t(1, 0));
        assert!(matches!(eval_at(&f, &Assignment::new()), Err(EvalError::Unassigned(_))));
    }

    #[test]
    fn sampler_is_deterministic_and_bounded() {
        let a: Vec<_> = RationalSampler::new(7).sample_vec(50);
        let b: Vec<_> = RationalSampler::new(7).sample_vec(50);
        assert_eq!(a, b);
        for r in a {
            assert!(!r.is_zero());
            assert!(r.numer().magnitude() <= &SAMPLE_BOUND.unsigned_abs().into());
            assert!(r.denom() <= &SAMPLE_BOUND.into());
        }
    }

    #[test]
    fn sampled_check_spots_difference() {
        let x = LaurentMonomial::symbol("x").mul(&LaurentMonomial::x_t(1, 0));
        let f = FactoredLFunction::l_factor(x.clone());
        let g = FactoredLFunction::l_factor(x.pow(2));
        let mut s = RationalSampler::new(1);
        assert!(matches!(sampled_equal(&f, &g, &mut s, 3).unwrap(), SampledOutcome::Disagree { .. }));
        assert_eq!(sampled_equal(&f, &f, &mut s, 3).unwrap(), SampledOutcome::Agree);
    }

    #[test]
    fn partial_eval_keeps_free_vars() {
        let m = LaurentMonomial::symbol("x").mul(&LaurentMonomial::x_t(2, 1));
        let f = FactoredLFunction::l_factor(m);
        let pt: Assignment = [(VarId::param("x"), q(3, 2))].into();
        let g = partial_eval(&f, &pt).unwrap();
        let expect = FactoredLFunction::l_factor(LaurentMonomial::x_t(2, 1).scale(&q(3, 2)));
        assert_eq!(g, expect);
    }
}
