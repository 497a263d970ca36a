//! Identity suites: parameter sweeps over every identity in the crate, run in
//! parallel, each case checked exactly and at seeded random rational points.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::doubling::{
    classical_reduction_sides, d_tau_closed, d_tau_gk, gk_standard_part, gl_associativity_sides,
    gl_reduction_sides, prop_gl1_sides, psi_series_sides, standard_quotient, z_gl_closed,
};
use crate::exactalg::{
    sampled_equal, series_expand, EvalError, FactoredLFunction, LaurentMonomial, RationalSampler,
    SampledOutcome, TruncatedSeries, VarId,
};
use crate::kcorbits::{
    compositions, doubling_orbit, semi_whittaker_dim_bound, valid_nilpotent_orbit, Composition,
    Partition,
};
use crate::satake::{
    l_rankin_selberg, l_sym2, l_wedge2, siegel_factorization_sides, ArgForm, GroupData, GroupKind,
    SatakeSet,
};
use crate::symmfunc::{cauchy_sides, rs_series_sides, shintani_whittaker};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Satake,
    Symmfunc,
    Orbits,
    Doubling,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["algebra", "satake", "symmfunc", "orbits", "doubling", "all"];

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Algebra, Suite::Satake, Suite::Symmfunc, Suite::Orbits, Suite::Doubling],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Suite::NAMES[*self as usize])
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "algebra" => Suite::Algebra,
            "satake" => Suite::Satake,
            "symmfunc" => Suite::Symmfunc,
            "orbits" => Suite::Orbits,
            "doubling" => Suite::Doubling,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    /// Truncation degree for series identities.
    pub trunc: usize,
    pub seed: u64,
    pub max_n: usize,
    pub max_k: usize,
    /// Random rational Satake parameters instead of symbols.
    pub numeric: bool,
    /// Random points per identity for the Schwartz–Zippel pass.
    pub sample_points: usize,
    #[serde(skip)]
    pub inject_failure: bool,
    #[serde(skip)]
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig {
            trunc: 12,
            seed,
            max_n: 3,
            max_k: 3,
            numeric: false,
            sample_points: 3,
            inject_failure: false,
            timings: false,
        }
    }

    /// Defaults for `--numeric`: larger ranks at random rational points.
    pub fn numeric(seed: u64) -> Self {
        SuiteConfig {
            max_n: 5,
            max_k: 4,
            numeric: true,
            ..SuiteConfig::new(seed)
        }
    }
}

/// What a case produces for the runner to judge.
pub enum Check {
    Factored(FactoredLFunction, FactoredLFunction),
    Series(TruncatedSeries, TruncatedSeries),
    Holds { ok: bool, detail: String },
    Error(String),
}

impl<E: fmt::Display> From<Result<(FactoredLFunction, FactoredLFunction), E>> for Check {
    fn from(r: Result<(FactoredLFunction, FactoredLFunction), E>) -> Self {
        match r {
            Ok((l, r)) => Check::Factored(l, r),
            Err(e) => Check::Error(e.to_string()),
        }
    }
}

impl<E: fmt::Display> From<Result<(TruncatedSeries, TruncatedSeries), E>> for Check {
    fn from(r: Result<(TruncatedSeries, TruncatedSeries), E>) -> Self {
        match r {
            Ok((l, r)) => Check::Series(l, r),
            Err(e) => Check::Error(e.to_string()),
        }
    }
}

type CaseFn = dyn Fn(&mut RationalSampler) -> Check + Send + Sync;

/// One identity at one parameter tuple. The closure receives the case's own
/// sampler, used both for numeric parameters and for the random-point pass.
#[derive(Clone)]
pub struct IdentityCase {
    pub identity: String,
    pub params: String,
    check: Arc<CaseFn>,
}

impl IdentityCase {
    pub fn new<F>(identity: &str, params: String, check: F) -> Self
    where
        F: Fn(&mut RationalSampler) -> Check + Send + Sync + 'static,
    {
        IdentityCase {
            identity: identity.to_string(),
            params,
            check: Arc::new(check),
        }
    }

    pub fn digest(&self) -> String {
        let bytes = Sha256::digest(format!("{}|{}", self.identity, self.params).as_bytes());
        bytes[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    fn case_seed(&self, seed: u64) -> u64 {
        let bytes = Sha256::digest(format!("{seed}|{}|{}", self.identity, self.params).as_bytes());
        u64::from_le_bytes(bytes[..8].try_into().expect("8 bytes"))
    }

    pub fn run(&self, config: &SuiteConfig) -> CaseReport {
        let start = Instant::now();
        let mut sampler = RationalSampler::new(self.case_seed(config.seed));
        let check = (self.check)(&mut sampler);
        let (passed, witness) = judge(check, &mut sampler, config.sample_points);
        CaseReport {
            identity: self.identity.clone(),
            params: self.params.clone(),
            digest: self.digest(),
            status: if passed { Status::Pass } else { Status::Fail },
            elapsed_ms: config.timings.then(|| start.elapsed().as_millis() as u64),
            witness,
        }
    }
}

fn judge(check: Check, sampler: &mut RationalSampler, points: usize) -> (bool, Option<String>) {
    match check {
        Check::Factored(lhs, rhs) => {
            if let Some(w) = lhs.difference_witness(&rhs) {
                return (false, Some(format!("leading term of difference: {w}")));
            }
            match sampled_equal(&lhs, &rhs, sampler, points) {
                Ok(SampledOutcome::Agree) => (true, None),
                Ok(SampledOutcome::Disagree { point, lhs, rhs }) => {
                    (false, Some(format!("sides differ at {}: {lhs} vs {rhs}", show_point(&point))))
                }
                Err(e) => (false, Some(e.to_string())),
            }
        }
        Check::Series(lhs, rhs) => {
            if lhs.grading() != rhs.grading() || lhs.bound() != rhs.bound() {
                return (false, Some("series have different shapes".into()));
            }
            for (i, (a, b)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
                if a != b {
                    let lead = (a - b).leading_term().map(|m| m.to_string()).unwrap_or_default();
                    return (false, Some(format!("coefficient of {}^{i} differs: {lead}", lhs.grading())));
                }
            }
            match sampled_series(&lhs, &rhs, sampler, points) {
                Ok(None) => (true, None),
                Ok(Some(w)) => (false, Some(w)),
                Err(e) => (false, Some(e.to_string())),
            }
        }
        Check::Holds { ok, detail } => (ok, (!ok).then_some(detail)),
        Check::Error(e) => (false, Some(format!("error: {e}"))),
    }
}

fn show_point(point: &crate::exactalg::Assignment) -> String {
    let parts: Vec<String> = point.iter().map(|(v, r)| format!("{v}={r}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Evaluates both series coefficient-wise at random points.
pub fn sampled_series(
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    sampler: &mut RationalSampler,
    points: usize,
) -> Result<Option<String>, EvalError> {
    let vars: BTreeSet<VarId> = lhs
        .coeffs()
        .iter()
        .chain(rhs.coeffs())
        .flat_map(|c| c.vars())
        .collect();
    for _ in 0..points {
        let point = sampler.assignment(&vars);
        let a = lhs.eval_coeffs(&point)?;
        let b = rhs.eval_coeffs(&point)?;
        if let Some(i) = (0..a.len()).find(|&i| a[i] != b[i]) {
            return Ok(Some(format!(
                "coefficient of {}^{i} differs at {}",
                lhs.grading(),
                show_point(&point)
            )));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub identity: String,
    pub params: String,
    pub digest: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: Suite,
    pub seed: u64,
    pub config: SuiteConfig,
    pub cases: Vec<CaseReport>,
    pub totals: Totals,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }
}

pub fn run_cases(suite: Suite, cases: &[IdentityCase], config: &SuiteConfig) -> SuiteReport {
    let mut reports: Vec<CaseReport> = cases.par_iter().map(|c| c.run(config)).collect();
    reports.sort_by(|a, b| (&a.identity, &a.digest).cmp(&(&b.identity, &b.digest)));
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    SuiteReport {
        schema: SCHEMA_VERSION,
        suite,
        seed: config.seed,
        config: config.clone(),
        totals: Totals {
            cases: reports.len(),
            passed,
            failed: reports.len() - passed,
        },
        cases: reports,
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    run_cases(suite, &build_cases(suite, config), config)
}

pub fn build_cases(suite: Suite, config: &SuiteConfig) -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for s in suite.members() {
        match s {
            Suite::Algebra => algebra_cases(config, &mut cases),
            Suite::Satake => satake_cases(config, &mut cases),
            Suite::Symmfunc => symmfunc_cases(config, &mut cases),
            Suite::Orbits => orbit_cases(config, &mut cases),
            Suite::Doubling => doubling_cases(config, &mut cases),
            Suite::All => unreachable!("expanded by members"),
        }
    }
    if config.inject_failure {
        cases.push(IdentityCase::new("injected.shifted_factor", "bad".into(), |_| {
            let x = LaurentMonomial::x_t(1, 0);
            Check::Factored(
                FactoredLFunction::l_factor(x.clone()),
                FactoredLFunction::l_factor(x.mul(&LaurentMonomial::x_t(0, 1))),
            )
        }));
    }
    cases
}

/// Symbolic `prefix1..prefixk`, or `k` random rationals when numeric.
pub fn param_set(sampler: &mut RationalSampler, prefix: &str, k: usize, numeric: bool) -> SatakeSet {
    if numeric {
        SatakeSet::values(&sampler.sample_vec(k)).expect("samples are nonzero")
    } else {
        SatakeSet::symbolic(prefix, k)
    }
}

/// A random rational `τ'` whose central character inverts that of `tau`.
pub fn numeric_partner(sampler: &mut RationalSampler, tau: &SatakeSet) -> SatakeSet {
    let k = tau.len();
    let mut vals = sampler.sample_vec(k - 1);
    let partial = vals
        .iter()
        .fold(tau.determinant().coeff().clone(), |acc, v| acc * v);
    vals.push(num_traits::Inv::inv(partial));
    SatakeSet::values(&vals).expect("samples are nonzero")
}

fn tau_pair(s: &mut RationalSampler, k: usize, numeric: bool) -> (SatakeSet, SatakeSet) {
    let tau = param_set(s, "x", k, numeric);
    let tau_prime = if numeric { numeric_partner(s, &tau) } else { SatakeSet::symbolic("y", k) };
    (tau, tau_prime)
}

fn mode(numeric: bool) -> &'static str {
    if numeric {
        "numeric"
    } else {
        "symbolic"
    }
}

fn algebra_cases(config: &SuiteConfig, out: &mut Vec<IdentityCase>) {
    for (mu, two_nu) in [(1, 0), (1, 1), (2, 3), (-1, 1)] {
        out.push(IdentityCase::new(
            "algebra.difference_of_squares",
            format!("arg=({mu},{two_nu})"),
            move |_| {
                let m = LaurentMonomial::symbol("u").mul(&LaurentMonomial::x_t(mu, two_nu));
                let lhs = FactoredLFunction::euler(m.pow(2), 1).mul(&FactoredLFunction::euler(m.clone(), -2));
                let rhs = FactoredLFunction::euler(m.neg(), 1).mul(&FactoredLFunction::euler(m, -1));
                Check::Factored(lhs, rhs)
            },
        ));
    }
    let trunc = config.trunc;
    for k in 1..=config.max_k.min(3) {
        out.push(IdentityCase::new(
            "algebra.series_multiplicative",
            format!("k={k} D={trunc}"),
            move |_| {
                let (x, y) = (SatakeSet::symbolic("x", k), SatakeSet::symbolic("y", k));
                let f = l_rankin_selberg(&x, &y, ArgForm::new(1, 1));
                let g = l_sym2(&x, ArgForm::new(2, 0)).inv();
                let whole = series_expand(&f.mul(&g), &VarId::X, trunc);
                let split = series_expand(&f, &VarId::X, trunc)
                    .and_then(|a| series_expand(&g, &VarId::X, trunc).map(|b| a.mul(&b)));
                whole.and_then(|w| split.map(|s| (w, s))).into()
            },
        ));
    }
    for n in 1..=config.max_n {
        let numeric = config.numeric;
        out.push(IdentityCase::new(
            "algebra.text_roundtrip",
            format!("n={n} {}", mode(numeric)),
            move |s| {
                let (tau, tau_prime) = tau_pair(s, 2, numeric);
                let pi = param_set(s, "p", n, numeric);
                match z_gl_closed(n, 2, &pi, &tau, &tau_prime) {
                    Ok(z) => match z.value.to_string().parse::<FactoredLFunction>() {
                        Ok(back) => Check::Factored(back, z.value),
                        Err(e) => Check::Error(e.to_string()),
                    },
                    Err(e) => Check::Error(e.to_string()),
                }
            },
        ));
    }
}

fn satake_cases(config: &SuiteConfig, out: &mut Vec<IdentityCase>) {
    let numeric = config.numeric;
    for k in 1..=config.max_k.max(6) {
        out.push(IdentityCase::new(
            "satake.sym2_wedge2",
            format!("k={k} {}", mode(numeric)),
            move |s| {
                let tau = param_set(s, "x", k, numeric);
                let arg = ArgForm::new(1, 0);
                Check::Factored(
                    l_sym2(&tau, arg).mul(&l_wedge2(&tau, arg)),
                    l_rankin_selberg(&tau, &tau, arg),
                )
            },
        ));
    }
    for kind in [GroupKind::Sp, GroupKind::So] {
        for n in 1..=config.max_n {
            for k in 1..=config.max_k {
                out.push(IdentityCase::new(
                    "satake.siegel_factorization",
                    format!("{kind} n={n} k={k} {}", mode(numeric)),
                    move |s| {
                        let group = GroupData::new(kind, n).expect("n ≥ 1");
                        let pi = param_set(s, "b", n, numeric);
                        let tau = param_set(s, "x", k, numeric);
                        siegel_factorization_sides(group, &pi, &tau, ArgForm::half(1)).into()
                    },
                ));
            }
        }
    }
}

fn symmfunc_cases(config: &SuiteConfig, out: &mut Vec<IdentityCase>) {
    let numeric = config.numeric;
    let trunc = config.trunc;
    for k in 1..=config.max_k.min(3) {
        for (mu, two_nu) in [(1, 0), (1, 1), (2, 1)] {
            out.push(IdentityCase::new(
                "symmfunc.rs_series",
                format!("k={k} scale=X^{mu}T^{two_nu} D={trunc} {}", mode(numeric)),
                move |s| {
                    let params = param_set(s, "x", k, numeric);
                    let p = VarId::param("p");
                    let scale = LaurentMonomial::var(p.clone()).mul(&LaurentMonomial::x_t(mu, two_nu));
                    rs_series_sides(&params, &scale, &p, trunc).into()
                },
            ));
        }
        let d = trunc.min(8);
        out.push(IdentityCase::new(
            "symmfunc.truncated_cauchy",
            format!("k={k} D={d} {}", mode(numeric)),
            move |s| {
                let x = param_set(s, "x", k, numeric);
                let y = param_set(s, "y", k, numeric);
                cauchy_sides(&x, &y, d).into()
            },
        ));
        out.push(IdentityCase::new("symmfunc.whittaker_central_shift", format!("k={k}"), move |_| {
            let tau = SatakeSet::symbolic("x", k);
            let lambda: Vec<i64> = (0..k as i64).map(|i| 2 * (k as i64 - i) - 3).collect();
            let shifted: Vec<i64> = lambda.iter().map(|l| l + 1).collect();
            match (shintani_whittaker(&tau, &lambda), shintani_whittaker(&tau, &shifted)) {
                (Ok(a), Ok(b)) => {
                    let ok = a.mul_monomial(&tau.determinant()) == b;
                    Check::Holds { ok, detail: format!("W(λ+1)≠det·W(λ) for λ={lambda:?}") }
                }
                (Err(e), _) | (_, Err(e)) => Check::Error(e.to_string()),
            }
        }));
    }
}

fn orbit_cases(_config: &SuiteConfig, out: &mut Vec<IdentityCase>) {
    for kc in 1..=10usize {
        for k in 1..=kc {
            if kc % k != 0 {
                continue;
            }
            let c = kc / k;
            out.push(IdentityCase::new("orbits.dim_bound_vanishes", format!("k={k} c={c}"), move |_| {
                let bad: Vec<Composition> = compositions(kc)
                    .into_iter()
                    .filter(|l| l.parts().iter().any(|&p| p > k))
                    .filter(|l| semi_whittaker_dim_bound(k, c, l) != Ok(0))
                    .collect();
                Check::Holds {
                    ok: bad.is_empty(),
                    detail: format!("nonzero bound at {:?}", bad.first().map(|l| l.parts().to_vec())),
                }
            }));
        }
    }
    for k in 1..=5 {
        for c in 1..=4 {
            out.push(IdentityCase::new("orbits.dim_bound_rectangle", format!("k={k} c={c}"), move |_| {
                let lambda = Composition::from(Partition::rectangle(k, c));
                let got = semi_whittaker_dim_bound(k, c, &lambda);
                Check::Holds { ok: got == Ok(1), detail: format!("got {got:?}") }
            }));
        }
    }
    for kind in [GroupKind::Sp, GroupKind::So] {
        for k in 1..=4 {
            for n in 1..=3 {
                let c = 2 * n;
                out.push(IdentityCase::new(
                    "orbits.doubling_orbit_valid",
                    format!("{kind} k={k} c={c}"),
                    move |_| {
                        let group = GroupData::new(kind, n).expect("n ≥ 1");
                        match doubling_orbit(group, k, c) {
                            Ok(p) => Check::Holds {
                                ok: valid_nilpotent_orbit(GroupData::new(kind, k * c).expect("kc ≥ 1"), &p),
                                detail: format!("{p} is not a valid orbit"),
                            },
                            Err(e) => Check::Error(e.to_string()),
                        }
                    },
                ));
            }
        }
    }
}

fn doubling_cases(config: &SuiteConfig, out: &mut Vec<IdentityCase>) {
    let numeric = config.numeric;
    let (max_n, max_k, trunc) = (config.max_n, config.max_k, config.trunc);
    for kind in [GroupKind::Sp, GroupKind::So] {
        for n in 1..=max_n {
            for k in 1..=max_k {
                let tag = format!("{kind} n={n} k={k} {}", mode(numeric));
                out.push(IdentityCase::new("doubling.gk_telescoping", tag.clone(), move |s| {
                    let group = GroupData::new(kind, n).expect("n ≥ 1");
                    let tau = param_set(s, "x", k, numeric);
                    match (d_tau_gk(group, k, &tau), d_tau_closed(group, k, &tau)) {
                        (Ok(a), Ok(b)) => Check::Factored(a, b),
                        (Err(e), _) | (_, Err(e)) => Check::Error(e.to_string()),
                    }
                }));
                out.push(IdentityCase::new("doubling.classical_reduction", tag, move |s| {
                    let group = GroupData::new(kind, n).expect("n ≥ 1");
                    let pi = param_set(s, "b", n, numeric);
                    let tau = param_set(s, "x", k, numeric);
                    classical_reduction_sides(group, k, &pi, &tau, group.alpha(k)).into()
                }));
            }
        }
    }
    for n in 1..=max_n {
        for k in 1..=max_k {
            out.push(IdentityCase::new(
                "doubling.standard_telescoping",
                format!("n={n} k={k} {}", mode(numeric)),
                move |s| {
                    let tau = param_set(s, "x", k, numeric);
                    let alpha = GroupData::sp(n).alpha(k);
                    Check::Factored(gk_standard_part(n, alpha, &tau), standard_quotient(n, alpha, &tau))
                },
            ));
            for a in 1..n {
                let b = n - a;
                out.push(IdentityCase::new(
                    "doubling.gl_reduction",
                    format!("n={n} a={a} b={b} k={k} {}", mode(numeric)),
                    move |s| {
                        let (tau, tau_prime) = tau_pair(s, k, numeric);
                        let pa = param_set(s, "a", a, numeric);
                        let pb = param_set(s, "b", b, numeric);
                        gl_reduction_sides(n, a, b, k, &pa, &pb, &tau, &tau_prime, (k * n) as i32).into()
                    },
                ));
            }
        }
    }
    for n in 3..=max_n.max(4) {
        for (a, b, c) in triples(n) {
            for k in 1..=max_k.min(2) {
                out.push(IdentityCase::new(
                    "doubling.gl_associativity",
                    format!("n={n} split=({a},{b},{c}) k={k} {}", mode(numeric)),
                    move |s| {
                        let (tau, tau_prime) = tau_pair(s, k, numeric);
                        let (pa, pb, pc) = (
                            param_set(s, "a", a, numeric),
                            param_set(s, "b", b, numeric),
                            param_set(s, "c", c, numeric),
                        );
                        let sides = gl_associativity_sides([&pa, &pb, &pc], k, &tau, &tau_prime);
                        let whole = z_gl_closed(n, k, &pa.union(&pb).union(&pc), &tau, &tau_prime);
                        match (sides, whole) {
                            (Ok((r, l)), Ok(z)) => {
                                let ok = r.rf_equal(&l) && r.rf_equal(&z.value);
                                Check::Holds { ok, detail: "association orders disagree".into() }
                            }
                            (Err(e), _) | (_, Err(e)) => Check::Error(e.to_string()),
                        }
                    },
                ));
            }
        }
    }
    for k in 1..=max_k.max(4) {
        out.push(IdentityCase::new(
            "doubling.prop_gl1",
            format!("k={k} {}", mode(numeric)),
            move |s| {
                let (tau, tau_prime) = tau_pair(s, k, numeric);
                let p = LaurentMonomial::symbol("p");
                prop_gl1_sides(k, &p, &tau, &tau_prime).into()
            },
        ));
    }
    for k in 1..=max_k.min(3) {
        // Symbolic series beyond k = 2 are left to random rational parameters.
        let numeric = numeric || k > 2;
        out.push(IdentityCase::new(
            "doubling.psi_series",
            format!("k={k} D={trunc} {}", mode(numeric)),
            move |s| {
                let (tau, tau_prime) = tau_pair(s, k, numeric);
                psi_series_sides(k, &VarId::param("p"), &tau, &tau_prime, trunc, true).into()
            },
        ));
    }
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for a in 1..n {
        for b in 1..n - a {
            v.push((a, b, n - a - b));
        }
    }
    v
}
