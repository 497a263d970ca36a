use std::fmt::Write as _;

use lcalc_core::doubling::{
    d_tau_closed, d_tau_gk, verify_classical_reduction, verify_gl_reduction, verify_prop_gl1,
    z_classical_closed, z_gl_closed, ZetaClosedForm,
};
use lcalc_core::exactalg::RationalSampler;
use lcalc_core::kcorbits::{
    dominance_compare, doubling_orbit, semi_whittaker_dim_bound, valid_nilpotent_orbit, Composition,
    Partition,
};
use lcalc_core::satake::{l_rankin_selberg, l_standard, l_sym2, l_wedge2};
use lcalc_core::suite::{numeric_partner, param_set, run_suite, Suite, SuiteConfig, SuiteReport};
use lcalc_core::{to_latex, ArgForm, FactoredLFunction, GroupData, GroupKind, SatakeSet};
use serde_json::json;

use crate::{
    DtauArgs, Format, Globals, Group, Kind, LfactorArgs, OrbitCommand, VerifyArgs, ZetaArgs,
    ZetaCheck,
};

pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

type CmdResult = Result<Output, String>;

fn group_kind(g: Group) -> GroupKind {
    match g {
        Group::Sp => GroupKind::Sp,
        Group::So => GroupKind::So,
        Group::Gl => GroupKind::Gl,
    }
}

fn group_data(g: Group, n: usize) -> Result<GroupData, String> {
    GroupData::new(group_kind(g), n).map_err(|e| format!("--n {n}: {e}"))
}

fn parse_set(flag: &str, s: &str) -> Result<SatakeSet, String> {
    SatakeSet::parse_list(s).map_err(|e| format!("--{flag}: {e}"))
}

fn parse_sized(flag: &str, s: &str, len: usize) -> Result<SatakeSet, String> {
    let set = parse_set(flag, s)?;
    set.expect_len(len).map_err(|e| format!("--{flag}: {e}"))?;
    Ok(set)
}

fn parse_arg(s: &str) -> Result<ArgForm, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [mu, two_nu] = parts[..] else {
        return Err(format!("--arg {s:?}: expected MU,TWO_NU"));
    };
    let int = |t: &str, what: &str| {
        t.parse::<i32>()
            .map_err(|_| format!("--arg {s:?}: {what} {t:?} is not an integer"))
    };
    Ok(ArgForm::new(int(mu, "MU")?, int(two_nu, "TWO_NU")?))
}

fn parse_parts(flag: &str, s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{flag}: entry {} ({t:?}) is not a non-negative integer", i + 1))
        })
        .collect()
}

fn parse_partition(flag: &str, s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| format!("{flag}: {e}"))
}

fn render(g: &Globals, f: &FactoredLFunction) -> String {
    match g.format {
        Format::Latex => to_latex(f),
        _ => f.to_string(),
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn lfactor(g: &Globals, a: &LfactorArgs) -> CmdResult {
    let tau = parse_set("tau", &a.tau)?;
    let arg = parse_arg(&a.arg)?;
    let value = match a.kind {
        Kind::Rs => {
            let tp = a
                .tauprime
                .as_deref()
                .ok_or("--kind rs needs --tauprime")?;
            l_rankin_selberg(&tau, &parse_set("tauprime", tp)?, arg)
        }
        other => {
            if a.tauprime.is_some() {
                return Err("--tauprime is only used with --kind rs".into());
            }
            match other {
                Kind::Std => l_standard(&tau, arg),
                Kind::Sym2 => l_sym2(&tau, arg),
                _ => l_wedge2(&tau, arg),
            }
        }
    };
    Ok(Output::ok(match g.format {
        Format::Json => json_line(json!({
            "kind": format!("{:?}", a.kind).to_lowercase(),
            "arg": arg,
            "value": value.to_string(),
            "latex": to_latex(&value),
        })),
        _ => format!("{}\n", render(g, &value)),
    }))
}

struct ZetaParams {
    pi: SatakeSet,
    tau: SatakeSet,
    tau_prime: Option<SatakeSet>,
}

fn zeta_params(g: &Globals, a: &ZetaArgs, group: GroupData) -> Result<ZetaParams, String> {
    let (n, k) = (a.n, a.k);
    if k == 0 {
        return Err("--k must be at least 1".into());
    }
    let mut s = RationalSampler::new(g.seed);
    let pi_prefix = if group.is_classical() { "b" } else { "p" };
    let pi = match &a.pi {
        Some(p) => parse_sized("pi", p, n)?,
        None => param_set(&mut s, pi_prefix, n, g.numeric),
    };
    let tau = match &a.tau {
        Some(t) => parse_sized("tau", t, k)?,
        None => param_set(&mut s, "x", k, g.numeric),
    };
    let tau_prime = if group.is_classical() {
        if a.tauprime.is_some() {
            return Err("--tauprime is fixed to the dual of --tau for Sp and SO".into());
        }
        None
    } else {
        Some(match &a.tauprime {
            Some(t) => parse_sized("tauprime", t, k)?,
            None if tau.is_numeric() => numeric_partner(&mut s, &tau),
            None => SatakeSet::symbolic("y", k),
        })
    };
    Ok(ZetaParams { pi, tau, tau_prime })
}

fn gl_reduction_all(n: usize, k: usize, p: &ZetaParams) -> Result<bool, String> {
    let tp = p.tau_prime.as_ref().expect("GL has τ'");
    if n == 1 {
        return verify_prop_gl1(k, &p.pi.entries()[0], &p.tau, tp).map_err(|e| e.to_string());
    }
    let entries = p.pi.entries();
    for a in 1..n {
        let pa = SatakeSet::new(entries[..a].to_vec()).map_err(|e| e.to_string())?;
        let pb = SatakeSet::new(entries[a..].to_vec()).map_err(|e| e.to_string())?;
        if !verify_gl_reduction(n, a, n - a, k, &pa, &pb, &p.tau, tp).map_err(|e| e.to_string())? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn zeta(g: &Globals, a: &ZetaArgs) -> CmdResult {
    let group = group_data(a.group, a.n)?;
    let p = zeta_params(g, a, group)?;
    let z: ZetaClosedForm = match &p.tau_prime {
        Some(tp) => z_gl_closed(a.n, a.k, &p.pi, &p.tau, tp),
        None => z_classical_closed(group, a.k, &p.pi, &p.tau),
    }
    .map_err(|e| e.to_string())?;
    let check = match a.check {
        None => None,
        Some(ZetaCheck::Reduction) => Some(match &p.tau_prime {
            Some(_) => gl_reduction_all(a.n, a.k, &p)?,
            None => verify_classical_reduction(group, a.k, &p.pi, &p.tau).map_err(|e| e.to_string())?,
        }),
    };
    let text = match g.format {
        Format::Json => {
            let mut v = json!({
                "group": group.to_string(),
                "n": a.n,
                "k": a.k,
                "multiplier": z.multiplier,
                "pi": p.pi.to_string(),
                "tau": p.tau.to_string(),
                "value": z.value.to_string(),
                "latex": to_latex(&z.value),
            });
            if let Some(tp) = &p.tau_prime {
                v["tauprime"] = json!(tp.to_string());
            }
            if let Some(ok) = check {
                v["reduction"] = json!(status(ok));
            }
            json_line(v)
        }
        _ => {
            let mut s = format!("{}\n", render(g, &z.value));
            if let Some(ok) = check {
                writeln!(s, "reduction: {}", status(ok)).unwrap();
            }
            s
        }
    };
    Ok(Output {
        text,
        passed: check.unwrap_or(true),
    })
}

pub fn dtau(g: &Globals, a: &DtauArgs) -> CmdResult {
    let group = group_data(a.group, a.n)?;
    if !group.is_classical() {
        return Err("dtau is defined for --group sp and so".into());
    }
    if a.k == 0 {
        return Err("--k must be at least 1".into());
    }
    let tau = match &a.tau {
        Some(t) => parse_sized("tau", t, a.k)?,
        None => param_set(&mut RationalSampler::new(g.seed), "x", a.k, g.numeric),
    };
    let d = d_tau_closed(group, a.k, &tau).map_err(|e| e.to_string())?;
    let check = if a.check {
        Some(d_tau_gk(group, a.k, &tau).map_err(|e| e.to_string())?.rf_equal(&d))
    } else {
        None
    };
    let text = match g.format {
        Format::Json => {
            let mut v = json!({
                "group": group.to_string(),
                "k": a.k,
                "alpha": group.alpha(a.k),
                "tau": tau.to_string(),
                "value": d.to_string(),
                "latex": to_latex(&d),
            });
            if let Some(ok) = check {
                v["telescoping"] = json!(status(ok));
            }
            json_line(v)
        }
        _ => {
            let mut s = format!("{}\n", render(g, &d));
            if let Some(ok) = check {
                writeln!(s, "telescoping: {}", status(ok)).unwrap();
            }
            s
        }
    };
    Ok(Output {
        text,
        passed: check.unwrap_or(true),
    })
}

pub fn orbit(g: &Globals, cmd: &OrbitCommand) -> CmdResult {
    let (value, json) = match cmd {
        OrbitCommand::Dominance { lambda, mu } => {
            let (l, m) = (parse_partition("LAMBDA", lambda)?, parse_partition("MU", mu)?);
            let d = dominance_compare(&l, &m).to_string();
            (d.clone(), json!({"lambda": l.to_string(), "mu": m.to_string(), "dominance": d}))
        }
        OrbitCommand::DimBound { k, c, lambda } => {
            let comp = Composition::new(parse_parts("--lambda", lambda)?);
            let b = semi_whittaker_dim_bound(*k, *c, &comp).map_err(|e| e.to_string())?;
            (b.to_string(), json!({"k": k, "c": c, "lambda": lambda, "bound": b}))
        }
        OrbitCommand::DoublingOrbit { group, k, c } => {
            // Only the group type matters for the parity rule.
            let gd = group_data(*group, (*c).max(1))?;
            let p = doubling_orbit(gd, *k, *c).map_err(|e| e.to_string())?;
            (p.to_string(), json!({"k": k, "c": c, "orbit": p.to_string()}))
        }
        OrbitCommand::Validity { group, partition } => {
            let p = parse_partition("PARTITION", partition)?;
            let ok = valid_nilpotent_orbit(group_data(*group, 1)?, &p);
            let v = if ok { "VALID" } else { "INVALID" };
            (v.to_string(), json!({"partition": p.to_string(), "valid": ok}))
        }
    };
    Ok(Output::ok(match g.format {
        Format::Json => json_line(json),
        _ => format!("{value}\n"),
    }))
}

fn render_report(r: &SuiteReport) -> String {
    let mut s = String::new();
    for c in &r.cases {
        write!(s, "{} {} [{}]", c.status, c.identity, c.params).unwrap();
        if let Some(ms) = c.elapsed_ms {
            write!(s, " {ms}ms").unwrap();
        }
        if let Some(w) = &c.witness {
            write!(s, " -- {w}").unwrap();
        }
        s.push('\n');
    }
    writeln!(
        s,
        "{}: {} cases, {} passed, {} failed (seed {})",
        r.suite, r.totals.cases, r.totals.passed, r.totals.failed, r.seed
    )
    .unwrap();
    s
}

pub fn verify(g: &Globals, a: &VerifyArgs) -> CmdResult {
    let suite: Suite = a.suite.parse()?;
    let mut config = if g.numeric {
        SuiteConfig::numeric(g.seed)
    } else {
        SuiteConfig::new(g.seed)
    };
    config.trunc = a.trunc as usize;
    config.max_n = a.max_n.unwrap_or(config.max_n);
    config.max_k = a.max_k.unwrap_or(config.max_k);
    if config.max_n == 0 || config.max_k == 0 {
        return Err("--max-n and --max-k must be at least 1".into());
    }
    config.sample_points = a.points;
    config.timings = a.timings;
    config.inject_failure = a.inject_failure;
    let report = run_suite(suite, &config);
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n";
    if let Some(path) = &a.report {
        std::fs::write(path, &json).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let text = match g.format {
        Format::Json => json,
        _ => render_report(&report),
    };
    Ok(Output {
        text,
        passed: report.all_passed(),
    })
}
