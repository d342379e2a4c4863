use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use calogero::coeff::{format_rational, int, ExactRational};
use calogero::coxeter::{coxeter_deformed_harmonic, coxeter_levels, coxeter_spectrum, CoxeterDunkl, RootSystem};
use calogero::harmonics::{
    deformed_harmonic, oscillator_residual, oscillator_state, relative_harmonic, OscillatorState,
};
use calogero::spectra::{self, energy, sphere_eigenvalue};
use calogero::spin::{fermionic_vacuum, irrep_dimension, spin_content};
use calogero::verify::{self, VerifyConfig};
use calogero::{DunklContext, ModelVariant, MultiIndex, MultiPoly};
use serde_json::{json, Value};

use crate::cache::{cache_key, Cache};
use crate::{CliError, EigenArgs, Format, RootsArgs, SpectrumArgs, SpinArgs, VerifyArgs};

pub type Outcome = Result<(String, bool), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n < 2 {
        return Err(usage(format!("--n must be at least 2, got {n}")));
    }
    Ok(())
}

fn r(x: &ExactRational) -> String {
    format_rational(x)
}

fn emit_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut l = String::new();
        for (i, (c, w)) in cells.iter().zip(&width).enumerate() {
            if i + 1 == cells.len() {
                l.push_str(c);
            } else {
                let _ = write!(l, "{c}{}  ", " ".repeat(w - c.chars().count()));
            }
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn energy_label(variant: ModelVariant) -> &'static str {
    match variant {
        ModelVariant::Full | ModelVariant::Relative => "E",
        ModelVariant::Angular => "ε",
        ModelVariant::RelativeAngular => "ε̃",
    }
}

pub fn spectrum(a: &SpectrumArgs, format: Format) -> Outcome {
    check_n(a.n)?;
    if a.g < int(0) {
        return Err(usage("the coupling must be nonnegative"));
    }
    struct Row {
        m: u64,
        energy: ExactRational,
        q: ExactRational,
        states: Vec<Vec<u32>>,
    }
    let mut rows = Vec::new();
    let (title, label);
    if let Some(rs) = &a.root_system {
        if a.variant != ModelVariant::Angular {
            return Err(usage("Coxeter spectra are angular only"));
        }
        for m in 0..=a.max_level {
            let ks = coxeter_levels(rs, m);
            let Some(first) = ks.first() else { continue };
            let lvl = coxeter_spectrum(rs, std::slice::from_ref(&a.g), &a.omega, first)?;
            rows.push(Row { m, energy: lvl.epsilon, q: lvl.q, states: ks });
        }
        title = format!("{} angular spectrum, g = {} (dimensionless)", rs.name(), r(&a.g));
        label = "ε";
    } else {
        let scale = if a.variant.is_angular() { int(1) } else { a.omega.clone() };
        for lvl in spectra::spectrum(a.variant, a.n, &a.g, a.max_level)? {
            rows.push(Row {
                m: lvl.m,
                energy: &lvl.energy * &scale,
                q: lvl.q,
                states: lvl.states.into_iter().map(|k| k.0).collect(),
            });
        }
        title = if a.variant.is_angular() {
            format!("{} spectrum, n = {}, g = {} (dimensionless)", a.variant, a.n, r(&a.g))
        } else {
            format!("{} spectrum, n = {}, g = {}, ω = {}", a.variant, a.n, r(&a.g), r(&a.omega))
        };
        label = energy_label(a.variant);
    }
    let out = match format {
        Format::Json => {
            let mut v = json!({
                "command": "spectrum",
                "variant": a.variant.name(),
                "g": r(&a.g),
                "levels": rows.iter().map(|row| json!({
                    "m": row.m,
                    "energy": r(&row.energy),
                    "q": r(&row.q),
                    "degeneracy": row.states.len(),
                    "states": row.states,
                })).collect::<Vec<_>>(),
            });
            match &a.root_system {
                Some(rs) => v["root_system"] = json!(rs.name()),
                None => v["n"] = json!(a.n),
            }
            if !a.variant.is_angular() {
                v["omega"] = json!(r(&a.omega));
            }
            emit_json(&v)
        }
        Format::Text => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let states: Vec<String> = row.states.iter().map(|k| MultiIndex(k.clone()).to_string()).collect();
                    vec![row.m.to_string(), r(&row.energy), r(&row.q), row.states.len().to_string(), states.join(" ")]
                })
                .collect();
            format!("{title}\n{}", table(&["m", label, "q", "deg", "states"], &body))
        }
    };
    Ok((out, true))
}

/// What an eigenfunction run produces before formatting.
struct Eigen {
    polys: BTreeMap<String, MultiPoly>,
    fields: Vec<(&'static str, Value)>,
}

fn payload(polys: &BTreeMap<String, MultiPoly>) -> Value {
    json!(polys.iter().map(|(k, p)| (k.clone(), p.to_string())).collect::<BTreeMap<_, _>>())
}

fn parse_payload(v: &Value, n: usize) -> Option<BTreeMap<String, MultiPoly>> {
    v.as_object()?
        .iter()
        .map(|(k, p)| Some((k.clone(), MultiPoly::parse(p.as_str()?, n).ok()?)))
        .collect()
}

enum Target {
    Angular(DunklContext),
    Relative(DunklContext),
    Oscillator(DunklContext, ExactRational),
    Coxeter(CoxeterDunkl),
}

impl Target {
    fn nvars(&self) -> usize {
        match self {
            Target::Angular(c) | Target::Relative(c) | Target::Oscillator(c, _) => c.n(),
            Target::Coxeter(d) => d.root_system().dim,
        }
    }

    fn compute(&self, k: &MultiIndex) -> calogero::Result<BTreeMap<String, MultiPoly>> {
        let mut out = BTreeMap::new();
        match self {
            Target::Angular(c) => {
                out.insert("harmonic".into(), deformed_harmonic(c, k)?.poly);
            }
            Target::Relative(c) => {
                out.insert("harmonic".into(), relative_harmonic(c, k)?.harmonic.poly);
            }
            Target::Oscillator(c, omega) => {
                let st = oscillator_state(c, omega, k)?;
                out.insert("excitation".into(), st.excitation);
                out.insert("prefactor".into(), st.prefactor);
            }
            Target::Coxeter(d) => {
                out.insert("harmonic".into(), coxeter_deformed_harmonic(d, &k.0)?);
            }
        }
        Ok(out)
    }

    fn verify(&self, k: &MultiIndex, m: u64, polys: &BTreeMap<String, MultiPoly>) -> calogero::Result<bool> {
        let m = m as u32;
        let degree_ok = |p: &MultiPoly| p.is_zero() || p.homogeneous_degree() == Some(m);
        Ok(match self {
            Target::Angular(c) => {
                let Some(h) = polys.get("harmonic") else { return Ok(false) };
                !h.is_zero() && degree_ok(h) && c.calogero_l_apply(h)?.is_zero()
            }
            Target::Relative(c) => {
                let Some(h) = polys.get("harmonic") else { return Ok(false) };
                let drift = (0..c.n()).fold(MultiPoly::zero(c.n()), |acc, i| &acc + &h.derivative(i));
                !h.is_zero() && degree_ok(h) && drift.is_zero() && c.calogero_l_apply(h)?.is_zero()
            }
            Target::Oscillator(c, omega) => {
                let (Some(p), Some(f)) = (polys.get("excitation"), polys.get("prefactor")) else { return Ok(false) };
                let st = OscillatorState {
                    ctx: c.clone(),
                    omega: omega.clone(),
                    k: k.clone(),
                    excitation: p.clone(),
                    prefactor: f.clone(),
                    energy: &energy(ModelVariant::Full, c.n(), c.g(), k)?.energy * omega,
                };
                let g = calogero::coeff::as_integer(c.g()).ok_or_else(|| calogero::Error::UnsupportedCoupling(r(c.g())))?;
                let vandermonde = MultiPoly::vandermonde(c.n()).pow(g as u32);
                !f.is_zero() && *f == &vandermonde * p && oscillator_residual(&st)?.is_zero()
            }
            Target::Coxeter(d) => {
                let Some(h) = polys.get("harmonic") else { return Ok(false) };
                !h.is_zero() && degree_ok(h) && d.calogero_l_apply(h)?.is_zero()
            }
        })
    }
}

pub fn eigenfunction(a: &EigenArgs, format: Format) -> Outcome {
    let k = &a.k;
    let mut m = k.level();
    let mut fields: Vec<(&'static str, Value)> = Vec::new();
    let (target, system) = match &a.root_system {
        Some(rs) => {
            if a.variant != ModelVariant::Angular {
                return Err(usage("Coxeter eigenfunctions are angular only"));
            }
            if k.n() != rs.degrees.len() {
                return Err(usage(format!("{} needs {} quantum numbers", rs.name(), rs.degrees.len())));
            }
            if k.0[0] != 0 {
                return Err(usage("the first quantum number (r²) must vanish for angular states"));
            }
            let d = CoxeterDunkl::new(rs, std::slice::from_ref(&a.g))?;
            let total = d.total_coupling();
            m = k.0.iter().zip(&rs.degrees).map(|(&x, &deg)| x as u64 * deg as u64).sum();
            let q = &total + int(m as i64);
            fields.push(("q", json!(r(&q))));
            fields.push(("epsilon", json!(r(&sphere_eigenvalue(&q, rs.dim)))));
            (Target::Coxeter(d), rs.name())
        }
        None => {
            check_n(a.n)?;
            if k.n() != a.n {
                return Err(usage(format!("k has {} entries but n = {}", k.n(), a.n)));
            }
            k.validate(a.variant)?;
            let c = DunklContext::new(a.n, a.g.clone())?;
            let e = energy(a.variant, a.n, &a.g, k)?;
            fields.push(("q", json!(r(&e.q))));
            let target = match a.variant {
                ModelVariant::Angular => {
                    fields.push(("epsilon", json!(r(&e.energy))));
                    Target::Angular(c)
                }
                ModelVariant::RelativeAngular => {
                    fields.push(("epsilon", json!(r(&e.energy))));
                    Target::Relative(c)
                }
                ModelVariant::Full | ModelVariant::Relative => {
                    fields.push(("energy", json!(r(&(&e.energy * &a.omega)))));
                    fields.push(("omega", json!(r(&a.omega))));
                    Target::Oscillator(c, a.omega.clone())
                }
            };
            (target, format!("A{}", a.n - 1))
        }
    };

    let omega_part = if matches!(target, Target::Oscillator(..)) { r(&a.omega) } else { String::new() };
    let key = cache_key(&["eigenfunction", &system, &target.nvars().to_string(), &r(&a.g), a.variant.name(), &k.to_string(), &omega_part]);
    let cache = match &a.cache {
        Some(dir) => match Cache::open(dir) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("warning: cache directory {} unusable: {e}", dir.display());
                None
            }
        },
        None => None,
    };

    let mut result: Option<(BTreeMap<String, MultiPoly>, bool)> = None;
    if let Some(stored) = cache.as_ref().and_then(|c| c.load(&key)) {
        match parse_payload(&stored, target.nvars()) {
            Some(polys) if a.trust_cache => result = Some((polys, true)),
            Some(polys) => {
                if target.verify(k, m, &polys).unwrap_or(false) {
                    result = Some((polys, true));
                } else {
                    eprintln!("warning: cached entry failed verification; recomputing");
                }
            }
            None => eprintln!("warning: cached entry unreadable; recomputing"),
        }
    }
    let (polys, verified) = match result {
        Some(r) => r,
        None => {
            let polys = target.compute(k)?;
            let ok = target.verify(k, m, &polys)?;
            if ok {
                if let Some(c) = &cache {
                    c.store(&key, payload(&polys));
                }
            }
            (polys, ok)
        }
    };
    let eig = Eigen { polys, fields };

    let main = eig.polys.get("harmonic").or_else(|| eig.polys.get("prefactor")).expect("primary polynomial");
    let mut out_fields: Vec<(&'static str, Value)> = vec![
        ("command", json!("eigenfunction")),
        ("variant", json!(a.variant.name())),
        ("g", json!(r(&a.g))),
        ("k", json!(k.0)),
        ("m", json!(m)),
        ("polynomial", json!(main.normalize().to_string())),
        ("verified", json!(verified)),
    ];
    match &a.root_system {
        Some(rs) => out_fields.push(("root_system", json!(rs.name()))),
        None => out_fields.push(("n", json!(a.n))),
    }
    if let Some(p) = eig.polys.get("excitation") {
        out_fields.push(("excitation", json!(p.normalize().to_string())));
    }
    if matches!(target, Target::Relative(_)) {
        out_fields.push(("restricted", json!(main.restrict_to_hyperplane()?.normalize().to_string())));
    }
    out_fields.extend(eig.fields);

    let out = match format {
        Format::Json => emit_json(&Value::Object(out_fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect())),
        Format::Text => {
            let mut s = String::new();
            let head = match &a.root_system {
                Some(rs) => format!("{} h_{k}, g = {}", rs.name(), r(&a.g)),
                None => format!("{} state k = {k}, n = {}, g = {}", a.variant, a.n, r(&a.g)),
            };
            let _ = writeln!(s, "{head}");
            for (name, v) in &out_fields {
                if matches!(*name, "command" | "variant" | "g" | "k" | "n" | "root_system") {
                    continue;
                }
                let shown = match v {
                    Value::String(t) => t.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(s, "{name}: {shown}");
            }
            s
        }
    };
    Ok((out, verified))
}

pub fn verify(a: &VerifyArgs, format: Format) -> Outcome {
    for &n in &a.n {
        check_n(n)?;
    }
    if a.s == 0 {
        return Err(usage("--s must be at least 1"));
    }
    if a.g.iter().any(|g| *g < int(0)) {
        return Err(usage("couplings must be nonnegative"));
    }
    let mut cfg = VerifyConfig {
        ns: a.n.clone(),
        gs: a.g.clone(),
        max_level: a.m,
        max_flavours: a.s,
        seed: a.seed,
        ..Default::default()
    };
    if !a.checks.is_empty() {
        cfg.checks = a.checks.clone();
    }
    if !a.root_system.is_empty() {
        cfg.root_systems = a.root_system.clone();
    }
    let start = Instant::now();
    let report = verify::run(&cfg);
    let total = start.elapsed();
    let ok = report.all_passed();
    let out = match format {
        Format::Json => {
            let cells: Vec<Value> = report
                .cells
                .iter()
                .map(|c| {
                    let mut v = serde_json::to_value(c).expect("cells serialize");
                    if a.timings {
                        v["elapsed_ms"] = json!(c.elapsed.as_secs_f64() * 1e3);
                    }
                    v
                })
                .collect();
            let mut v = json!({
                "command": "verify",
                "config": {
                    "n": cfg.ns,
                    "g": cfg.gs.iter().map(r).collect::<Vec<_>>(),
                    "m": cfg.max_level,
                    "checks": cfg.checks,
                    "s": cfg.max_flavours,
                    "seed": cfg.seed,
                    "root_systems": cfg.root_systems.iter().map(RootSystem::name).collect::<Vec<_>>(),
                },
                "summary": report.summary().into_iter().map(|(k, p, t)| json!({
                    "check": k, "passed": p, "total": t,
                })).collect::<Vec<_>>(),
                "cells": cells,
                "passed": ok,
            });
            if a.timings {
                v["elapsed_ms"] = json!(total.as_secs_f64() * 1e3);
            }
            emit_json(&v)
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = report
                .cells
                .iter()
                .map(|c| {
                    let mut where_ = Vec::new();
                    if let Some(s) = &c.system {
                        where_.push(s.clone());
                    }
                    if let Some(n) = c.n {
                        where_.push(format!("n={n}"));
                    }
                    if let Some(g) = &c.g {
                        where_.push(format!("g={g}"));
                    }
                    if let Some(m) = c.m {
                        where_.push(format!("m={m}"));
                    }
                    let mut detail = c.detail.clone();
                    if a.timings {
                        let _ = write!(detail, " [{:.1} ms]", c.elapsed.as_secs_f64() * 1e3);
                    }
                    vec![if c.passed { "PASS" } else { "FAIL" }.to_string(), c.check.to_string(), where_.join(" "), detail]
                })
                .collect();
            let mut s = table(&["", "check", "cell", "detail"], &rows);
            s.push('\n');
            for (k, p, t) in report.summary() {
                let _ = writeln!(s, "{k}: {p}/{t} passed");
            }
            if a.timings {
                let _ = writeln!(s, "elapsed: {:.2} s", total.as_secs_f64());
            }
            let failed = report.cells.iter().filter(|c| !c.passed).count();
            let _ = writeln!(s, "{}", if ok { "all checks passed".to_string() } else { format!("{failed} cells failed") });
            s
        }
    };
    Ok((out, ok))
}

fn spin_label(v: ModelVariant) -> &'static str {
    match v {
        ModelVariant::Full => "S",
        ModelVariant::Relative => "S_rel",
        ModelVariant::Angular => "S_Ω",
        ModelVariant::RelativeAngular => "S̃_Ω",
    }
}

pub fn spin(a: &SpinArgs, format: Format) -> Outcome {
    if a.n < 1 || a.s < 1 {
        return Err(usage("--n and --s must be positive"));
    }
    if let Some(m) = a.m {
        if m > a.max_level {
            return Err(usage(format!("--m {m} exceeds --max-level {}", a.max_level)));
        }
    }
    let levels: Vec<u64> = match a.m {
        Some(m) => vec![m],
        None => (0..=a.max_level).collect(),
    };
    let mut rows = Vec::new();
    for &m in &levels {
        rows.push((m, spin_content(a.variant, a.s, a.n, m)?));
    }
    let vacuum = fermionic_vacuum(a.s, a.n);
    let out = match format {
        Format::Json => emit_json(&json!({
            "command": "spin",
            "n": a.n,
            "s": a.s,
            "variant": a.variant.name(),
            "fermionic_vacuum": vacuum.to_string(),
            "levels": rows.iter().map(|(m, c)| json!({
                "m": m,
                "content": c.to_string(),
                "dimension": c.dimension() as i64,
                "irreps": c.terms().map(|(d, mult)| json!({
                    "diagram": d.to_string(),
                    "multiplicity": mult,
                    "dimension": irrep_dimension(a.s, d) as u64,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!("SU({}) {} content, n = {}\n", a.s, a.variant, a.n);
            for (m, c) in &rows {
                let dims: Vec<String> = c.terms().map(|(d, _)| format!("dim {d} = {}", irrep_dimension(a.s, d))).collect();
                let _ = writeln!(s, "{}({m}) = {}    total dim {}", spin_label(a.variant), c, c.dimension());
                if !dims.is_empty() {
                    let _ = writeln!(s, "    {}", dims.join(", "));
                }
            }
            let _ = writeln!(s, "fermionic vacuum: {vacuum}");
            s
        }
    };
    Ok((out, true))
}

pub fn roots(a: &RootsArgs, format: Format) -> Outcome {
    let rs = &a.root_system;
    let summary = rs.summary(&a.g)?;
    let out = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&summary).expect("summary serializes");
            v["command"] = json!("roots");
            v["name"] = json!(rs.name());
            emit_json(&v)
        }
        Format::Text => {
            let mut s = format!("{}: rank {}, {} positive roots\n", rs.name(), summary.rank, summary.roots.len());
            for root in &summary.roots {
                let _ = writeln!(s, "  {root}");
            }
            let mults: Vec<String> = summary.multiplicities.iter().map(|(o, g)| format!("{o} = {g}")).collect();
            let _ = writeln!(s, "multiplicities: {}", mults.join(", "));
            let degs: Vec<String> = summary.degrees.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "invariant degrees: {}", degs.join(", "));
            s
        }
    };
    Ok((out, true))
}
