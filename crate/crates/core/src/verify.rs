//! Sweeps of the exact identities over grids of `(n, g, m)`.
//!
//! Every check is broken into independent cells that run in parallel; the
//! report keeps the order in which the cells were generated.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{format_rational, int, rat, ExactRational};
use crate::coxeter::roots::{CoxeterTag, RootSystem};
use crate::coxeter::{coxeter_degeneracy, coxeter_levels, coxeter_spectrum, CoxeterDunkl, CoxeterHarmonicBuilder};
use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::harmonics::{
    lax_state, newton_two_on_seed, oscillator_residual, oscillator_state, relative_basis, HarmonicBuilder,
};
use crate::intertwine::{harmonic_transport, intertwining_residual, kernel_probe, IntertwinerContext};
use crate::poly::symmetric_monomial_basis;
use crate::spectra::{degeneracy, energy, enumerate_levels, isospectral_shift, spectrum, ModelVariant};
use crate::random::{random_diagram, rng};
use crate::spin::{irrep_dimension, pieri_product, spin_content, VirtualCharacter, YoungDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Harmonicity,
    Degeneracy,
    Intertwining,
    Kernel,
    Transport,
    NewtonTwo,
    Relative,
    Oscillator,
    Isospectral,
    SpecialCases,
    Coxeter,
    Spin,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        CheckKind::Harmonicity,
        CheckKind::Degeneracy,
        CheckKind::Intertwining,
        CheckKind::Kernel,
        CheckKind::Transport,
        CheckKind::NewtonTwo,
        CheckKind::Relative,
        CheckKind::Oscillator,
        CheckKind::Isospectral,
        CheckKind::SpecialCases,
        CheckKind::Coxeter,
        CheckKind::Spin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Harmonicity => "harmonicity",
            CheckKind::Degeneracy => "degeneracy",
            CheckKind::Intertwining => "intertwining",
            CheckKind::Kernel => "kernel",
            CheckKind::Transport => "transport",
            CheckKind::NewtonTwo => "newton-two",
            CheckKind::Relative => "relative",
            CheckKind::Oscillator => "oscillator",
            CheckKind::Isospectral => "isospectral",
            CheckKind::SpecialCases => "special-cases",
            CheckKind::Coxeter => "coxeter",
            CheckKind::Spin => "spin",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub ns: Vec<usize>,
    pub gs: Vec<ExactRational>,
    pub max_level: u64,
    pub checks: Vec<CheckKind>,
    /// Largest SU(s) tried by the spin check.
    pub max_flavours: u32,
    /// Dihedral and hyperoctahedral systems for the Coxeter check.
    pub root_systems: Vec<RootSystem>,
    /// Seeds the randomized Pieri products of the spin check.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ns: vec![2, 3, 4],
            gs: vec![int(0), rat(1, 2), int(1), int(2)],
            max_level: 6,
            checks: CheckKind::ALL.to_vec(),
            max_flavours: 4,
            root_systems: default_root_systems(),
            seed: 0,
        }
    }
}

pub fn default_root_systems() -> Vec<RootSystem> {
    let mut out = vec![RootSystem::build(CoxeterTag::B, 2, None).expect("B2")];
    for p in 3..=6 {
        out.push(RootSystem::build(CoxeterTag::I2, 2, Some(p)).expect("dihedral"));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CellResult {
    pub check: CheckKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub cells: Vec<CellResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.cells.iter().all(|c| c.passed)
    }

    /// `(passed, total)` per check, in check order.
    pub fn summary(&self) -> Vec<(CheckKind, usize, usize)> {
        let mut out: Vec<(CheckKind, usize, usize)> = Vec::new();
        for c in &self.cells {
            match out.iter_mut().find(|(k, _, _)| *k == c.check) {
                Some(slot) => {
                    slot.1 += c.passed as usize;
                    slot.2 += 1;
                }
                None => out.push((c.check, c.passed as usize, 1)),
            }
        }
        out
    }
}

struct Cell {
    check: CheckKind,
    system: Option<String>,
    n: Option<usize>,
    g: Option<ExactRational>,
    m: Option<u64>,
}

type Outcome = Result<(bool, String)>;

fn ctx(n: usize, g: &ExactRational) -> Result<DunklContext> {
    DunklContext::new(n, g.clone())
}

fn verdict(ok: bool, detail: String) -> Outcome {
    Ok((ok, detail))
}

fn harmonicity(n: usize, g: &ExactRational, m: u64) -> Outcome {
    let c = ctx(n, g)?;
    let mut b = HarmonicBuilder::new(&c);
    let ks = enumerate_levels(ModelVariant::Angular, n, m);
    for k in &ks {
        let h = b.build(k)?;
        if !c.calogero_l_apply(&h.poly)?.is_zero() {
            return verdict(false, format!("L(g) h_{k} ≠ 0"));
        }
    }
    verdict(true, format!("{} states annihilated", ks.len()))
}

fn degeneracy_cell(n: usize, g: &ExactRational, m: u64) -> Outcome {
    let c = ctx(n, g)?;
    let expected = degeneracy(ModelVariant::Angular, n, m) as usize;
    match HarmonicBuilder::new(&c).basis(m) {
        Ok(b) => verdict(true, format!("rank {} = p_{n}({m}) - p_{n}({}) = {expected}", b.rank, m as i64 - 2)),
        Err(Error::RankMismatch { found, .. }) => verdict(false, format!("rank {found}, expected {expected}")),
        Err(e) => Err(e),
    }
}

fn intertwining(n: usize, g: &ExactRational, m: u64) -> Outcome {
    let k = IntertwinerContext::new(ctx(n, g)?);
    let basis = symmetric_monomial_basis(n, m as u16);
    for f in &basis {
        if !intertwining_residual(&k, f)?.is_zero() {
            return verdict(false, format!("residual nonzero on {f}"));
        }
    }
    verdict(true, format!("residual ≡ 0 on {} basis inputs", basis.len()))
}

fn kernel(n: usize, g: &ExactRational, m: u64) -> Outcome {
    match kernel_probe(&IntertwinerContext::new(ctx(n, g)?), m) {
        Ok(r) => verdict(true, format!("image rank {} of {}", r.image_rank, r.input_dim)),
        Err(Error::RankMismatch { expected, found }) => verdict(false, format!("image rank {found} of {expected}")),
        Err(e) => Err(e),
    }
}

fn transport(n: usize, g: &ExactRational, m: u64) -> Outcome {
    match harmonic_transport(&IntertwinerContext::new(ctx(n, g)?), m) {
        Ok(r) => verdict(true, format!("{} harmonics transported, rank {}", r.transported, r.image_rank)),
        Err(e @ (Error::RankMismatch { .. } | Error::HarmonicityLost(_))) => verdict(false, e.to_string()),
        Err(e) => Err(e),
    }
}

fn newton_two(n: usize, g: &ExactRational) -> Outcome {
    let ok = newton_two_on_seed(&ctx(n, g)?)?.is_zero();
    verdict(ok, if ok { "Σ𝒟² on the seed vanishes".into() } else { "Σ𝒟² on the seed is nonzero".into() })
}

fn relative(n: usize, g: &ExactRational, m: u64) -> Outcome {
    let c = ctx(n, g)?;
    let (states, rank) = match relative_basis(&c, m) {
        Ok(r) => r,
        Err(Error::RankMismatch { expected, found }) => return verdict(false, format!("rank {found}, expected {expected}")),
        Err(e) => return Err(e),
    };
    for s in &states {
        let p = &s.harmonic.poly;
        let drift = (0..n).fold(crate::poly::MultiPoly::zero(n), |acc, i| &acc + &p.derivative(i));
        if !drift.is_zero() || !c.calogero_l_apply(p)?.is_zero() {
            return verdict(false, format!("relative state {} is not a translation-invariant harmonic", s.harmonic.k));
        }
    }
    verdict(true, format!("rank {rank}"))
}

fn oscillator(n: usize, g: &ExactRational, m: u64) -> Outcome {
    let c = ctx(n, g)?;
    let omega = int(1);
    let ks = enumerate_levels(ModelVariant::Full, n, m);
    for k in &ks {
        let st = oscillator_state(&c, &omega, k)?;
        if !oscillator_residual(&st)?.is_zero() {
            return verdict(false, format!("H Ψ ≠ E Ψ for k = {k}"));
        }
        if n <= 3 && lax_state(&c, &omega, k)? != st.prefactor {
            return verdict(false, format!("Lax and exchange routes differ for k = {k}"));
        }
    }
    verdict(true, format!("{} eigenstates", ks.len()))
}

fn isospectral(n: usize, g: &ExactRational, max_level: u64) -> Outcome {
    let shift = isospectral_shift(n);
    let upper: Vec<ExactRational> =
        spectrum(ModelVariant::Angular, n, &(g + int(1)), max_level)?.into_iter().map(|l| l.energy).collect();
    let lower: Vec<ExactRational> = spectrum(ModelVariant::Angular, n, g, max_level + shift)?
        .into_iter()
        .filter(|l| l.m >= shift)
        .map(|l| l.energy)
        .collect();
    verdict(upper == lower, format!("{} levels, shift {shift}", upper.len()))
}

fn special_cases(g: &ExactRational, max_level: u64) -> Outcome {
    let mut count = 0;
    for m in 0..=max_level {
        for k in enumerate_levels(ModelVariant::Angular, 2, m) {
            let q = g + int(k.get(1) as i64);
            if energy(ModelVariant::Angular, 2, g, &k)?.energy != rat(1, 2) * &q * &q {
                return verdict(false, format!("n = 2, k = {k}"));
            }
            count += 1;
        }
        for k in enumerate_levels(ModelVariant::RelativeAngular, 3, m) {
            let q = g + int(k.get(3) as i64);
            if energy(ModelVariant::RelativeAngular, 3, g, &k)?.energy != rat(9, 2) * &q * &q {
                return verdict(false, format!("n = 3, k = {k}"));
            }
            count += 1;
        }
    }
    verdict(true, format!("{count} levels"))
}

fn coxeter_cell(rs: &RootSystem, g: &ExactRational, m: u64) -> Outcome {
    let d = CoxeterDunkl::new(rs, std::slice::from_ref(g))?;
    let mut b = CoxeterHarmonicBuilder::new(&d);
    let (hs, rank) = match b.basis(m) {
        Ok(r) => r,
        Err(Error::RankMismatch { expected, found }) => return verdict(false, format!("rank {found}, expected {expected}")),
        Err(e) => return Err(e),
    };
    for h in &hs {
        if !d.calogero_l_apply(h)?.is_zero() || d.laplacian_via_dunkl(h)? != d.calogero_l_apply(h)? {
            return verdict(false, "harmonic not annihilated".into());
        }
    }
    verdict(true, format!("rank {rank} = {}", coxeter_degeneracy(rs, m)))
}

/// `I₂(3)` angular levels against the `A₂` relative-angular ones.
fn dihedral_three_vs_a2(g: &ExactRational, max_level: u64) -> Outcome {
    let i3 = RootSystem::build(CoxeterTag::I2, 2, Some(3))?;
    for m in 0..=max_level {
        let ks = coxeter_levels(&i3, m);
        let a2 = enumerate_levels(ModelVariant::RelativeAngular, 3, m);
        if ks.len() != a2.len() {
            return verdict(false, format!("level {m}: {} vs {} states", ks.len(), a2.len()));
        }
        for (k, ka) in ks.iter().zip(&a2) {
            let e = coxeter_spectrum(&i3, std::slice::from_ref(g), &int(1), k)?.epsilon;
            if e != energy(ModelVariant::RelativeAngular, 3, g, ka)?.energy {
                return verdict(false, format!("level {m}: energies differ"));
            }
        }
    }
    verdict(true, format!("levels 0..={max_level} agree"))
}

/// Type `A_{n−1}` through the Coxeter machinery against the dedicated operators.
fn type_a_paths(n: usize, g: &ExactRational, max_level: u64) -> Outcome {
    let c = ctx(n, g)?;
    let rs = RootSystem::build(CoxeterTag::A, n - 1, None)?;
    let d = CoxeterDunkl::new(&rs, std::slice::from_ref(g))?;
    let mut cb = CoxeterHarmonicBuilder::new(&d);
    let mut hb = HarmonicBuilder::new(&c);
    let mut count = 0;
    for m in 0..=max_level {
        for k in enumerate_levels(ModelVariant::Angular, n, m) {
            // Coxeter order: r², p_1, p_3, …, p_n.
            let mut kc = vec![0, k.get(1)];
            kc.extend((3..=n).map(|i| k.get(i)));
            if cb.build(&kc)? != hb.build(&k)?.poly {
                return verdict(false, format!("h_{k} differs"));
            }
            count += 1;
        }
    }
    verdict(true, format!("{count} harmonics identical"))
}

fn spin_cell(n: usize, s: u32, m: u64, seed: u64) -> Outcome {
    for v in [ModelVariant::Angular, ModelVariant::RelativeAngular] {
        match spin_content(v, s, n, m) {
            Ok(c) if s == 1 && c.dimension() != degeneracy(v, n, m) as i128 => {
                return verdict(false, format!("{v}: SU(1) dimension {} ≠ degeneracy", c.dimension()))
            }
            Ok(_) => {}
            Err(e @ Error::NegativeMultiplicity { .. }) => return verdict(false, format!("{v}: {e}")),
            Err(e) => return Err(e),
        }
    }
    let mut r = rng(seed ^ ((n as u64) << 32 | (s as u64) << 16 | m));
    for _ in 0..4 {
        let d = random_diagram(&mut r, s as usize, 4);
        let l = r.gen_range(0..=4);
        let prod = pieri_product(&VirtualCharacter::irrep(s, &d), l);
        let expected = irrep_dimension(s, &d) * irrep_dimension(s, &YoungDiagram::row(l));
        if prod.dimension() != expected as i128 {
            return verdict(false, format!("dim({d} × [{l}]) = {} ≠ {expected}", prod.dimension()));
        }
    }
    verdict(true, format!("SU({s}) content nonnegative"))
}

fn cells(cfg: &VerifyConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    let levels = 0..=cfg.max_level;
    let cell = |check, n, g: &ExactRational, m| Cell { check, system: None, n: Some(n), g: Some(g.clone()), m };
    for &check in &cfg.checks {
        match check {
            CheckKind::Harmonicity
            | CheckKind::Degeneracy
            | CheckKind::Intertwining
            | CheckKind::Kernel
            | CheckKind::Transport
            | CheckKind::Relative
            | CheckKind::Oscillator => {
                for &n in &cfg.ns {
                    for g in &cfg.gs {
                        if check == CheckKind::Oscillator && !g.is_integer() {
                            continue;
                        }
                        for m in levels.clone() {
                            out.push(cell(check, n, g, Some(m)));
                        }
                    }
                }
            }
            CheckKind::NewtonTwo | CheckKind::Isospectral => {
                for &n in &cfg.ns {
                    for g in &cfg.gs {
                        out.push(cell(check, n, g, None));
                    }
                }
            }
            CheckKind::SpecialCases => {
                for g in &cfg.gs {
                    out.push(Cell { check, system: None, n: None, g: Some(g.clone()), m: None });
                }
            }
            CheckKind::Coxeter => {
                for rs in &cfg.root_systems {
                    for g in &cfg.gs {
                        for m in levels.clone() {
                            out.push(Cell { check, system: Some(rs.name()), n: Some(rs.dim), g: Some(g.clone()), m: Some(m) });
                        }
                    }
                }
                for g in &cfg.gs {
                    out.push(Cell { check, system: Some("I2(3)~A2".into()), n: None, g: Some(g.clone()), m: None });
                }
                for &n in &cfg.ns {
                    for g in &cfg.gs {
                        out.push(Cell { check, system: Some(format!("A{}", n - 1)), n: Some(n), g: Some(g.clone()), m: None });
                    }
                }
            }
            CheckKind::Spin => {
                for &n in &cfg.ns {
                    for s in 1..=cfg.max_flavours {
                        for m in levels.clone() {
                            out.push(Cell { check, system: Some(format!("SU({s})")), n: Some(n), g: None, m: Some(m) });
                        }
                    }
                }
            }
        }
    }
    out
}

fn run_cell(cfg: &VerifyConfig, c: &Cell) -> Outcome {
    let n = c.n.unwrap_or(0);
    let g = c.g.clone().unwrap_or_else(|| int(0));
    let m = c.m.unwrap_or(cfg.max_level);
    match c.check {
        CheckKind::Harmonicity => harmonicity(n, &g, m),
        CheckKind::Degeneracy => degeneracy_cell(n, &g, m),
        CheckKind::Intertwining => intertwining(n, &g, m),
        CheckKind::Kernel => kernel(n, &g, m),
        CheckKind::Transport => transport(n, &g, m),
        CheckKind::NewtonTwo => newton_two(n, &g),
        CheckKind::Relative => relative(n, &g, m),
        CheckKind::Oscillator => oscillator(n, &g, m),
        CheckKind::Isospectral => isospectral(n, &g, cfg.max_level),
        CheckKind::SpecialCases => special_cases(&g, cfg.max_level),
        CheckKind::Coxeter => {
            let sys = c.system.as_deref().unwrap_or_default();
            if sys == "I2(3)~A2" {
                dihedral_three_vs_a2(&g, cfg.max_level)
            } else if c.m.is_none() {
                type_a_paths(n, &g, cfg.max_level)
            } else {
                let rs = cfg.root_systems.iter().find(|r| r.name() == sys).expect("cell built from config");
                coxeter_cell(rs, &g, m)
            }
        }
        CheckKind::Spin => {
            let s = c.system.as_deref().and_then(|t| t.strip_prefix("SU(")?.strip_suffix(')')?.parse().ok()).unwrap_or(1);
            spin_cell(n, s, m, cfg.seed)
        }
    }
}

pub fn run(cfg: &VerifyConfig) -> VerifyReport {
    let cells = cells(cfg)
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let (passed, detail) = match run_cell(cfg, &c) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CellResult {
                check: c.check,
                system: c.system,
                n: c.n,
                g: c.g.as_ref().map(format_rational),
                m: c.m,
                passed,
                detail,
                elapsed: start.elapsed(),
            }
        })
        .collect();
    VerifyReport { cells }
}
