//! Deformed harmonic polynomials, angular and relative eigenfunctions, and
//! oscillator eigenstates of the type-A model.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::coeff::{format_rational, int, ExactRational, GaussianRational};
use crate::dunkl::{DunklContext, DunklFamily};
use crate::error::{Error, Result};
use crate::linalg::poly_rank;
use crate::poly::MultiPoly;
use crate::radial::RadialPoly;
use crate::spectra::{self, degeneracy, enumerate_levels, ModelVariant, MultiIndex};

/// Caches `σ(𝒟)^k (r²)^seed` by exponent vector so that building all states
/// up to some level costs one operator application per state.
///
/// `operators[i]` is the polynomial `σ_i` evaluated on the Dunkl operators;
/// `degrees[i]` its homogeneous degree.
pub struct HarmonicTower<'a> {
    family: &'a dyn DunklFamily,
    operators: Vec<MultiPoly>,
    degrees: Vec<u64>,
    seed: ExactRational,
    centred: bool,
    cache: HashMap<Vec<u32>, RadialPoly>,
}

impl<'a> HarmonicTower<'a> {
    /// `total_coupling` is `Σ_{α>0} g_α`; the seed is `r^(2 − n − 2Σg)`.
    pub fn new(family: &'a dyn DunklFamily, operators: Vec<MultiPoly>, total_coupling: &ExactRational) -> Self {
        let n = family.dim();
        let degrees = operators.iter().map(|s| s.homogeneous_degree().unwrap_or(0) as u64).collect();
        let seed = int(1) - BigRational::new(BigInt::from(n), BigInt::from(2)) - total_coupling;
        HarmonicTower { family, operators, degrees, seed, centred: false, cache: HashMap::new() }
    }

    /// The same tower on translation-invariant functions: the seed is a power
    /// of `r̃² = Σ(x_i − X)²` in the `n − 1` relative dimensions. Each `𝒟_i`
    /// commutes with translations and `Σ𝒟_j = Σ∂_j`, so on this input the
    /// operators projected onto `Σx_i = 0` coincide with the plain ones.
    pub fn centred(family: &'a dyn DunklFamily, operators: Vec<MultiPoly>, total_coupling: &ExactRational) -> Self {
        let mut t = Self::new(family, operators, total_coupling);
        t.seed += BigRational::new(BigInt::from(1), BigInt::from(2));
        t.centred = true;
        t
    }

    fn seed_state(&self, a: ExactRational) -> RadialPoly {
        let n = self.family.dim();
        if self.centred {
            RadialPoly::centred_r2_power(n, a)
        } else {
            RadialPoly::r2_power(n, a)
        }
    }

    pub fn seed_exponent(&self) -> &ExactRational {
        &self.seed
    }

    pub fn level(&self, k: &[u32]) -> u64 {
        k.iter().zip(&self.degrees).map(|(&a, &d)| a as u64 * d).sum()
    }

    /// `σ_1(𝒟)^k_1 ⋯ σ_r(𝒟)^k_r (r²)^seed`.
    pub fn state(&mut self, k: &[u32]) -> Result<RadialPoly> {
        if k.len() != self.operators.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} quantum numbers, got {}",
                self.operators.len(),
                k.len()
            )));
        }
        if let Some(s) = self.cache.get(k) {
            return Ok(s.clone());
        }
        let out = match k.iter().rposition(|&a| a > 0) {
            None => self.seed_state(self.seed.clone()),
            Some(i) => {
                let mut prev = k.to_vec();
                prev[i] -= 1;
                if self.seed.is_zero() && prev.iter().all(|&a| a == 0) {
                    self.apply_on_log_seed(&self.operators[i])?
                } else {
                    let inner = self.state(&prev)?;
                    self.family.apply_polynomial(&self.operators[i], &inner)?
                }
            }
        };
        self.cache.insert(k.to_vec(), out.clone());
        Ok(out)
    }

    /// With a zero seed exponent every operator kills `r⁰`; the construction
    /// then continues from `log r²` instead, i.e. the limit of `state/seed`.
    /// A zero seed forces two effective dimensions with vanishing couplings,
    /// where the Dunkl operators are plain derivatives and
    /// `∂_j log r² = ∂_j r² / r²`.
    fn apply_on_log_seed(&self, sigma: &MultiPoly) -> Result<RadialPoly> {
        let n = self.family.dim();
        let dim = n - self.centred as usize;
        if dim != 2 {
            return Err(Error::Unsupported(format!("zero radial seed in dimension {dim}")));
        }
        let quadric = self.seed_state(int(1)).quadric();
        let mut acc = RadialPoly::zero(n);
        for (mono, c) in sigma.terms() {
            let Some(j) = mono.0.iter().position(|&e| e > 0) else {
                continue;
            };
            let mut t = self.seed_state(int(-1)).mul_poly(&quadric.derivative(j));
            for (i, &e) in mono.0.iter().enumerate() {
                let e = if i == j { e - 1 } else { e };
                for _ in 0..e {
                    t = self.family.apply(i, &t)?;
                }
            }
            acc = acc.try_add(&t.scale(c))?;
        }
        Ok(acc)
    }

    /// `r^(2(m − seed))·state(k)` expanded into a homogeneous polynomial of degree `m`.
    pub fn harmonic(&mut self, k: &[u32]) -> Result<MultiPoly> {
        let m = self.level(k);
        let s = self.state(k)?;
        let lift = BigRational::from_integer(BigInt::from(m)) - &self.seed;
        s.mul_r2_power(&lift).radial_collect()
    }
}

/// Newton sums `Σ x_i^ℓ`, `ℓ = 1..n`, as operator polynomials.
pub fn newton_operators(n: usize) -> Vec<MultiPoly> {
    (1..=n).map(|l| MultiPoly::power_sum(n, l as u16)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedHarmonic {
    pub ctx: DunklContext,
    pub k: MultiIndex,
    pub m: u64,
    /// `½ g n(n−1) + m`
    pub q: ExactRational,
    pub poly: MultiPoly,
}

impl DeformedHarmonic {
    pub fn normalized(&self) -> MultiPoly {
        self.poly.normalize()
    }
}

fn check_k(ctx: &DunklContext, k: &MultiIndex, variant: ModelVariant) -> Result<()> {
    if k.n() != ctx.n() {
        return Err(Error::InvalidArgument(format!("multi-index {k} has length {} ≠ n = {}", k.n(), ctx.n())));
    }
    k.validate(variant)
}

fn not_polynomial_is_fatal(e: Error) -> Error {
    match e {
        Error::NotPolynomial(s) => panic!("Newton–Dunkl sandwich left a non-polynomial remainder (exponent {s})"),
        other => other,
    }
}

/// Builds `h_k` for every `k` through one shared tower.
pub struct HarmonicBuilder<'a> {
    ctx: &'a DunklContext,
    tower: HarmonicTower<'a>,
}

impl<'a> HarmonicBuilder<'a> {
    pub fn new(ctx: &'a DunklContext) -> Self {
        let tower = HarmonicTower::new(ctx, newton_operators(ctx.n()), &ctx.ground_q());
        HarmonicBuilder { ctx, tower }
    }

    pub fn build(&mut self, k: &MultiIndex) -> Result<DeformedHarmonic> {
        check_k(self.ctx, k, ModelVariant::Angular)?;
        let poly = self.tower.harmonic(&k.0).map_err(not_polynomial_is_fatal)?;
        let m = k.level();
        Ok(DeformedHarmonic {
            ctx: self.ctx.clone(),
            k: k.clone(),
            m,
            q: self.ctx.ground_q() + int(m as i64),
            poly,
        })
    }

    /// All `h_k` at level `m` together with their exact rank.
    pub fn basis(&mut self, m: u64) -> Result<HarmonicBasis> {
        let n = self.ctx.n();
        let harmonics =
            enumerate_levels(ModelVariant::Angular, n, m).iter().map(|k| self.build(k)).collect::<Result<Vec<_>>>()?;
        let polys: Vec<MultiPoly> = harmonics.iter().map(|h| h.poly.clone()).collect();
        let rank = poly_rank(&polys)?;
        let expected = degeneracy(ModelVariant::Angular, n, m) as usize;
        if rank != expected {
            return Err(Error::RankMismatch { expected, found: rank });
        }
        Ok(HarmonicBasis { m, harmonics, rank })
    }
}

/// `h_k = r^(gn(n−1)+n−2+2m) (Σ𝒟_i)^k_1 (Σ𝒟_i³)^k_3 ⋯ (Σ𝒟_i^n)^k_n r^(−gn(n−1)−n+2)`.
pub fn deformed_harmonic(ctx: &DunklContext, k: &MultiIndex) -> Result<DeformedHarmonic> {
    HarmonicBuilder::new(ctx).build(k)
}

#[derive(Clone, Debug)]
pub struct HarmonicBasis {
    pub m: u64,
    pub harmonics: Vec<DeformedHarmonic>,
    pub rank: usize,
}

/// `h_k` for every `k` at level `m`; the rank must be `p_n(m) − p_n(m−2)`.
pub fn harmonic_basis(ctx: &DunklContext, m: u64) -> Result<HarmonicBasis> {
    HarmonicBuilder::new(ctx).basis(m)
}

/// Harmonics at levels `0..=max_level`, one level per worker.
pub fn harmonic_bases(ctx: &DunklContext, max_level: u64) -> Result<Vec<HarmonicBasis>> {
    (0..=max_level).into_par_iter().map(|m| harmonic_basis(ctx, m)).collect()
}

/// Angular eigenfunction `v_k = r^(−m) h_k Δ̂^g`, kept symbolic.
#[derive(Clone, Debug)]
pub struct AngularEigenfunction {
    pub harmonic: DeformedHarmonic,
    pub epsilon: ExactRational,
}

impl AngularEigenfunction {
    /// Text form with the angular Vandermonde factor as a marker.
    pub fn describe(&self) -> String {
        format!("r^-{}·({})·Δ̂^{}", self.harmonic.m, self.harmonic.poly, format_rational(self.harmonic.ctx.g()))
    }
}

pub fn angular_eigenfunction(ctx: &DunklContext, k: &MultiIndex) -> Result<AngularEigenfunction> {
    let harmonic = deformed_harmonic(ctx, k)?;
    let epsilon = spectra::sphere_eigenvalue(&harmonic.q, ctx.n());
    Ok(AngularEigenfunction { harmonic, epsilon })
}

#[derive(Clone, Debug)]
pub struct RelativeHarmonic {
    /// Translation-invariant in all `n` variables; still annihilated by `L(g)`.
    pub harmonic: DeformedHarmonic,
    /// The same polynomial on `Σ x_i = 0`, in the first `n − 1` coordinates.
    pub restricted: MultiPoly,
    pub epsilon: ExactRational,
}

/// `r̃^(gn(n−1)+n−3+2m) (Σ𝒟_i³)^k_3 ⋯ (Σ𝒟_i^n)^k_n r̃^(−gn(n−1)−n+3)` with
/// `r̃² = Σ(x_i − X)²`.
pub fn relative_harmonic(ctx: &DunklContext, k: &MultiIndex) -> Result<RelativeHarmonic> {
    check_k(ctx, k, ModelVariant::RelativeAngular)?;
    let mut tower = HarmonicTower::centred(ctx, newton_operators(ctx.n()), &ctx.ground_q());
    let poly = tower.harmonic(&k.0).map_err(not_polynomial_is_fatal)?;
    let m = k.level();
    let harmonic =
        DeformedHarmonic { ctx: ctx.clone(), k: k.clone(), m, q: ctx.ground_q() + int(m as i64), poly };
    let restricted = harmonic.poly.restrict_to_hyperplane()?;
    let epsilon = spectra::energy(ModelVariant::RelativeAngular, ctx.n(), ctx.g(), k)?.energy;
    Ok(RelativeHarmonic { harmonic, restricted, epsilon })
}

/// All relative harmonics at level `m` with their exact rank.
pub fn relative_basis(ctx: &DunklContext, m: u64) -> Result<(Vec<RelativeHarmonic>, usize)> {
    let n = ctx.n();
    let mut tower = HarmonicTower::centred(ctx, newton_operators(n), &ctx.ground_q());
    let mut out = Vec::new();
    for k in enumerate_levels(ModelVariant::RelativeAngular, n, m) {
        let poly = tower.harmonic(&k.0).map_err(not_polynomial_is_fatal)?;
        let harmonic = DeformedHarmonic { ctx: ctx.clone(), k: k.clone(), m, q: ctx.ground_q() + int(m as i64), poly };
        let restricted = harmonic.poly.restrict_to_hyperplane()?;
        let epsilon = spectra::energy(ModelVariant::RelativeAngular, n, ctx.g(), &k)?.energy;
        out.push(RelativeHarmonic { harmonic, restricted, epsilon });
    }
    let rank = poly_rank(&out.iter().map(|r| r.restricted.clone()).collect::<Vec<_>>())?;
    let expected = degeneracy(ModelVariant::RelativeAngular, n, m) as usize;
    if rank != expected {
        return Err(Error::RankMismatch { expected, found: rank });
    }
    Ok((out, rank))
}

/// `h_k` with one extra factor `Σ𝒟_i²` applied last; vanishes identically.
pub fn k2_insertion(ctx: &DunklContext, k: &MultiIndex) -> Result<RadialPoly> {
    check_k(ctx, k, ModelVariant::Angular)?;
    let mut tower = HarmonicTower::new(ctx, newton_operators(ctx.n()), &ctx.ground_q());
    let inner = tower.state(&k.0)?;
    ctx.newton_dunkl(2, &inner)
}

/// `Σ𝒟_i² r^(−gn(n−1)−n+2)`.
pub fn newton_two_on_seed(ctx: &DunklContext) -> Result<RadialPoly> {
    ctx.newton_dunkl(2, &RadialPoly::r2_power(ctx.n(), ctx.seed_exponent()))
}

fn integer_coupling(ctx: &DunklContext) -> Result<u32> {
    let g = ctx.g();
    if !g.is_integer() || g.is_negative() {
        return Err(Error::UnsupportedCoupling(format_rational(g)));
    }
    g.to_integer().to_u32().ok_or_else(|| Error::UnsupportedCoupling(format_rational(g)))
}

fn positive_omega(omega: &ExactRational) -> Result<()> {
    if omega.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("frequency must be positive, got {}", format_rational(omega))))
    }
}

/// Eigenstate `Ψ_k = Δ^g (B_1†)^k_1 ⋯ (B_n†)^k_n e^(−ωr²/2)` with the
/// Gaussian factored out: `Ψ_k = prefactor · e^(−ωr²/2)`.
#[derive(Clone, Debug)]
pub struct OscillatorState {
    pub ctx: DunklContext,
    pub omega: ExactRational,
    pub k: MultiIndex,
    /// Symmetric polynomial `P` with `Ψ_k = P Ψ_0`.
    pub excitation: MultiPoly,
    /// `Δ^g P`
    pub prefactor: MultiPoly,
    /// `E_k` including the factor `ω`.
    pub energy: ExactRational,
}

/// `â_i† P = −i(𝒟_i − 2ω x_i) P`, the creation operator conjugated through the Gaussian.
pub fn gauged_creation(ctx: &DunklContext, omega: &ExactRational, i: usize, p: &MultiPoly) -> Result<MultiPoly> {
    let mut t = ctx.apply_poly(i, p)?;
    let x = MultiPoly::var(ctx.n(), i);
    t.sub_assign_ref(&(&x * p).scale_rational(&(omega * int(2))));
    Ok(t.scale(&-GaussianRational::i()))
}

/// `B_ℓ† P = Σ_i (â_i†)^ℓ P`
pub fn gauged_newton(ctx: &DunklContext, omega: &ExactRational, l: u32, p: &MultiPoly) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(ctx.n());
    for i in 0..ctx.n() {
        let mut t = p.clone();
        for _ in 0..l {
            t = gauged_creation(ctx, omega, i, &t)?;
        }
        acc.add_assign_ref(&t);
    }
    Ok(acc)
}

pub fn oscillator_state(ctx: &DunklContext, omega: &ExactRational, k: &MultiIndex) -> Result<OscillatorState> {
    let g = integer_coupling(ctx)?;
    positive_omega(omega)?;
    check_k(ctx, k, ModelVariant::Full)?;
    let n = ctx.n();
    let mut p = MultiPoly::one(n);
    for (idx, &times) in k.0.iter().enumerate().rev() {
        for _ in 0..times {
            p = gauged_newton(ctx, omega, idx as u32 + 1, &p)?;
        }
    }
    let prefactor = &MultiPoly::vandermonde(n).pow(g) * &p;
    let energy = omega * spectra::energy(ModelVariant::Full, n, ctx.g(), k)?.energy;
    Ok(OscillatorState { ctx: ctx.clone(), omega: omega.clone(), k: k.clone(), excitation: p, prefactor, energy })
}

/// `Σ_{i<j} F/(x_i − x_j)²`, exact.
fn inverse_square_sum(n: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let d = &MultiPoly::var(n, i) - &MultiPoly::var(n, j);
            acc.add_assign_ref(&f.exact_divide(&(&d * &d))?);
        }
    }
    Ok(acc)
}

/// The Hamiltonian with harmonic confinement acting on `F e^(−ωr²/2)`, with the
/// Gaussian stripped:
/// `−½ΔF + ω x·∇F + (nω/2) F + g(g−1) Σ_{i<j} F/(x_i − x_j)²`.
pub fn gauged_hamiltonian(ctx: &DunklContext, omega: &ExactRational, f: &MultiPoly) -> Result<MultiPoly> {
    let n = ctx.n();
    let g = ctx.g();
    let half = BigRational::new(1.into(), 2.into());
    let mut out = f.laplacian().scale_rational(&-half.clone());
    for i in 0..n {
        out.add_assign_ref(&(&MultiPoly::var(n, i) * &f.derivative(i)).scale_rational(omega));
    }
    out.add_assign_ref(&f.scale_rational(&(omega * int(n as i64) * &half)));
    let coupling = g * (g - int(1));
    if !coupling.is_zero() {
        out.add_assign_ref(&inverse_square_sum(n, f)?.scale_rational(&coupling));
    }
    Ok(out)
}

/// `H Ψ_k − E_k Ψ_k` with the Gaussian stripped; zero for a true eigenstate.
pub fn oscillator_residual(state: &OscillatorState) -> Result<MultiPoly> {
    let h = gauged_hamiltonian(&state.ctx, &state.omega, &state.prefactor)?;
    Ok(&h - &state.prefactor.scale_rational(&state.energy))
}

/// `π_j F = −i(∂_j − 2ω x_j) F`, the shifted momentum `p_j + iωx_j` through the Gaussian.
fn shifted_momentum(n: usize, omega: &ExactRational, j: usize, f: &MultiPoly) -> MultiPoly {
    let mut t = f.derivative(j);
    t.sub_assign_ref(&(&MultiPoly::var(n, j) * f).scale_rational(&(omega * int(2))));
    t.scale(&-GaussianRational::i())
}

/// Lax creation operators `A_ℓ† = I_ℓ(p + iωx, x)` for `ℓ ≤ 3` on `F e^(−ωr²/2)`.
pub fn lax_creation(ctx: &DunklContext, omega: &ExactRational, l: u32, f: &MultiPoly) -> Result<MultiPoly> {
    let n = ctx.n();
    let g = ctx.g();
    let coupling = g * (g - int(1));
    let pi_pow = |f: &MultiPoly, e: u32| -> MultiPoly {
        let mut acc = MultiPoly::zero(n);
        for j in 0..n {
            let mut t = f.clone();
            for _ in 0..e {
                t = shifted_momentum(n, omega, j, &t);
            }
            acc.add_assign_ref(&t);
        }
        acc
    };
    match l {
        1 => Ok(pi_pow(f, 1)),
        2 => {
            let mut out = pi_pow(f, 2);
            if !coupling.is_zero() {
                out.add_assign_ref(&inverse_square_sum(n, f)?.scale_rational(&(coupling * int(2))));
            }
            Ok(out)
        }
        3 => {
            let mut out = pi_pow(f, 3);
            if !coupling.is_zero() {
                // (x_i − x_j)^−2 commutes with π_i + π_j.
                let mut pairs = MultiPoly::zero(n);
                for i in 0..n {
                    for j in i + 1..n {
                        let d = &MultiPoly::var(n, i) - &MultiPoly::var(n, j);
                        let q = f.exact_divide(&(&d * &d))?;
                        pairs.add_assign_ref(&shifted_momentum(n, omega, i, &q));
                        pairs.add_assign_ref(&shifted_momentum(n, omega, j, &q));
                    }
                }
                out.add_assign_ref(&pairs.scale_rational(&(coupling * int(3))));
            }
            Ok(out)
        }
        _ => Err(Error::Unsupported(format!("Lax charge of order {l}"))),
    }
}

/// `(A_1†)^k_1 (A_2†)^k_2 (A_3†)^k_3 Ψ_0` with the Gaussian stripped; `k_ℓ = 0` for `ℓ > 3`.
pub fn lax_state(ctx: &DunklContext, omega: &ExactRational, k: &MultiIndex) -> Result<MultiPoly> {
    let g = integer_coupling(ctx)?;
    positive_omega(omega)?;
    check_k(ctx, k, ModelVariant::Full)?;
    if k.0.iter().skip(3).any(|&a| a > 0) {
        return Err(Error::Unsupported("Lax route only covers ℓ ≤ 3".into()));
    }
    let mut f = MultiPoly::vandermonde(ctx.n()).pow(g);
    for (idx, &times) in k.0.iter().enumerate().take(3).rev() {
        for _ in 0..times {
            f = lax_creation(ctx, omega, idx as u32 + 1, &f)?;
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn ctx(n: usize, g: ExactRational) -> DunklContext {
        DunklContext::new(n, g).unwrap()
    }

    fn unit(n: usize, pos: usize) -> MultiIndex {
        MultiIndex::unit(n, pos, 1)
    }

    #[test]
    fn trivial_harmonic_is_one() {
        for n in 2..=4 {
            let h = deformed_harmonic(&ctx(n, rat(1, 2)), &MultiIndex::zero(n)).unwrap();
            assert_eq!(h.poly, MultiPoly::one(n));
            assert_eq!(h.q, rat(n as i64 * (n as i64 - 1), 4));
        }
    }

    #[test]
    fn harmonics_are_annihilated_homogeneous_symmetric() {
        for n in 2..=4 {
            for g in [int(0), rat(1, 2), int(2)] {
                let c = ctx(n, g);
                let mut b = HarmonicBuilder::new(&c);
                for m in 0..=5 {
                    for k in enumerate_levels(ModelVariant::Angular, n, m) {
                        let h = b.build(&k).unwrap();
                        assert!(!h.poly.is_zero(), "zero h n={n} g={} k={k}", format_rational(c.g()));
                        assert_eq!(h.poly.homogeneous_degree(), Some(m as u32));
                        assert!(h.poly.is_symmetric());
                        assert!(c.calogero_l_apply(&h.poly).unwrap().is_zero(), "n={n} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn tower_matches_direct_product() {
        let c = ctx(3, rat(1, 3));
        let k = MultiIndex(vec![1, 0, 1]);
        let h = deformed_harmonic(&c, &k).unwrap();
        let seed = RadialPoly::r2_power(3, c.seed_exponent());
        let t = c.newton_dunkl(1, &c.newton_dunkl(3, &seed).unwrap()).unwrap();
        let lift = int(4) - c.seed_exponent();
        assert_eq!(t.mul_r2_power(&lift).radial_collect().unwrap(), h.poly);
    }

    #[test]
    fn basis_ranks() {
        assert_eq!(harmonic_basis(&ctx(3, rat(1, 2)), 2).unwrap().rank, 1);
        assert_eq!(harmonic_basis(&ctx(5, int(2)), 0).unwrap().rank, 1);
        assert_eq!(harmonic_basis(&ctx(4, int(1)), 4).unwrap().rank, 3);
    }

    #[test]
    fn k2_is_rejected_and_vanishes() {
        let c = ctx(3, int(1));
        assert!(matches!(deformed_harmonic(&c, &unit(3, 2)), Err(Error::ConstraintViolation { .. })));
        assert!(newton_two_on_seed(&c).unwrap().is_zero());
        assert!(k2_insertion(&c, &MultiIndex(vec![1, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn angular_and_relative() {
        let c = ctx(3, int(1));
        let a = angular_eigenfunction(&c, &MultiIndex::zero(3)).unwrap();
        assert_eq!(a.epsilon, rat(1, 2) * int(3) * int(4));
        assert!(a.describe().ends_with("Δ̂^1"));
        let r = relative_harmonic(&c, &unit(3, 3)).unwrap();
        assert_eq!(r.epsilon, rat(9, 2) * int(4));
        assert_eq!(r.restricted.nvars(), 2);
        assert!(relative_harmonic(&c, &unit(3, 1)).is_err());
    }

    #[test]
    fn relative_harmonics_are_translation_invariant_and_harmonic() {
        for n in 3..=4 {
            for g in [int(0), rat(1, 2), int(2)] {
                let c = ctx(n, g);
                for m in 0..=6 {
                    let (states, rank) = relative_basis(&c, m).unwrap();
                    assert_eq!(rank as u128, degeneracy(ModelVariant::RelativeAngular, n, m));
                    for r in states {
                        let p = &r.harmonic.poly;
                        let shift: MultiPoly = (0..n).fold(MultiPoly::zero(n), |a, i| &a + &p.derivative(i));
                        assert!(shift.is_zero());
                        assert!(c.calogero_l_apply(p).unwrap().is_zero());
                        assert_eq!(p.homogeneous_degree(), Some(m as u32));
                    }
                }
            }
        }
        let r = relative_harmonic(&ctx(4, int(0)), &unit(4, 3)).unwrap();
        assert!(!r.restricted.is_zero());
        assert_eq!(r.restricted.homogeneous_degree(), Some(3));
    }

    #[test]
    fn oscillator_basics() {
        let c = ctx(3, int(1));
        let w = rat(3, 2);
        let s0 = oscillator_state(&c, &w, &MultiIndex::zero(3)).unwrap();
        assert_eq!(s0.prefactor, MultiPoly::vandermonde(3));
        // B_1† 1 = 2iωΣx
        let s1 = oscillator_state(&c, &w, &unit(3, 1)).unwrap();
        let expected = MultiPoly::power_sum(3, 1).scale(&GaussianRational::new(int(0), &w * int(2)));
        assert_eq!(s1.excitation, expected);
        assert!(matches!(oscillator_state(&ctx(3, rat(1, 2)), &w, &unit(3, 1)), Err(Error::UnsupportedCoupling(_))));
        assert!(oscillator_state(&c, &int(0), &unit(3, 1)).is_err());
    }

    #[test]
    fn oscillator_eigen_equation() {
        for n in 2..=3 {
            for g in 0..=2 {
                let c = ctx(n, int(g));
                for m in 0..=3 {
                    for k in enumerate_levels(ModelVariant::Full, n, m) {
                        let s = oscillator_state(&c, &int(1), &k).unwrap();
                        assert!(oscillator_residual(&s).unwrap().is_zero(), "n={n} g={g} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn lax_route_agrees_with_exchange_route() {
        for n in 2..=3 {
            for g in 0..=2 {
                let c = ctx(n, int(g));
                for m in 0..=4 {
                    for k in enumerate_levels(ModelVariant::Full, n, m) {
                        let b = oscillator_state(&c, &rat(1, 2), &k).unwrap().prefactor;
                        let a = lax_state(&c, &rat(1, 2), &k).unwrap();
                        assert_eq!(a, b, "n={n} g={g} k={k}");
                    }
                }
            }
        }
        let c = ctx(4, int(1));
        assert!(matches!(lax_state(&c, &int(1), &unit(4, 4)), Err(Error::Unsupported(_))));
    }
}
