//! The intertwiner `K(g) = Π_{i<j}(𝒟_i − 𝒟_j)·Δ` between `L(g+1)` and `L(g)`,
//! and the Dunkl pairing `(h′, h) = h′(𝒟) h |_{x=0}`.

use crate::coeff::{format_rational, int, ExactRational, GaussianRational};
use crate::dunkl::{DunklContext, DunklFamily};
use crate::error::{Error, Result};
use crate::harmonics::HarmonicBuilder;
use crate::linalg::poly_rank;
use crate::poly::{symmetric_monomial_basis, MultiPoly};
use crate::radial::RadialPoly;
use crate::spectra::{degeneracy, enumerate_levels, ModelVariant};

/// `K(g)` with Dunkl operators at coupling `g`, mapping coupling `g+1` data to coupling `g`.
#[derive(Clone, Debug)]
pub struct IntertwinerContext {
    pub ctx: DunklContext,
    shifted: DunklContext,
}

impl IntertwinerContext {
    pub fn new(ctx: DunklContext) -> Self {
        let shifted = ctx.with_coupling(ctx.g() + int(1)).expect("g + 1 is a valid coupling");
        IntertwinerContext { ctx, shifted }
    }

    pub fn source_coupling(&self) -> &ExactRational {
        self.shifted.g()
    }

    /// Context at `g + 1`.
    pub fn shifted(&self) -> &DunklContext {
        &self.shifted
    }
}

/// `K(g) f` for symmetric `f`.
pub fn intertwiner_apply(ictx: &IntertwinerContext, f: &MultiPoly) -> Result<MultiPoly> {
    let ctx = &ictx.ctx;
    let n = ctx.n();
    if f.nvars() != n {
        return Err(Error::VariableCountMismatch { left: n, right: f.nvars() });
    }
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut t = &MultiPoly::vandermonde(n) * f;
    for i in 0..n {
        for j in i + 1..n {
            if t.is_zero() {
                return Ok(t);
            }
            let mut d = ctx.apply_poly(i, &t)?;
            d.sub_assign_ref(&ctx.apply_poly(j, &t)?);
            t = d;
        }
    }
    Ok(t)
}

/// `K(g) L(g+1) f − L(g) K(g) f`; identically zero.
pub fn intertwining_residual(ictx: &IntertwinerContext, f: &MultiPoly) -> Result<MultiPoly> {
    let left = intertwiner_apply(ictx, &ictx.shifted.calogero_l_apply(f)?)?;
    let right = ictx.ctx.calogero_l_apply(&intertwiner_apply(ictx, f)?)?;
    Ok(&left - &right)
}

/// `h′(𝒟_1, …, 𝒟_n) h` evaluated at the origin.
pub fn dunkl_pairing(ctx: &DunklContext, h_prime: &MultiPoly, h: &MultiPoly) -> Result<GaussianRational> {
    let applied = ctx.apply_polynomial(h_prime, &RadialPoly::from_poly(h.clone()))?;
    Ok(applied.radial_collect()?.constant_term())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub m: u64,
    pub input_dim: usize,
    pub image_rank: usize,
}

/// Applies `K(g)` to the monomial symmetric basis of degree `m` and checks
/// that nothing is lost.
pub fn kernel_probe(ictx: &IntertwinerContext, m: u64) -> Result<KernelReport> {
    let n = ictx.ctx.n();
    let basis = symmetric_monomial_basis(n, m as u16);
    let images = basis.iter().map(|f| intertwiner_apply(ictx, f)).collect::<Result<Vec<_>>>()?;
    let image_rank = poly_rank(&images)?;
    if image_rank != basis.len() {
        return Err(Error::RankMismatch { expected: basis.len(), found: image_rank });
    }
    Ok(KernelReport { m, input_dim: basis.len(), image_rank })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportReport {
    pub m: u64,
    pub transported: usize,
    pub image_rank: usize,
}

/// Sends every `h_k` at coupling `g+1` through `K(g)`; the images must be
/// harmonic at coupling `g` and keep the full dimension.
pub fn harmonic_transport(ictx: &IntertwinerContext, m: u64) -> Result<TransportReport> {
    let n = ictx.ctx.n();
    let mut builder = HarmonicBuilder::new(&ictx.shifted);
    let mut images = Vec::new();
    for k in enumerate_levels(ModelVariant::Angular, n, m) {
        let h = builder.build(&k)?;
        let image = intertwiner_apply(ictx, &h.poly)?;
        if !ictx.ctx.calogero_l_apply(&image)?.is_zero() {
            return Err(Error::HarmonicityLost(format!(
                "K({})h_{k} at coupling {}",
                format_rational(ictx.ctx.g()),
                format_rational(ictx.shifted.g())
            )));
        }
        images.push(image);
    }
    let image_rank = poly_rank(&images)?;
    let expected = degeneracy(ModelVariant::Angular, n, m) as usize;
    if image_rank != expected {
        return Err(Error::RankMismatch { expected, found: image_rank });
    }
    Ok(TransportReport { m, transported: images.len(), image_rank })
}
