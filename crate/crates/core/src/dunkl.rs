//! Type-A Dunkl operators `𝒟_i = ∂_i + g Σ_{j≠i} (1 − s_ij)/(x_i − x_j)`,
//! their Newton sums, and the gauge-fixed Calogero–Moser operator
//! `L(g) = Σ ∂_i² + Σ_{i<j} 2g/(x_i − x_j)·(∂_i − ∂_j)`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::coeff::{format_rational, ExactRational};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::radial::RadialPoly;

/// A commuting family of Dunkl operators acting on radial-weighted polynomials.
pub trait DunklFamily: Sync {
    /// Number of coordinates.
    fn dim(&self) -> usize;

    /// `𝒟_i f`, zero-based `i`.
    fn apply(&self, i: usize, f: &RadialPoly) -> Result<RadialPoly>;

    /// `𝒟_i f` on a plain polynomial.
    fn apply_poly(&self, i: usize, f: &MultiPoly) -> Result<MultiPoly> {
        self.apply(i, &RadialPoly::from_poly(f.clone()))?.radial_collect()
    }

    /// `σ(𝒟_1, …, 𝒟_n) f` for a polynomial `σ`; the operators commute so
    /// the order inside each monomial is irrelevant.
    fn apply_polynomial(&self, sigma: &MultiPoly, f: &RadialPoly) -> Result<RadialPoly> {
        if sigma.nvars() != self.dim() {
            return Err(Error::VariableCountMismatch { left: self.dim(), right: sigma.nvars() });
        }
        let mut acc: Option<RadialPoly> = None;
        for (m, c) in sigma.terms() {
            let mut t = f.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = self.apply(i, &t)?;
                }
            }
            let t = t.scale(c);
            acc = Some(match acc {
                None => t,
                Some(a) => a.try_add(&t)?,
            });
        }
        Ok(acc.unwrap_or_else(|| RadialPoly::zero(self.dim())))
    }
}

/// Particle count and coupling for the type-A operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DunklContext {
    n: usize,
    g: ExactRational,
}

impl DunklContext {
    pub fn new(n: usize, g: ExactRational) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("need at least two particles, got n = {n}")));
        }
        if g.is_negative() {
            return Err(Error::InvalidArgument(format!("coupling must be nonnegative, got {}", format_rational(&g))));
        }
        Ok(DunklContext { n, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> &ExactRational {
        &self.g
    }

    /// Same particle count, different coupling.
    pub fn with_coupling(&self, g: ExactRational) -> Result<Self> {
        Self::new(self.n, g)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    fn check_vars(&self, nvars: usize) -> Result<()> {
        if nvars == self.n {
            Ok(())
        } else {
            Err(Error::VariableCountMismatch { left: self.n, right: nvars })
        }
    }

    /// Exchange part `g Σ_{j≠i} (1 − s_ij)P/(x_i − x_j)` on a plain polynomial.
    fn exchange_part(&self, i: usize, p: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero(self.n);
        if self.g.is_zero() {
            return acc;
        }
        for j in (0..self.n).filter(|&j| j != i) {
            acc.add_assign_ref(&p.divided_difference(i, j));
        }
        acc.scale_rational(&self.g)
    }

    pub fn dunkl_apply(&self, i: usize, f: &RadialPoly) -> Result<RadialPoly> {
        self.check_index(i)?;
        self.check_vars(f.nvars())?;
        // Reflections commute with r², so the exchange part acts on each polynomial part.
        let mut out = f.derivative(i);
        for (j, p) in f.parts() {
            out.add_part(j, &self.exchange_part(i, p));
        }
        Ok(out)
    }

    /// Newton sum `Σ_i 𝒟_i^ℓ f`.
    pub fn newton_dunkl(&self, l: u32, f: &RadialPoly) -> Result<RadialPoly> {
        if l == 0 {
            return Err(Error::InvalidArgument("Newton sum order must be positive".into()));
        }
        self.check_vars(f.nvars())?;
        let mut acc = RadialPoly::zero(self.n);
        for i in 0..self.n {
            let mut t = f.clone();
            for _ in 0..l {
                t = self.dunkl_apply(i, &t)?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// `L(g) f` for permutation-symmetric `f`.
    pub fn calogero_l_apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(f.nvars())?;
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut out = f.laplacian();
        if self.g.is_zero() {
            return Ok(out);
        }
        let grads: Vec<MultiPoly> = (0..self.n).map(|i| f.derivative(i)).collect();
        let mut pair_sum = MultiPoly::zero(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                // (∂_i − ∂_j)f is antisymmetric under s_ij, so its quotient by
                // (x_i − x_j) is half the divided difference.
                let num = &grads[i] - &grads[j];
                pair_sum.add_assign_ref(&num.divided_difference(i, j));
            }
        }
        // 2g · ½ · DD
        out.add_assign_ref(&pair_sum.scale_rational(&self.g));
        Ok(out)
    }

    /// Newton sum on a plain polynomial.
    pub fn newton_dunkl_poly(&self, l: u32, f: &MultiPoly) -> Result<MultiPoly> {
        self.newton_dunkl(l, &RadialPoly::from_poly(f.clone()))?.radial_collect()
    }

    /// The starting radial power `r^(−g n(n−1) − n + 2)` as an exponent of `r²`.
    pub fn seed_exponent(&self) -> ExactRational {
        let n = BigRational::from_integer((self.n as i64).into());
        let one = BigRational::from_integer(1.into());
        let two = BigRational::from_integer(2.into());
        -(&self.g * &n * (&n - &one) + &n - &two) / &two
    }

    /// Total coupling `½ g n(n−1)`, the ground-state angular momentum.
    pub fn ground_q(&self) -> ExactRational {
        let pairs = (self.n * (self.n - 1) / 2) as i64;
        &self.g * BigRational::from_integer(pairs.into())
    }
}

impl DunklFamily for DunklContext {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply(&self, i: usize, f: &RadialPoly) -> Result<RadialPoly> {
        self.dunkl_apply(i, f)
    }
}
