//! Polynomials weighted by rational powers of `r² = Σ x_i²`.
//!
//! A [`RadialPoly`] stores `Σ_j P_j(x)·(r²)^(a+j)` with one base exponent `a`
//! and integer offsets `j`. The base is kept in `[0, 1)`; any integer part is
//! folded into the offsets, so two values with the same fractional exponent
//! always share a base and can be added directly.
//!
//! A centred value uses `r̃² = Σ (x_i − X)²`, `X` the mean, in place of `r²`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::coeff::{format_rational, ExactRational, GaussianRational};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialPoly {
    n: usize,
    base: ExactRational,
    parts: BTreeMap<i64, MultiPoly>,
    centred: bool,
}

fn split_exponent(a: &ExactRational) -> (ExactRational, i64) {
    let fl = a.floor();
    let shift = fl.to_integer().to_i64().expect("radial exponent out of range");
    (a - fl, shift)
}

impl RadialPoly {
    pub fn zero(n: usize) -> Self {
        RadialPoly { n, base: BigRational::zero(), parts: BTreeMap::new(), centred: false }
    }

    /// `Σ_j P_j (r²)^(a+j)` from explicit parts.
    pub fn new(n: usize, a: ExactRational, parts: impl IntoIterator<Item = (i64, MultiPoly)>) -> Result<Self> {
        let (base, shift) = split_exponent(&a);
        let mut out = RadialPoly { n, base, parts: BTreeMap::new(), centred: false };
        for (j, p) in parts {
            if p.nvars() != n {
                return Err(Error::VariableCountMismatch { left: n, right: p.nvars() });
            }
            out.add_part(j + shift, &p);
        }
        Ok(out)
    }

    /// `(r²)^a`
    pub fn r2_power(n: usize, a: ExactRational) -> Self {
        Self::new(n, a, [(0, MultiPoly::one(n))]).expect("consistent variable count")
    }

    /// `(r̃²)^a` with `r̃² = Σ (x_i − X)²`.
    pub fn centred_r2_power(n: usize, a: ExactRational) -> Self {
        let mut out = Self::r2_power(n, a);
        out.centred = true;
        out
    }

    pub fn is_centred(&self) -> bool {
        self.centred
    }

    /// The radial quadric, `r²` or `r̃²`.
    pub fn quadric(&self) -> MultiPoly {
        let r2 = MultiPoly::r_squared(self.n);
        if !self.centred {
            return r2;
        }
        let s = MultiPoly::power_sum(self.n, 1);
        &r2 - &(&s * &s).scale_rational(&BigRational::new(1.into(), (self.n as i64).into()))
    }

    /// A plain polynomial (`a = 0`).
    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        Self::new(n, BigRational::zero(), [(0, p)]).expect("consistent variable count")
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// The normalized base exponent, in `[0, 1)`.
    pub fn base(&self) -> &ExactRational {
        &self.base
    }

    pub fn parts(&self) -> impl Iterator<Item = (i64, &MultiPoly)> {
        self.parts.iter().map(|(j, p)| (*j, p))
    }

    /// The full exponent `a + j` of the part at offset `j`.
    pub fn exponent(&self, j: i64) -> ExactRational {
        &self.base + BigRational::from_integer(BigInt::from(j))
    }

    pub(crate) fn add_part(&mut self, j: i64, p: &MultiPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.parts.entry(j).or_insert_with(|| MultiPoly::zero(self.n));
        slot.add_assign_ref(p);
        if slot.is_zero() {
            self.parts.remove(&j);
        }
    }

    fn check_compatible(&self, o: &RadialPoly) -> Result<()> {
        if self.n != o.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: o.n });
        }
        // Zero values carry no exponent information.
        if self.centred != o.centred && !self.parts.is_empty() && !o.parts.is_empty() {
            return Err(Error::InvalidArgument("centred and plain radial weights do not mix".into()));
        }
        if self.base != o.base && !self.parts.is_empty() && !o.parts.is_empty() {
            return Err(Error::BaseMismatch {
                left: format_rational(&self.base),
                right: format_rational(&o.base),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &RadialPoly) -> Result<RadialPoly> {
        self.check_compatible(o)?;
        if self.parts.is_empty() {
            return Ok(o.clone());
        }
        let mut out = self.clone();
        for (j, p) in &o.parts {
            out.add_part(*j, p);
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &RadialPoly) -> Result<RadialPoly> {
        self.try_add(&o.scale(&GaussianRational::from_int(-1)))
    }

    /// Product; base exponents add, and any carry moves into the offsets.
    pub fn try_mul(&self, o: &RadialPoly) -> Result<RadialPoly> {
        if self.n != o.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: o.n });
        }
        if self.centred != o.centred && !self.parts.is_empty() && !o.parts.is_empty() {
            return Err(Error::InvalidArgument("centred and plain radial weights do not mix".into()));
        }
        let (base, carry) = split_exponent(&(&self.base + &o.base));
        let mut out = RadialPoly { n: self.n, base, parts: BTreeMap::new(), centred: self.centred || o.centred };
        for (ja, pa) in &self.parts {
            for (jb, pb) in &o.parts {
                out.add_part(ja + jb + carry, &(pa * pb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> RadialPoly {
        let mut out = RadialPoly { n: self.n, base: self.base.clone(), parts: BTreeMap::new(), centred: self.centred };
        for (j, p) in &self.parts {
            out.add_part(*j, &p.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, q: &MultiPoly) -> RadialPoly {
        let mut out = RadialPoly { n: self.n, base: self.base.clone(), parts: BTreeMap::new(), centred: self.centred };
        for (j, p) in &self.parts {
            out.add_part(*j, &(p * q));
        }
        out
    }

    /// Multiplies by `(r²)^c`.
    pub fn mul_r2_power(&self, c: &ExactRational) -> RadialPoly {
        let (base, carry) = split_exponent(&(&self.base + c));
        RadialPoly {
            n: self.n,
            base,
            parts: self.parts.iter().map(|(j, p)| (j + carry, p.clone())).collect(),
            centred: self.centred,
        }
    }

    /// Applies a map to every polynomial part, leaving the radial weights alone.
    pub fn map_parts(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> RadialPoly {
        let mut out = RadialPoly { n: self.n, base: self.base.clone(), parts: BTreeMap::new(), centred: self.centred };
        for (j, p) in &self.parts {
            out.add_part(*j, &f(p));
        }
        out
    }

    /// Swaps two variables; `r²` is symmetric so weights are unchanged.
    pub fn apply_transposition(&self, i: usize, j: usize) -> Result<RadialPoly> {
        for idx in [i, j] {
            if idx >= self.n {
                return Err(Error::IndexOutOfRange { index: idx, n: self.n });
            }
        }
        Ok(self.map_parts(|p| p.swap_unchecked(i, j)))
    }

    /// Folds every part onto the lowest offset: returns `(j_min, Q)` with
    /// `self = Q·(r²)^(a+j_min)`.
    pub fn collapse(&self) -> Option<(i64, MultiPoly)> {
        let jmin = *self.parts.keys().next()?;
        let r2 = self.quadric();
        let mut acc = MultiPoly::zero(self.n);
        for (j, p) in &self.parts {
            acc.add_assign_ref(&(p * &r2.pow((j - jmin) as u32)));
        }
        Some((jmin, acc))
    }

    /// True when the represented function vanishes identically.
    pub fn is_zero(&self) -> bool {
        match self.collapse() {
            None => true,
            Some((_, q)) => q.is_zero(),
        }
    }

    /// Equality as functions rather than as representations.
    pub fn same_function(&self, o: &RadialPoly) -> Result<bool> {
        Ok(self.try_sub(o)?.is_zero())
    }

    /// Expands `Σ_j P_j (r²)^(a+j)` into a plain polynomial.
    pub fn radial_collect(&self) -> Result<MultiPoly> {
        let r2 = self.quadric();
        let mut acc = MultiPoly::zero(self.n);
        let mut cache: Vec<MultiPoly> = vec![MultiPoly::one(self.n)];
        for (j, p) in &self.parts {
            let e = self.exponent(*j);
            if !self.base.is_zero() || *j < 0 {
                return Err(Error::NotPolynomial(format_rational(&e)));
            }
            let j = *j as usize;
            while cache.len() <= j {
                let next = cache.last().unwrap() * &r2;
                cache.push(next);
            }
            acc.add_assign_ref(&(p * &cache[j]));
        }
        Ok(acc)
    }

    /// Evaluates at a point; only defined for integer exponents and `r² ≠ 0`.
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if !self.base.is_zero() {
            return Err(Error::NotPolynomial(format_rational(&self.base)));
        }
        let r2 = self.quadric().evaluate(point)?;
        let mut acc = GaussianRational::zero();
        for (j, p) in &self.parts {
            let w = if *j >= 0 {
                r2.pow(*j as u32)
            } else {
                r2.inv()
                    .ok_or_else(|| Error::InvalidArgument("evaluation at r = 0".into()))?
                    .pow((-*j) as u32)
            };
            acc += &(&p.evaluate(point)? * &w);
        }
        Ok(acc)
    }

    /// `∂/∂x_{i+1}` using `∂_i (r²)^e = 2e·x_i·(r²)^(e−1)`, with `x_i − X` when centred.
    pub fn derivative(&self, i: usize) -> RadialPoly {
        let mut out = RadialPoly { n: self.n, base: self.base.clone(), parts: BTreeMap::new(), centred: self.centred };
        let mut xi = MultiPoly::var(self.n, i);
        if self.centred {
            let mean = MultiPoly::power_sum(self.n, 1).scale_rational(&BigRational::new(1.into(), (self.n as i64).into()));
            xi.sub_assign_ref(&mean);
        }
        for (j, p) in &self.parts {
            out.add_part(*j, &p.derivative(i));
            let e = self.exponent(*j);
            if !e.is_zero() {
                let two_e = GaussianRational::real(e * BigRational::from_integer(2.into()));
                out.add_part(j - 1, &(p * &xi).scale(&two_e));
            }
        }
        out
    }

    /// Constant `1` with the zero exponent.
    pub fn one(n: usize) -> Self {
        Self::from_poly(MultiPoly::one(n))
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rat};

    #[test]
    fn half_powers_multiply_to_r_squared() {
        let h = RadialPoly::r2_power(3, rat(1, 2));
        let prod = h.try_mul(&h).unwrap();
        assert_eq!(prod.radial_collect().unwrap(), MultiPoly::r_squared(3));
    }

    #[test]
    fn collect_examples() {
        let n = 3;
        assert_eq!(RadialPoly::r2_power(n, int(1)).radial_collect().unwrap(), MultiPoly::r_squared(n));
        let x1 = MultiPoly::var(n, 0);
        assert_eq!(RadialPoly::from_poly(x1.clone()).radial_collect().unwrap(), x1);
        assert!(matches!(
            RadialPoly::r2_power(n, rat(1, 2)).radial_collect(),
            Err(Error::NotPolynomial(_))
        ));
        assert!(matches!(
            RadialPoly::r2_power(n, int(-1)).radial_collect(),
            Err(Error::NotPolynomial(_))
        ));
    }

    #[test]
    fn bases_must_agree_modulo_integers() {
        let a = RadialPoly::r2_power(2, rat(1, 3));
        let b = RadialPoly::r2_power(2, rat(4, 3));
        assert!(a.try_add(&b).is_ok());
        let c = RadialPoly::r2_power(2, rat(1, 2));
        assert!(matches!(a.try_add(&c), Err(Error::BaseMismatch { .. })));
    }

    #[test]
    fn transposition_leaves_r_squared_alone() {
        let r2 = RadialPoly::r2_power(4, int(1));
        assert_eq!(r2.apply_transposition(1, 3).unwrap(), r2);
    }

    #[test]
    fn derivative_of_radial_power() {
        // ∂_1 (r²)^(3/2) = 3 x1 (r²)^(1/2); squaring both sides checks it exactly.
        let f = RadialPoly::r2_power(2, rat(3, 2)).derivative(0);
        let sq = f.try_mul(&f).unwrap().radial_collect().unwrap();
        let x1 = MultiPoly::var(2, 0);
        let expected = (&(&x1 * &x1) * &MultiPoly::r_squared(2)).scale(&GaussianRational::from_int(9));
        assert_eq!(sq, expected);
    }

    #[test]
    fn centred_radius_is_translation_invariant() {
        let n = 3;
        let f = RadialPoly::centred_r2_power(n, rat(3, 2));
        let total = (0..n).fold(RadialPoly::zero(n), |acc, i| acc.try_add(&f.derivative(i)).unwrap());
        assert!(total.is_zero());
        let sq = f.try_mul(&f).unwrap().radial_collect().unwrap();
        assert_eq!(sq, f.quadric().pow(3));
        assert!(f.try_add(&RadialPoly::r2_power(n, rat(3, 2))).is_err());
    }

    #[test]
    fn function_equality_ignores_representation() {
        let n = 2;
        let a = RadialPoly::new(n, rat(1, 2), [(1, MultiPoly::one(n))]).unwrap();
        let b = RadialPoly::new(n, rat(1, 2), [(0, MultiPoly::r_squared(n))]).unwrap();
        assert_ne!(a, b);
        assert!(a.same_function(&b).unwrap());
    }
}
