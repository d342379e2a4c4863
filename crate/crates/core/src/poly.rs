//! Sparse multivariate polynomials with exact Gaussian-rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with `x1 > x2 > … > xn`. Iteration in display order (leading
//! term first) is therefore a reverse walk of the map. Variable indices are
//! zero-based in the API and one-based in the text form (`x1`, `x2`, …).

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::coeff::{ExactRational, GaussianRational};
use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 8]>;

/// Dense exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Exponents);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_slice(e: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(o.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut m = self.clone();
        m.0.swap(i, j);
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial in `n` variables. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

fn add_into(terms: &mut BTreeMap<Monomial, GaussianRational>, m: Monomial, c: GaussianRational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: GaussianRational) -> Self {
        let mut p = Self::zero(n);
        add_into(&mut p.terms, Monomial::one(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, GaussianRational::one())
    }

    /// The coordinate `x_{i+1}`.
    pub fn var(n: usize, i: usize) -> Self {
        Self::term(Monomial::var(n, i), GaussianRational::one())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(m.len());
        add_into(&mut p.terms, m, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, collecting like terms.
    pub fn from_terms<I>(n: usize, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in it {
            if m.len() != n {
                return Err(Error::VariableCountMismatch { left: n, right: m.len() });
            }
            add_into(&mut p.terms, m, c);
        }
        Ok(p)
    }

    /// `Σ x_i²`
    pub fn r_squared(n: usize) -> Self {
        let mut p = Self::zero(n);
        for i in 0..n {
            let mut m = Monomial::one(n);
            m.0[i] = 2;
            add_into(&mut p.terms, m, GaussianRational::one());
        }
        p
    }

    /// Power sum `Σ x_i^ℓ`.
    pub fn power_sum(n: usize, l: u16) -> Self {
        let mut p = Self::zero(n);
        for i in 0..n {
            let mut m = Monomial::one(n);
            m.0[i] = l;
            add_into(&mut p.terms, m, GaussianRational::one());
        }
        p
    }

    /// Vandermonde product `Π_{i<j} (x_i − x_j)`.
    pub fn vandermonde(n: usize) -> Self {
        let mut p = Self::one(n);
        for i in 0..n {
            for j in i + 1..n {
                p = p.mul_unchecked(&(&Self::var(n, i) - &Self::var(n, j)));
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    /// Terms leading-first (descending graded-lex), the display order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let (lo, hi) = (self.terms.keys().next()?, self.terms.keys().next_back()?);
        (lo.degree() == hi.degree()).then(|| hi.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// The part of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::one(self.n))
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    /// Coefficient-wise real part.
    pub fn real_part(&self) -> MultiPoly {
        self.map_coefficients(|c| GaussianRational::real(c.re.clone()))
    }

    /// Coefficient-wise imaginary part, as a real polynomial.
    pub fn imag_part(&self) -> MultiPoly {
        self.map_coefficients(|c| GaussianRational::real(c.im.clone()))
    }

    fn map_coefficients(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            add_into(&mut out.terms, m.clone(), f(c));
        }
        out
    }

    fn check_n(&self, o: &MultiPoly) -> Result<()> {
        if self.n == o.n {
            Ok(())
        } else {
            Err(Error::VariableCountMismatch { left: self.n, right: o.n })
        }
    }

    pub fn try_add(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.check_n(o)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.check_n(o)?;
        Ok(self - o)
    }

    pub fn try_mul(&self, o: &MultiPoly) -> Result<MultiPoly> {
        self.check_n(o)?;
        Ok(self.mul_unchecked(o))
    }

    fn mul_unchecked(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                add_into(&mut out.terms, ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn add_assign_ref(&mut self, o: &MultiPoly) {
        debug_assert_eq!(self.n, o.n);
        for (m, c) in &o.terms {
            add_into(&mut self.terms, m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, o: &MultiPoly) {
        debug_assert_eq!(self.n, o.n);
        for (m, c) in &o.terms {
            add_into(&mut self.terms, m.clone(), -c);
        }
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        debug_assert_eq!(m.len(), self.n);
        add_into(&mut self.terms, m, c);
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &ExactRational) -> MultiPoly {
        self.scale(&GaussianRational::real(r.clone()))
    }

    /// Multiplies by the monomial `c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &GaussianRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.n);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `∂f/∂x_{i+1}`
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] = e - 1;
            add_into(&mut out.terms, dm, c.mul_rational(&BigRational::from_integer(BigInt::from(e))));
        }
        out
    }

    /// Flat Laplacian `Σ ∂_i²`.
    pub fn laplacian(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for i in 0..self.n {
            out.add_assign_ref(&self.derivative(i).derivative(i));
        }
        out
    }

    /// Swaps `x_{i+1}` and `x_{j+1}` in every term.
    pub fn apply_transposition(&self, i: usize, j: usize) -> Result<MultiPoly> {
        for idx in [i, j] {
            if idx >= self.n {
                return Err(Error::IndexOutOfRange { index: idx, n: self.n });
            }
        }
        Ok(self.swap_unchecked(i, j))
    }

    pub(crate) fn swap_unchecked(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.swapped(i, j), c.clone())).collect(),
        }
    }

    /// Invariance under the full symmetric group, checked on adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_unchecked(i, i + 1) == *self)
    }

    /// `(f − s_ij f)/(x_i − x_j)`, computed monomial by monomial.
    pub fn divided_difference(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            let (a, b) = (m.0[i], m.0[j]);
            if a == b {
                continue;
            }
            let (lo, hi, sign) = if a > b { (b, a, c.clone()) } else { (a, b, -c) };
            // x_i^lo x_j^lo (x_i^d − x_j^d)/(x_i − x_j) with d = hi − lo, up to sign
            for t in 0..hi - lo {
                let mut dm = m.clone();
                dm.0[i] = lo + t;
                dm.0[j] = hi - 1 - t;
                add_into(&mut out.terms, dm, sign.clone());
            }
        }
        out
    }

    /// Exact quotient `f / d`, by graded-lex division by leading terms.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check_n(d)?;
        let (lm, lc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(self.n);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm).ok_or(Error::DivisionNotExact)?;
            let qc = c * &lc_inv;
            rem.sub_assign_ref(&d.mul_term(&qm, &qc));
            add_into(&mut q.terms, qm, qc);
        }
        Ok(q)
    }

    /// Substitutes `x_{i+1} := images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: images.len() });
        }
        let target = images.first().map(|p| p.n).unwrap_or(0);
        if let Some(bad) = images.iter().find(|p| p.n != target) {
            return Err(Error::VariableCountMismatch { left: target, right: bad.n });
        }
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(p.n), p.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul_unchecked(&powers[i][e]);
                }
            }
            out.add_assign_ref(&t);
        }
        Ok(out)
    }

    /// Restricts to the hyperplane `Σ x_i = 0` by eliminating the last variable.
    pub fn restrict_to_hyperplane(&self) -> Result<MultiPoly> {
        if self.n < 2 {
            return Err(Error::InvalidArgument("hyperplane restriction needs n ≥ 2".into()));
        }
        let m = self.n - 1;
        let mut images: Vec<MultiPoly> = (0..m).map(|i| MultiPoly::var(m, i)).collect();
        let mut last = MultiPoly::zero(m);
        for v in &images {
            last.sub_assign_ref(v);
        }
        images.push(last);
        self.substitute(&images)
    }

    /// Reinterprets the polynomial in `n + extra` variables (new ones absent).
    pub fn embed(&self, n: usize) -> Result<MultiPoly> {
        if n < self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: n });
        }
        Ok(MultiPoly {
            n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(n, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        })
    }

    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: point.len() });
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t = &t * &x.pow(e as u32);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Scales so the graded-lex leading coefficient is 1.
    pub fn normalize(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Returns `λ` with `self = λ·other` if the two are proportional with `λ ≠ 0`.
    pub fn proportionality(&self, other: &MultiPoly) -> Option<GaussianRational> {
        if self.n != other.n || self.len() != other.len() {
            return None;
        }
        let ((m1, c1), (m2, c2)) = (self.leading_term()?, other.leading_term()?);
        if m1 != m2 {
            return None;
        }
        let lambda = c1 / c2;
        (other.scale(&lambda) == *self).then_some(lambda)
    }

    /// Real coefficient vector over the given monomial basis.
    pub fn real_coefficients(&self, basis: &[Monomial]) -> Result<Vec<ExactRational>> {
        basis.iter().map(|m| self.coeff(m).to_real()).collect()
    }

    /// Multiplies through by the least common denominator of all coefficient parts.
    pub fn clear_denominators(&self) -> MultiPoly {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.re.denom()).lcm(c.im.denom());
        }
        self.scale_rational(&BigRational::from_integer(l))
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, o.n, "variable count mismatch");
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, o.n, "variable count mismatch");
        let mut out = self.clone();
        out.sub_assign_ref(o);
        out
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, o.n, "variable count mismatch");
        self.mul_unchecked(o)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl fmt::Display for MultiPoly {
    /// Graded-lex text form, e.g. `3/2*x1^2*x2 - 1*x3^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let shown = if c.is_negative_real() {
                f.write_str(if k == 0 { "-" } else { " - " })?;
                -c
            } else {
                if k > 0 {
                    f.write_str(" + ")?;
                }
                c.clone()
            };
            write!(f, "{shown}")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[n={}]({})", self.n, self)
    }
}

impl MultiPoly {
    /// Parses the text form in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<MultiPoly> {
        let s = s.trim();
        let err = |msg: &str| Error::Parse(format!("{msg} in `{s}`"));
        if s == "0" {
            return Ok(MultiPoly::zero(n));
        }
        // Split on the spaced separators; complex coefficients never contain spaces.
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        // A leading minus stays attached to the first coefficient.
        let mut rest = s;
        let mut negative = false;
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let next = match (plus, minus) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            match next {
                Some(pos) => {
                    pieces.push((negative, &rest[..pos]));
                    negative = &rest[pos..pos + 3] == " - ";
                    rest = &rest[pos + 3..];
                }
                None => {
                    pieces.push((negative, rest));
                    break;
                }
            }
        }
        let mut out = MultiPoly::zero(n);
        for (neg, piece) in pieces {
            let mut factors = piece.split('*');
            let coeff: GaussianRational = factors.next().ok_or_else(|| err("empty term"))?.parse()?;
            let mut m = Monomial::one(n);
            for fct in factors {
                let body = fct.strip_prefix('x').ok_or_else(|| err("factor must start with x"))?;
                let (idx, exp) = match body.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u16>().map_err(|_| err("bad exponent"))?),
                    None => (body, 1),
                };
                let idx: usize = idx.parse().map_err(|_| err("bad variable index"))?;
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
                m.0[idx - 1] += exp;
            }
            out.add_term(m, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

impl FromStr for MultiPoly {
    type Err = Error;
    /// Parses with the variable count inferred from the largest index present.
    fn from_str(s: &str) -> Result<Self> {
        let mut n = 0;
        for tok in s.split(|c: char| !(c.is_ascii_alphanumeric())) {
            if let Some(i) = tok.strip_prefix('x') {
                if let Ok(i) = i.parse::<usize>() {
                    n = n.max(i);
                }
            }
        }
        MultiPoly::parse(s, n)
    }
}

/// All exponent vectors of total degree `d` in `n` variables, descending graded-lex.
pub fn monomials_of_degree(n: usize, d: u16) -> Vec<Monomial> {
    fn rec(n: usize, d: u16, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_slice(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Partitions of `d` into at most `parts` parts, each weakly decreasing, in
/// descending lexicographic order.
pub fn partitions_at_most(d: u16, parts: usize) -> Vec<Vec<u16>> {
    fn rec(rem: u16, max: u16, parts: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == parts {
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, parts, &mut Vec::new(), &mut out);
    out
}

/// Monomial symmetric polynomial `m_λ`: the sum of all distinct permutations of `x^λ`.
pub fn monomial_symmetric(n: usize, lambda: &[u16]) -> MultiPoly {
    let mut key: Vec<u16> = lambda.iter().copied().filter(|&e| e > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    let d: u16 = key.iter().sum();
    let mut out = MultiPoly::zero(n);
    if key.len() > n {
        return out;
    }
    for m in monomials_of_degree(n, d) {
        let mut e: Vec<u16> = m.0.iter().copied().filter(|&e| e > 0).collect();
        e.sort_unstable_by(|a, b| b.cmp(a));
        if e == key {
            out.add_term(m, GaussianRational::one());
        }
    }
    out
}

/// Basis `{m_λ}` of symmetric polynomials homogeneous of degree `d`.
pub fn symmetric_monomial_basis(n: usize, d: u16) -> Vec<MultiPoly> {
    partitions_at_most(d, n).iter().map(|l| monomial_symmetric(n, l)).collect()
}

/// Union of the supports of `polys`, sorted descending.
pub fn joint_support(polys: &[MultiPoly]) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = polys.iter().flat_map(|p| p.terms.keys().cloned()).collect();
    all.sort();
    all.dedup();
    all.reverse();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rat};

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn p(s: &str, n: usize) -> MultiPoly {
        MultiPoly::parse(s, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (x(2, 0), x(2, 1));
        assert_eq!(&(&a + &b) * &(&a - &b), p("1*x1^2 - 1*x2^2", 2));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let f = p("3/2*x1^2*x2 - 1*x3^3 + 5", 3);
        let z = &f + &(-&f);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn mismatched_variable_counts_are_rejected() {
        assert_eq!(
            x(2, 0).try_add(&x(3, 0)),
            Err(Error::VariableCountMismatch { left: 2, right: 3 })
        );
        assert!(x(2, 0).try_mul(&x(1, 0)).is_err());
    }

    #[test]
    fn exact_divide_examples() {
        let d = p("1*x1 - 1*x2", 2);
        assert_eq!(p("1*x1^2 - 1*x2^2", 2).exact_divide(&d).unwrap(), p("1*x1 + 1*x2", 2));
        assert!(MultiPoly::zero(2).exact_divide(&d).unwrap().is_zero());
        let q = p("1*x1*x2 - 1*x2^2", 2).exact_divide(&d).unwrap();
        assert_eq!(q, x(2, 1));
        assert_eq!(&q * &d, p("1*x1*x2 - 1*x2^2", 2));
    }

    #[test]
    fn inexact_division_is_reported() {
        let d = p("1*x1 - 1*x2", 2);
        assert_eq!(p("1*x1^2 + 1*x2^2", 2).exact_divide(&d), Err(Error::DivisionNotExact));
        assert_eq!(d.exact_divide(&MultiPoly::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn transposition_examples() {
        assert_eq!(x(2, 0).apply_transposition(0, 1).unwrap(), x(2, 1));
        assert_eq!(
            p("1*x1^2*x3", 3).apply_transposition(0, 2).unwrap(),
            p("1*x1*x3^2", 3)
        );
        assert_eq!(
            x(2, 0).apply_transposition(0, 2),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        );
    }

    #[test]
    fn divided_difference_matches_exact_division() {
        let f = p("3*x1^4*x2 - 2/3*x1*x2^3*x3 + 7*x2^2 + 1*x3", 3);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let num = &f - &f.apply_transposition(i, j).unwrap();
            let d = &x(3, i) - &x(3, j);
            assert_eq!(f.divided_difference(i, j), num.exact_divide(&d).unwrap());
        }
    }

    #[test]
    fn hyperplane_restriction() {
        assert!(MultiPoly::power_sum(4, 1).restrict_to_hyperplane().unwrap().is_zero());
        assert_eq!(x(2, 0).restrict_to_hyperplane().unwrap(), x(1, 0));
        assert_eq!(
            MultiPoly::r_squared(2).restrict_to_hyperplane().unwrap(),
            p("2*x1^2", 1)
        );
    }

    #[test]
    fn display_and_parse() {
        let f = p("3/2*x1^2*x2 - 1*x3^3", 3);
        assert_eq!(f.to_string(), "3/2*x1^2*x2 - 1*x3^3");
        let g = p("-1*x1 + 0+2i*x2 - 5", 2);
        assert_eq!(g.to_string(), "-1*x1 + 0+2i*x2 - 5");
        assert_eq!(g.to_string().parse::<MultiPoly>().unwrap(), g);
        let h = p("-1/2+3i*x1^2 + 1*x2", 2);
        assert_eq!(h.coeff(&Monomial::from_slice(&[2, 0])).im, rat(3, 1));
        assert_eq!(MultiPoly::parse(&h.to_string(), 2).unwrap(), h);
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
        assert!(MultiPoly::parse("1*y1", 2).is_err());
        assert!(MultiPoly::parse("1*x3", 2).is_err());
    }

    #[test]
    fn graded_lex_order_leads_with_highest_degree() {
        let f = p("1*x2 + 1*x1^2 + 1*x1*x2 + 1*x2^2 + 1", 2);
        let order: Vec<String> = f
            .terms_desc()
            .map(|(m, _)| format!("{:?}", m.0.as_slice()))
            .collect();
        assert_eq!(order, ["[2, 0]", "[1, 1]", "[0, 2]", "[0, 1]", "[0, 0]"]);
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 2)[0], Monomial::from_slice(&[2, 0, 0]));
    }

    #[test]
    fn vandermonde_is_antisymmetric() {
        let d = MultiPoly::vandermonde(3);
        assert_eq!(d.apply_transposition(0, 1).unwrap(), -&d);
        assert_eq!(d.homogeneous_degree(), Some(3));
    }

    #[test]
    fn proportionality_and_normalize() {
        let f = p("2*x1^2 - 4*x2", 2);
        let g = f.scale_rational(&rat(-3, 7));
        assert_eq!(g.proportionality(&f), Some(GaussianRational::real(rat(-3, 7))));
        assert_eq!(f.normalize(), p("1*x1^2 - 2*x2", 2));
        assert!(f.proportionality(&p("2*x1^2 - 3*x2", 2)).is_none());
        assert_eq!(f.evaluate(&[int(1).into(), int(1).into()]).unwrap(), GaussianRational::from_int(-2));
    }

    #[test]
    fn symmetric_bases() {
        assert_eq!(partitions_at_most(4, 2), vec![vec![4], vec![3, 1], vec![2, 2]]);
        assert_eq!(partitions_at_most(0, 3), vec![Vec::<u16>::new()]);
        assert_eq!(monomial_symmetric(3, &[2, 1]).len(), 6);
        assert_eq!(monomial_symmetric(3, &[1, 1, 1]), p("1*x1*x2*x3", 3));
        assert_eq!(monomial_symmetric(2, &[1, 1, 1]), MultiPoly::zero(2));
        let b = symmetric_monomial_basis(3, 3);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(MultiPoly::is_symmetric));
    }
}
