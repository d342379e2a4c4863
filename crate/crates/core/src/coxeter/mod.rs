//! Dunkl operators, spectra and deformed harmonics for general Coxeter
//! root systems: `A_{n−1}`, `B_n`, `D_n` and dihedral `I₂(p)`.

pub mod dihedral;
pub mod roots;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::coeff::{int, ExactRational, GaussianRational};
use crate::dunkl::DunklFamily;
use crate::error::{Error, Result};
use crate::harmonics::HarmonicTower;
use crate::linalg::{poly_rank, solve_combination};
use crate::poly::{joint_support, MultiPoly};
use crate::radial::RadialPoly;

pub use dihedral::DihedralClass;
pub use roots::{CoxeterTag, Orbit, Root, RootSystem, RootSystemSummary};

/// `𝒟_i = ∂_i + Σ_{α>0} g_α α_i/(α·x) (1 − s_α)` for a root system and
/// multiplicity function.
#[derive(Clone, Debug)]
pub struct CoxeterDunkl {
    rs: RootSystem,
    g: Vec<ExactRational>,
    forms: Vec<Option<MultiPoly>>,
}

impl CoxeterDunkl {
    pub fn new(rs: &RootSystem, g: &[ExactRational]) -> Result<Self> {
        let g = rs.multiplicities(g)?;
        let forms = rs.roots.iter().map(Root::linear_form).collect();
        Ok(CoxeterDunkl { rs: rs.clone(), g, forms })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Multiplicity per orbit.
    pub fn couplings(&self) -> &[ExactRational] {
        &self.g
    }

    pub fn total_coupling(&self) -> ExactRational {
        self.rs.total_coupling(&self.g)
    }

    /// Same system with multiplicities shifted by one on a single orbit.
    pub fn shifted(&self, orbit: usize) -> Result<Self> {
        let mut g = self.g.clone();
        g[orbit] += int(1);
        CoxeterDunkl::new(&self.rs, &g)
    }

    fn dihedral_weight(&self, e: i64) -> ExactRational {
        let p = self.rs.p.expect("dihedral");
        let classes: Vec<(DihedralClass, ExactRational)> =
            self.rs.orbits.iter().zip(&self.g).map(|(o, g)| (o.class.expect("dihedral class"), g.clone())).collect();
        dihedral::weight(p, &classes, e)
    }

    /// Reflection part of `𝒟_i` on a plain polynomial.
    pub fn exchange_part(&self, i: usize, p: &MultiPoly) -> Result<MultiPoly> {
        if self.rs.is_dihedral() {
            let q = dihedral::to_complex(p);
            let w = |e: i64| self.dihedral_weight(e);
            let ez = dihedral::exchange_z(&q, &w);
            let ezb = dihedral::exchange_zbar(&q, &w);
            // 𝒟_x = T_z + T_z̄, 𝒟_y = i(T_z − T_z̄)
            let combined = match i {
                0 => &ez + &ezb,
                _ => (&ez - &ezb).scale(&GaussianRational::i()),
            };
            return Ok(dihedral::from_complex(&combined));
        }
        let mut acc = MultiPoly::zero(self.rs.dim);
        for (r, root) in self.rs.roots.iter().enumerate() {
            let g = &self.g[self.rs.root_orbit(r)];
            let Root::Rational(alpha) = root else { unreachable!() };
            if g.is_zero() || alpha[i].is_zero() {
                continue;
            }
            let diff = p - &self.rs.reflect(r, p)?;
            let q = diff.exact_divide(self.forms[r].as_ref().expect("rational"))?;
            acc.add_assign_ref(&q.scale_rational(&(g * &alpha[i])));
        }
        Ok(acc)
    }

    fn check_invariant(&self, f: &MultiPoly) -> Result<()> {
        if f.nvars() != self.rs.dim {
            return Err(Error::VariableCountMismatch { left: self.rs.dim, right: f.nvars() });
        }
        if !self.rs.is_invariant(f)? {
            return Err(Error::NotSymmetric);
        }
        Ok(())
    }

    /// `L(g) f = Δf + Σ_O 2g_O (∇Π_O·∇f)/Π_O` on invariant `f`, where `Π_O`
    /// is the product of the root forms in orbit `O`.
    pub fn calogero_l_apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check_invariant(f)?;
        let n = self.rs.dim;
        let mut out = f.laplacian();
        for (o, g) in self.rs.orbits.iter().zip(&self.g) {
            if g.is_zero() {
                continue;
            }
            let mut num = MultiPoly::zero(n);
            for i in 0..n {
                num.add_assign_ref(&(&o.product.derivative(i) * &f.derivative(i)));
            }
            out.add_assign_ref(&num.exact_divide(&o.product)?.scale_rational(&(g * int(2))));
        }
        Ok(out)
    }

    /// `Σ_i 𝒟_i² f`, the Dunkl route to `L(g)` on invariant `f`.
    pub fn laplacian_via_dunkl(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check_invariant(f)?;
        self.apply_polynomial(&MultiPoly::r_squared(self.rs.dim), &RadialPoly::from_poly(f.clone()))?.radial_collect()
    }

    /// `a_i† f = −i𝒟_i f + iωx_i f`
    pub fn creation(&self, omega: &ExactRational, i: usize, f: &MultiPoly) -> Result<MultiPoly> {
        let d = self.apply_poly(i, f)?;
        let x = (&MultiPoly::var(self.rs.dim, i) * f).scale_rational(omega);
        Ok((&x - &d).scale(&GaussianRational::i()))
    }

    /// `a_i f = −i𝒟_i f − iωx_i f`
    pub fn annihilation(&self, omega: &ExactRational, i: usize, f: &MultiPoly) -> Result<MultiPoly> {
        let d = self.apply_poly(i, f)?;
        let x = (&MultiPoly::var(self.rs.dim, i) * f).scale_rational(omega);
        Ok((&d + &x).scale(&-GaussianRational::i()))
    }

    /// `ℋ f = Σ a_i† a_i f + 2ω Σ_{α>0} g_α s_α f`
    pub fn exchange_hamiltonian(&self, omega: &ExactRational, f: &MultiPoly) -> Result<MultiPoly> {
        let n = self.rs.dim;
        let mut out = MultiPoly::zero(n);
        for i in 0..n {
            out.add_assign_ref(&self.creation(omega, i, &self.annihilation(omega, i, f)?)?);
        }
        for (o, g) in self.g.iter().enumerate() {
            if !g.is_zero() {
                out.add_assign_ref(&self.rs.orbit_reflection_sum(o, f)?.scale_rational(&(omega * g * int(2))));
            }
        }
        Ok(out)
    }

    /// `ℋ f − (−L(g) + ω²r² − ωn) f`; zero on invariant `f`.
    pub fn hamiltonian_residual(&self, omega: &ExactRational, f: &MultiPoly) -> Result<MultiPoly> {
        let n = self.rs.dim;
        let lhs = self.exchange_hamiltonian(omega, f)?;
        let mut rhs = -&self.calogero_l_apply(f)?;
        rhs.add_assign_ref(&(&MultiPoly::r_squared(n) * f).scale_rational(&(omega * omega)));
        rhs.sub_assign_ref(&f.scale_rational(&(omega * int(n as i64))));
        Ok(&lhs - &rhs)
    }

    /// `[a_i†, a_j†] f`
    pub fn creation_commutator(&self, omega: &ExactRational, i: usize, j: usize, f: &MultiPoly) -> Result<MultiPoly> {
        let ij = self.creation(omega, i, &self.creation(omega, j, f)?)?;
        let ji = self.creation(omega, j, &self.creation(omega, i, f)?)?;
        Ok(&ij - &ji)
    }

    /// `K f = Π_O(𝒟)(Π_O f)` for a single orbit `O`, on invariant `f`.
    pub fn orbit_intertwiner_apply(&self, orbit: usize, f: &MultiPoly) -> Result<MultiPoly> {
        self.check_invariant(f)?;
        let prod = &self.rs.orbits[orbit].product;
        self.apply_polynomial(prod, &RadialPoly::from_poly(prod * f))?.radial_collect()
    }

    /// `L(g) K f − K L(g + 1_O) f`; zero on invariant `f`.
    pub fn orbit_intertwining_residual(&self, orbit: usize, f: &MultiPoly) -> Result<MultiPoly> {
        let up = self.shifted(orbit)?;
        let left = self.calogero_l_apply(&self.orbit_intertwiner_apply(orbit, f)?)?;
        let right = self.orbit_intertwiner_apply(orbit, &up.calogero_l_apply(f)?)?;
        Ok(&left - &right)
    }
}

impl DunklFamily for CoxeterDunkl {
    fn dim(&self) -> usize {
        self.rs.dim
    }

    fn apply(&self, i: usize, f: &RadialPoly) -> Result<RadialPoly> {
        if i >= self.rs.dim {
            return Err(Error::IndexOutOfRange { index: i, n: self.rs.dim });
        }
        if f.nvars() != self.rs.dim {
            return Err(Error::VariableCountMismatch { left: self.rs.dim, right: f.nvars() });
        }
        let mut out = f.derivative(i);
        for (j, p) in f.parts() {
            out.add_part(j, &self.exchange_part(i, p)?);
        }
        Ok(out)
    }
}

/// Energies of level `k`: the full `E` (including `ω`) and the angular `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterLevel {
    pub energy: ExactRational,
    pub m: u64,
    pub q: ExactRational,
    pub epsilon: ExactRational,
}

/// `E = ω(Σg_α + n/2 + Σ d_i k_i)`, `ε = ½q(q+n−2)` with `q = Σg_α + Σ_{i≥2} d_i k_i`.
pub fn coxeter_spectrum(rs: &RootSystem, g: &[ExactRational], omega: &ExactRational, k: &[u32]) -> Result<CoxeterLevel> {
    if k.len() != rs.degrees.len() {
        return Err(Error::InvalidArgument(format!("{} needs {} quantum numbers", rs.name(), rs.degrees.len())));
    }
    let g = rs.multiplicities(g)?;
    let total = rs.total_coupling(&g);
    let n = rs.dim as i64;
    let full: u64 = k.iter().zip(&rs.degrees).map(|(&a, &d)| a as u64 * d as u64).sum();
    let m = full - 2 * k[0] as u64;
    let energy = omega * (&total + BigRational::new(BigInt::from(n), BigInt::from(2)) + int(full as i64));
    let q = &total + int(m as i64);
    let epsilon = crate::spectra::sphere_eigenvalue(&q, rs.dim);
    Ok(CoxeterLevel { energy, m, q, epsilon })
}

/// All `k` with `k_1 = 0` and `Σ_{i≥2} d_i k_i = m`, lexicographic.
pub fn coxeter_levels(rs: &RootSystem, m: u64) -> Vec<Vec<u32>> {
    fn rec(deg: &[u32], pos: usize, rem: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == deg.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = if pos == 0 { 0 } else { rem / deg[pos] as u64 };
        for a in 0..=max {
            cur.push(a as u32);
            rec(deg, pos + 1, rem - a * deg[pos] as u64, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&rs.degrees, 0, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Dimension of the deformed harmonics at level `m`: the number of `k`
/// with `k_1 = 0` and `Σ_{i≥2} d_i k_i = m`.
pub fn coxeter_degeneracy(rs: &RootSystem, m: u64) -> usize {
    coxeter_levels(rs, m).len()
}

/// Builds Coxeter deformed harmonics through one shared tower.
pub struct CoxeterHarmonicBuilder<'a> {
    dunkl: &'a CoxeterDunkl,
    tower: HarmonicTower<'a>,
}

impl<'a> CoxeterHarmonicBuilder<'a> {
    pub fn new(dunkl: &'a CoxeterDunkl) -> Self {
        let tower = HarmonicTower::new(dunkl, dunkl.rs.generators.clone(), &dunkl.total_coupling());
        CoxeterHarmonicBuilder { dunkl, tower }
    }

    /// `h_k = r^(2(q−1)+n) σ_2(𝒟)^k_2 ⋯ σ_n(𝒟)^k_n r^(2(m−q+1)−n)`.
    pub fn build(&mut self, k: &[u32]) -> Result<MultiPoly> {
        if k.len() != self.dunkl.rs.degrees.len() {
            return Err(Error::InvalidArgument(format!("expected {} quantum numbers", self.dunkl.rs.degrees.len())));
        }
        if k[0] != 0 {
            return Err(Error::ConstraintViolation { variant: self.dunkl.rs.name(), reason: "k1 (r²) must vanish".into() });
        }
        self.tower.harmonic(k)
    }

    /// Harmonics at level `m` and their exact rank, which must equal [`coxeter_degeneracy`].
    pub fn basis(&mut self, m: u64) -> Result<(Vec<MultiPoly>, usize)> {
        let hs = coxeter_levels(&self.dunkl.rs, m).iter().map(|k| self.build(k)).collect::<Result<Vec<_>>>()?;
        let rank = poly_rank(&hs)?;
        let expected = coxeter_degeneracy(&self.dunkl.rs, m);
        if rank != expected {
            return Err(Error::RankMismatch { expected, found: rank });
        }
        Ok((hs, rank))
    }
}

pub fn coxeter_deformed_harmonic(dunkl: &CoxeterDunkl, k: &[u32]) -> Result<MultiPoly> {
    CoxeterHarmonicBuilder::new(dunkl).build(k)
}

/// Writes a homogeneous polynomial of degree `m` as `Σ c_a Π σ_i^(a_i)`.
/// Returns the exponent vectors with their coefficients, or `None` if `f`
/// is not in the span.
/// Exponents of the generators paired with their coefficients.
pub type InvariantExpansion = Vec<(Vec<u32>, GaussianRational)>;

pub fn express_in_invariants(
    f: &MultiPoly,
    generators: &[MultiPoly],
    m: u64,
) -> Result<Option<InvariantExpansion>> {
    let degrees: Vec<u64> = generators.iter().map(|s| s.homogeneous_degree().unwrap_or(0) as u64).collect();
    let mut exps = Vec::new();
    fn rec(deg: &[u64], pos: usize, rem: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == deg.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=rem / deg[pos].max(1) {
            if deg[pos] == 0 && a > 0 {
                break;
            }
            cur.push(a as u32);
            rec(deg, pos + 1, rem - a * deg[pos], cur, out);
            cur.pop();
        }
    }
    rec(&degrees, 0, m, &mut Vec::new(), &mut exps);
    let products: Vec<MultiPoly> = exps
        .iter()
        .map(|a| a.iter().zip(generators).fold(MultiPoly::one(f.nvars()), |acc, (&e, s)| &acc * &s.pow(e)))
        .collect();
    let mut all = products.clone();
    all.push(f.clone());
    let basis = joint_support(&all);
    let columns: Vec<Vec<GaussianRational>> = products.iter().map(|p| basis.iter().map(|m| p.coeff(m)).collect()).collect();
    let target: Vec<GaussianRational> = basis.iter().map(|m| f.coeff(m)).collect();
    Ok(solve_combination(&columns, &target).map(|c| exps.into_iter().zip(c).collect()))
}

/// Compares the `I₂(3)` harmonic with `k_2 = k` against the `A₂` relative
/// harmonic with `k_3 = k`, both at equal coupling `g`.
///
/// On `Σx = 0` with orthonormal coordinates, `Σx² ↦ r²` and
/// `Σx³ ↦ λ Re z³` with `λ² = 1/6`; the level fixes the parity of the `σ_2`
/// exponent, so the comparison stays rational.
pub fn a2_relative_agreement(g: &ExactRational, k: u32) -> Result<bool> {
    let i3 = RootSystem::build(CoxeterTag::I2, 2, Some(3))?;
    let dih = CoxeterDunkl::new(&i3, std::slice::from_ref(g))?;
    let h_dih = coxeter_deformed_harmonic(&dih, &[0, k])?;
    let ctx = crate::dunkl::DunklContext::new(3, g.clone())?;
    let rel = crate::harmonics::relative_harmonic(&ctx, &crate::spectra::MultiIndex(vec![0, 0, k]))?;
    let m = 3 * k as u64;
    let tau: Vec<MultiPoly> =
        [2u16, 3].iter().map(|&l| MultiPoly::power_sum(3, l).restrict_to_hyperplane()).collect::<Result<_>>()?;
    let (Some(ca), Some(cd)) =
        (express_in_invariants(&rel.restricted, &tau, m)?, express_in_invariants(&h_dih, &i3.generators, m)?)
    else {
        return Ok(false);
    };
    let b_min = ca.iter().map(|(e, _)| e[1]).min().unwrap_or(0);
    let scaled: Vec<GaussianRational> = ca
        .iter()
        .map(|(e, c)| {
            let steps = (e[1] - b_min) / 2;
            c.mul_rational(&BigRational::new(1.into(), BigInt::from(6).pow(steps)))
        })
        .collect();
    let target: Vec<GaussianRational> = cd.iter().map(|(_, c)| c.clone()).collect();
    if ca.iter().map(|(e, _)| e).ne(cd.iter().map(|(e, _)| e)) {
        return Ok(false);
    }
    Ok(proportional(&scaled, &target))
}

/// `a = λ b` for some `λ ≠ 0`.
fn proportional(a: &[GaussianRational], b: &[GaussianRational]) -> bool {
    let Some(pivot) = b.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let Some(inv) = b[pivot].inv() else { return false };
    let lambda = &a[pivot] * &inv;
    !lambda.is_zero() && a.iter().zip(b).all(|(x, y)| *x == &lambda * y)
}

/// `true` when every orbit coupling is a nonnegative integer.
pub fn integer_multiplicities(g: &[ExactRational]) -> bool {
    g.iter().all(|x| x.is_integer() && !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::random::{random_poly, rng};

    fn dunkl(s: &str, g: &[ExactRational]) -> CoxeterDunkl {
        CoxeterDunkl::new(&s.parse().unwrap(), g).unwrap()
    }

    #[test]
    fn one_dimensional_and_rank_one_examples() {
        let g = rat(2, 3);
        let b1 = dunkl("B1", std::slice::from_ref(&g));
        let x = MultiPoly::var(1, 0);
        assert_eq!(b1.apply_poly(0, &x).unwrap(), MultiPoly::constant(1, (int(1) + &g * int(2)).into()));
        let a1 = dunkl("A1", std::slice::from_ref(&g));
        let x1 = MultiPoly::var(2, 0);
        assert_eq!(a1.apply_poly(0, &x1).unwrap(), MultiPoly::constant(2, (int(1) + &g).into()));
        assert!(a1.apply_poly(1, &MultiPoly::one(2)).unwrap().is_zero());
    }

    #[test]
    fn operators_commute() {
        let mut r = rng(17);
        for (s, g) in [
            ("B2", vec![rat(1, 2), int(2)]),
            ("D3", vec![rat(1, 3)]),
            ("A2", vec![rat(3, 2)]),
            ("I2(3)", vec![rat(1, 2)]),
            ("I2(5)", vec![rat(2, 3)]),
            ("I2(6)", vec![int(1), rat(1, 4)]),
        ] {
            let d = dunkl(s, &g);
            let n = d.dim();
            for _ in 0..3 {
                let f = random_poly(&mut r, n, 5, 6);
                for i in 0..n {
                    for j in i + 1..n {
                        let a = d.apply_poly(i, &d.apply_poly(j, &f).unwrap()).unwrap();
                        let b = d.apply_poly(j, &d.apply_poly(i, &f).unwrap()).unwrap();
                        assert_eq!(a, b, "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn square_dihedral_matches_b2() {
        let mut r = rng(5);
        let (ge, go) = (rat(1, 3), rat(5, 2));
        let dih = dunkl("I2(4)", &[ge.clone(), go.clone()]);
        // even class ↔ short roots e_i, odd class ↔ long roots e_1 ± e_2
        let b2 = dunkl("B2", &[ge, go]);
        for _ in 0..5 {
            let f = random_poly(&mut r, 2, 6, 8);
            for i in 0..2 {
                assert_eq!(dih.apply_poly(i, &f).unwrap(), b2.apply_poly(i, &f).unwrap());
            }
        }
    }

    #[test]
    fn l_routes_agree() {
        for (s, g) in [("B2", vec![rat(1, 2), int(3)]), ("I2(5)", vec![rat(3, 4)]), ("D4", vec![int(2)]), ("A3", vec![rat(1, 2)])] {
            let d = dunkl(s, &g);
            let rs = d.root_system().clone();
            for sigma in rs.generators.iter().skip(1) {
                let f = &(&rs.generators[0] * sigma) + sigma;
                assert_eq!(d.calogero_l_apply(&f).unwrap(), d.laplacian_via_dunkl(&f).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn complex_generator_route() {
        // Re((𝒟_x + i𝒟_y)^p) = 2^(p−1)(T_z^p + T_z̄^p)
        let mut r = rng(2);
        for p in 3..=6u32 {
            let rs = RootSystem::build(CoxeterTag::I2, 2, Some(p)).unwrap();
            let g: Vec<ExactRational> = (0..rs.orbits.len()).map(|i| rat(i as i64 + 1, 3)).collect();
            let d = CoxeterDunkl::new(&rs, &g).unwrap();
            let f = random_poly(&mut r, 2, p as u16 + 2, 6);
            let cart = d.apply_polynomial(&rs.generators[1], &RadialPoly::from_poly(f.clone())).unwrap();
            let w = |e: i64| d.dihedral_weight(e);
            let q = dihedral::to_complex(&f);
            let (mut a, mut b) = (q.clone(), q);
            for _ in 0..p {
                a = dihedral::t_z(&a, &w);
                b = dihedral::t_zbar(&b, &w);
            }
            let two = GaussianRational::from_int(2).pow(p - 1);
            let expected = dihedral::from_complex(&(&a + &b).scale(&two));
            assert_eq!(cart.radial_collect().unwrap(), expected, "p={p}");
        }
    }

    #[test]
    fn spectrum_examples() {
        let i3: RootSystem = "I2(3)".parse().unwrap();
        let g = rat(2, 5);
        for k in 0..4 {
            let lv = coxeter_spectrum(&i3, std::slice::from_ref(&g), &int(1), &[0, k]).unwrap();
            let t = &g + int(k as i64);
            assert_eq!(lv.epsilon, rat(9, 2) * &t * &t);
        }
        let b2: RootSystem = "B2".parse().unwrap();
        let lv = coxeter_spectrum(&b2, &[int(1), int(1)], &int(1), &[0, 1]).unwrap();
        assert_eq!((lv.q.clone(), lv.epsilon.clone()), (int(8), int(32)));
        let ground = coxeter_spectrum(&b2, &[int(1), int(2)], &rat(1, 2), &[0, 0]).unwrap();
        assert_eq!(ground.epsilon, rat(1, 2) * int(6) * int(6));
        assert_eq!(ground.energy, rat(1, 2) * int(7));
    }

    #[test]
    fn harmonics_and_counts() {
        for (s, g) in [("B2", vec![rat(1, 2), int(1)]), ("I2(5)", vec![rat(1, 3)]), ("I2(3)", vec![int(0)])] {
            let d = dunkl(s, &g);
            let mut b = CoxeterHarmonicBuilder::new(&d);
            for m in 0..=6 {
                let (hs, rank) = b.basis(m).unwrap();
                assert_eq!(rank, hs.len());
                for h in hs {
                    assert!(d.calogero_l_apply(&h).unwrap().is_zero(), "{s} m={m}");
                }
            }
        }
        let b0 = dunkl("B2", &[int(0)]);
        let h = coxeter_deformed_harmonic(&b0, &[0, 1]).unwrap();
        assert!(h.laplacian().is_zero());
        assert_eq!(h.homogeneous_degree(), Some(4));
        assert!(coxeter_deformed_harmonic(&b0, &[1, 0]).is_err());
    }

    #[test]
    fn hamiltonian_identity_examples() {
        let d = dunkl("A2", &[rat(1, 2)]);
        let w = rat(3, 2);
        let one = MultiPoly::one(3);
        let expected = &MultiPoly::r_squared(3).scale_rational(&(&w * &w)) - &one.scale_rational(&(&w * int(3)));
        let lhs = d.exchange_hamiltonian(&w, &one).unwrap();
        assert_eq!(lhs, expected);
        assert!(d.hamiltonian_residual(&w, &MultiPoly::r_squared(3)).unwrap().is_zero());
        let f = random_poly(&mut rng(9), 3, 4, 5);
        assert!(d.creation_commutator(&w, 0, 1, &f).unwrap().is_zero());
    }

    #[test]
    fn b2_orbit_intertwiners() {
        let d = dunkl("B2", &[int(1), int(0)]);
        let rs = d.root_system().clone();
        let f = &rs.generators[1] + &rs.generators[0].pow(2).scale_rational(&rat(1, 3));
        for orbit in 0..2 {
            assert!(d.orbit_intertwining_residual(orbit, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn i2_3_matches_a2_relative() {
        for g in [int(0), rat(1, 2), int(1)] {
            for k in 0..=2 {
                assert!(a2_relative_agreement(&g, k).unwrap(), "g={g} k={k}");
            }
        }
    }
}
