//! Root data for `A_{n−1}` (in ℝⁿ), `B_n`, `D_n` and the dihedral `I₂(p)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::coeff::{format_rational, int, ExactRational};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

use super::dihedral::{self, DihedralClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoxeterTag {
    A,
    B,
    D,
    I2,
    E,
    F,
    G,
    H,
}

/// A positive root: rational coordinates, or the normal to the dihedral
/// mirror at angle `jπ/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Root {
    Rational(Vec<ExactRational>),
    Dihedral { j: u32, p: u32 },
}

impl Root {
    /// Linear form `α·x`; dihedral roots have none over the rationals.
    pub fn linear_form(&self) -> Option<MultiPoly> {
        match self {
            Root::Rational(a) => {
                let n = a.len();
                let mut f = MultiPoly::zero(n);
                for (i, c) in a.iter().enumerate() {
                    f.add_assign_ref(&MultiPoly::var(n, i).scale_rational(c));
                }
                Some(f)
            }
            Root::Dihedral { .. } => None,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Rational(a) => {
                let parts: Vec<String> = a.iter().map(format_rational).collect();
                write!(f, "({})", parts.join(", "))
            }
            Root::Dihedral { j, p } => {
                // normal to the mirror at angle jπ/p: (−sin(jπ/p), cos(jπ/p))
                if *j == 0 {
                    return write!(f, "(0, 1)");
                }
                if 2 * j == *p {
                    return write!(f, "(-1, 0)");
                }
                let d = j.gcd(p);
                let (num, den) = (j / d, p / d);
                let angle = if num == 1 { format!("π/{den}") } else { format!("{num}π/{den}") };
                write!(f, "(-sin({angle}), cos({angle}))")
            }
        }
    }
}

/// A conjugacy class of reflections carrying one multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub name: &'static str,
    /// Indices into [`RootSystem::roots`].
    pub roots: Vec<usize>,
    /// `Π_{α∈O, α>0} α·x` up to a constant.
    pub product: MultiPoly,
    /// Set for dihedral systems.
    pub(crate) class: Option<DihedralClass>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub tag: CoxeterTag,
    pub rank: usize,
    /// Ambient dimension (`rank + 1` for type A).
    pub dim: usize,
    pub p: Option<u32>,
    pub roots: Vec<Root>,
    pub orbits: Vec<Orbit>,
    /// `d_1 = 2, d_2, …`
    pub degrees: Vec<u32>,
    /// `σ_1 = r², σ_2, …`
    pub generators: Vec<MultiPoly>,
}

fn unit(n: usize, i: usize) -> Vec<ExactRational> {
    let mut v = vec![int(0); n];
    v[i] = int(1);
    v
}

fn combo(n: usize, i: usize, j: usize, sign: i64) -> Vec<ExactRational> {
    let mut v = unit(n, i);
    v[j] = int(sign);
    v
}

fn rational_orbit(name: &'static str, roots: &[Root], idx: Vec<usize>, n: usize) -> Orbit {
    let mut product = MultiPoly::one(n);
    for &i in &idx {
        product = &product * &roots[i].linear_form().expect("rational root");
    }
    Orbit { name, roots: idx, product, class: None }
}

fn even_power_sums(n: usize, count: usize) -> Vec<MultiPoly> {
    (1..=count).map(|k| MultiPoly::power_sum(n, 2 * k as u16)).collect()
}

impl RootSystem {
    pub fn build(tag: CoxeterTag, rank: usize, p: Option<u32>) -> Result<RootSystem> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        match tag {
            CoxeterTag::A => {
                if rank < 1 {
                    return bad("A_n needs rank ≥ 1".into());
                }
                let n = rank + 1;
                let roots: Vec<Root> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| Root::Rational(combo(n, i, j, -1))))
                    .collect();
                let all = rational_orbit("all", &roots, (0..roots.len()).collect(), n);
                // r² first, then the power sums of degree 1, 3, …, n.
                let mut generators = vec![MultiPoly::r_squared(n), MultiPoly::power_sum(n, 1)];
                let mut degrees = vec![2, 1];
                for l in 3..=n {
                    generators.push(MultiPoly::power_sum(n, l as u16));
                    degrees.push(l as u32);
                }
                Ok(RootSystem { tag, rank, dim: n, p: None, roots, orbits: vec![all], degrees, generators })
            }
            CoxeterTag::B => {
                if rank < 1 {
                    return bad("B_n needs rank ≥ 1".into());
                }
                let n = rank;
                let mut roots: Vec<Root> = (0..n).map(|i| Root::Rational(unit(n, i))).collect();
                for i in 0..n {
                    for j in i + 1..n {
                        roots.push(Root::Rational(combo(n, i, j, -1)));
                        roots.push(Root::Rational(combo(n, i, j, 1)));
                    }
                }
                let mut orbits = vec![rational_orbit("short", &roots, (0..n).collect(), n)];
                if n >= 2 {
                    orbits.push(rational_orbit("long", &roots, (n..roots.len()).collect(), n));
                }
                let degrees = (1..=n as u32).map(|k| 2 * k).collect();
                Ok(RootSystem { tag, rank, dim: n, p: None, roots, orbits, degrees, generators: even_power_sums(n, n) })
            }
            CoxeterTag::D => {
                if rank < 2 {
                    return bad("D_n needs rank ≥ 2".into());
                }
                let n = rank;
                let mut roots = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        roots.push(Root::Rational(combo(n, i, j, -1)));
                        roots.push(Root::Rational(combo(n, i, j, 1)));
                    }
                }
                // D₂ = A₁ × A₁ splits into two classes.
                let orbits = if n == 2 {
                    vec![rational_orbit("minus", &roots, vec![0], n), rational_orbit("plus", &roots, vec![1], n)]
                } else {
                    vec![rational_orbit("all", &roots, (0..roots.len()).collect(), n)]
                };
                let mut generators = even_power_sums(n, n - 1);
                generators.push((0..n).fold(MultiPoly::one(n), |acc, i| &acc * &MultiPoly::var(n, i)));
                let mut degrees: Vec<u32> = (1..n as u32).map(|k| 2 * k).collect();
                degrees.push(n as u32);
                Ok(RootSystem { tag, rank, dim: n, p: None, roots, orbits, degrees, generators })
            }
            CoxeterTag::I2 | CoxeterTag::G => {
                let p = if tag == CoxeterTag::G { Some(6) } else { p };
                let Some(p) = p.filter(|&p| p >= 3) else {
                    return bad("I₂(p) needs p ≥ 3".into());
                };
                if rank != 2 {
                    return bad("dihedral systems have rank 2".into());
                }
                let roots: Vec<Root> = (0..p).map(|j| Root::Dihedral { j, p }).collect();
                let orbits = DihedralClass::classes(p)
                    .into_iter()
                    .map(|class| {
                        let idx: Vec<usize> = (0..p).filter(|&j| class.contains(j)).map(|j| j as usize).collect();
                        // Mirrors of a class are the zero lines of Im z^p, Im z^(p/2) or Re z^(p/2).
                        let (name, product) = match class {
                            DihedralClass::All => ("all", dihedral::re_im_power(p).1),
                            DihedralClass::Even => ("even", dihedral::re_im_power(p / 2).1),
                            DihedralClass::Odd => ("odd", dihedral::re_im_power(p / 2).0),
                        };
                        Orbit { name, roots: idx, product, class: Some(class) }
                    })
                    .collect();
                let generators = vec![MultiPoly::r_squared(2), dihedral::re_im_power(p).0];
                Ok(RootSystem {
                    tag: CoxeterTag::I2,
                    rank: 2,
                    dim: 2,
                    p: Some(p),
                    roots,
                    orbits,
                    degrees: vec![2, p],
                    generators,
                })
            }
            CoxeterTag::E | CoxeterTag::F | CoxeterTag::H => {
                Err(Error::Unsupported(format!("root system {tag:?}{rank} needs irrational or exceptional data")))
            }
        }
    }

    pub fn is_dihedral(&self) -> bool {
        self.p.is_some()
    }

    pub fn name(&self) -> String {
        match (self.tag, self.p) {
            (CoxeterTag::I2, Some(p)) => format!("I2({p})"),
            (t, _) => format!("{t:?}{}", self.rank),
        }
    }

    /// One coupling per orbit; a single value is broadcast.
    pub fn multiplicities(&self, g: &[ExactRational]) -> Result<Vec<ExactRational>> {
        let g = match g.len() {
            1 => vec![g[0].clone(); self.orbits.len()],
            l if l == self.orbits.len() => g.to_vec(),
            l => {
                return Err(Error::InvalidArgument(format!(
                    "{} has {} multiplicity classes, got {l} couplings",
                    self.name(),
                    self.orbits.len()
                )))
            }
        };
        if let Some(bad) = g.iter().find(|x| x.is_negative()) {
            return Err(Error::InvalidArgument(format!("multiplicity {} is negative", format_rational(bad))));
        }
        Ok(g)
    }

    /// `Σ_{α>0} g_α`
    pub fn total_coupling(&self, g: &[ExactRational]) -> ExactRational {
        self.orbits.iter().zip(g).fold(ExactRational::zero(), |acc, (o, g)| acc + g * int(o.roots.len() as i64))
    }

    /// Orbit index of each root.
    pub fn root_orbit(&self, root: usize) -> usize {
        self.orbits.iter().position(|o| o.roots.contains(&root)).expect("every root lies in an orbit")
    }

    /// `s_α P` for a rational root.
    pub fn reflect(&self, root: usize, p: &MultiPoly) -> Result<MultiPoly> {
        match &self.roots[root] {
            Root::Rational(a) => {
                let n = a.len();
                let form = self.roots[root].linear_form().expect("rational");
                let norm = a.iter().fold(ExactRational::zero(), |acc, c| acc + c * c);
                // x ↦ x − 2(α·x)/(α·α) α
                let images: Vec<MultiPoly> = (0..n)
                    .map(|i| &MultiPoly::var(n, i) - &form.scale_rational(&(&a[i] * int(2) / &norm)))
                    .collect();
                p.substitute(&images)
            }
            Root::Dihedral { .. } => {
                Err(Error::Unsupported("single dihedral reflections are irrational; use orbit sums".into()))
            }
        }
    }

    /// `Σ_{α∈O, α>0} s_α P`.
    pub fn orbit_reflection_sum(&self, orbit: usize, p: &MultiPoly) -> Result<MultiPoly> {
        let o = &self.orbits[orbit];
        match (o.class, self.p) {
            (Some(class), Some(order)) => {
                let q = dihedral::to_complex(p);
                Ok(dihedral::from_complex(&dihedral::class_reflection_sum(&q, order, class)))
            }
            _ => {
                let mut acc = MultiPoly::zero(self.dim);
                for &r in &o.roots {
                    acc.add_assign_ref(&self.reflect(r, p)?);
                }
                Ok(acc)
            }
        }
    }

    /// Invariance under the whole group.
    pub fn is_invariant(&self, p: &MultiPoly) -> Result<bool> {
        if let Some(order) = self.p {
            return Ok(dihedral::is_invariant(p, order));
        }
        for r in 0..self.roots.len() {
            if self.reflect(r, p)? != *p {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn summary(&self, g: &[ExactRational]) -> Result<RootSystemSummary> {
        let g = self.multiplicities(g)?;
        Ok(RootSystemSummary {
            tag: format!("{:?}", self.tag),
            rank: self.rank,
            p: self.p,
            roots: self.roots.iter().map(Root::to_string).collect(),
            multiplicities: self.orbits.iter().zip(&g).map(|(o, g)| (o.name.to_string(), format_rational(g))).collect(),
            degrees: self.degrees.clone(),
        })
    }
}

/// Serializable description of a root system with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystemSummary {
    pub tag: String,
    pub rank: usize,
    pub p: Option<u32>,
    pub roots: Vec<String>,
    pub multiplicities: std::collections::BTreeMap<String, String>,
    pub degrees: Vec<u32>,
}

/// `A3`, `B2`, `D4`, `I2(5)`, `G2`, …
impl FromStr for RootSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse(format!("unrecognised root system `{s}`"));
        if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let p: u32 = rest.trim().parse().map_err(|_| err())?;
            return RootSystem::build(CoxeterTag::I2, 2, Some(p));
        }
        let mut chars = s.chars();
        let tag = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CoxeterTag::A,
            Some('B') => CoxeterTag::B,
            Some('D') => CoxeterTag::D,
            Some('E') => CoxeterTag::E,
            Some('F') => CoxeterTag::F,
            Some('G') => CoxeterTag::G,
            Some('H') => CoxeterTag::H,
            Some('I') => return Err(Error::Parse(format!("dihedral systems are written I2(p), got `{s}`"))),
            _ => return Err(err()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        RootSystem::build(tag, rank, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn table_sizes() {
        let b2 = rs("B2");
        assert_eq!(b2.roots.len(), 4);
        assert_eq!(b2.degrees, vec![2, 4]);
        assert_eq!(b2.total_coupling(&[int(3), int(5)]), int(16));
        let i3 = rs("I2(3)");
        assert_eq!((i3.roots.len(), i3.degrees.clone()), (3, vec![2, 3]));
        let d2 = rs("D2");
        assert_eq!((d2.roots.len(), d2.degrees.clone()), (2, vec![2, 2]));
        assert_eq!(rs("A3").roots.len(), 6);
        assert_eq!(rs("D4").roots.len(), 12);
        assert_eq!(rs("G2"), rs("I2(6)"));
    }

    #[test]
    fn unsupported_and_malformed() {
        for s in ["H3", "H4", "F4", "E6", "E8"] {
            assert!(matches!(s.parse::<RootSystem>(), Err(Error::Unsupported(_))), "{s}");
        }
        assert!("I2(2)".parse::<RootSystem>().is_err());
        assert!("X2".parse::<RootSystem>().is_err());
        assert!("B0".parse::<RootSystem>().is_err());
    }

    #[test]
    fn reflections_permute_roots() {
        for s in ["A2", "A3", "B2", "B3", "D3", "D4"] {
            let r = rs(s);
            for a in 0..r.roots.len() {
                for b in 0..r.roots.len() {
                    let image = r.reflect(a, &r.roots[b].linear_form().unwrap()).unwrap();
                    let hit = r.roots.iter().any(|c| {
                        let f = c.linear_form().unwrap();
                        image == f || image == -&f
                    });
                    assert!(hit, "{s}: s_{a} α_{b}");
                }
            }
        }
    }

    #[test]
    fn generators_are_invariant() {
        for s in ["A2", "A3", "B2", "B3", "D2", "D3", "D4", "I2(3)", "I2(4)", "I2(5)", "I2(6)"] {
            let r = rs(s);
            for (sigma, d) in r.generators.iter().zip(&r.degrees) {
                assert!(r.is_invariant(sigma).unwrap(), "{s}");
                assert_eq!(sigma.homogeneous_degree(), Some(*d));
            }
            for o in &r.orbits {
                assert_eq!(o.product.homogeneous_degree(), Some(o.roots.len() as u32));
            }
        }
    }

    #[test]
    fn dihedral_root_strings() {
        let r = rs("I2(4)");
        let s: Vec<String> = r.roots.iter().map(Root::to_string).collect();
        assert_eq!(s, vec!["(0, 1)", "(-sin(π/4), cos(π/4))", "(-1, 0)", "(-sin(3π/4), cos(3π/4))"]);
        assert_eq!(Root::Dihedral { j: 2, p: 5 }.to_string(), "(-sin(2π/5), cos(2π/5))");
    }
}
