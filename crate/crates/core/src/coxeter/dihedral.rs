//! Dihedral groups `I₂(p)` in the complex coordinates `z = x + iy`, `z̄ = x − iy`.
//!
//! The reflections are `s_j: z ↦ ζ^j z̄` with `ζ = e^(2πi/p)`, `j = 0..p`. The
//! roots themselves are irrational, but every sum of `ζ^(je)` over a
//! conjugacy class of reflections is an integer, and those sums are all
//! the Dunkl operators and `L(g)` ever need.
//!
//! Internally a polynomial in `(z, z̄)` is a two-variable [`MultiPoly`] with
//! variable 0 = `z`, variable 1 = `z̄`.

use num_traits::Zero;

use crate::coeff::{int, rat, ExactRational, GaussianRational};
use crate::poly::{Monomial, MultiPoly};

/// Which reflections a class contains: all of them (odd `p`), or the even /
/// odd `j` (even `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralClass {
    All,
    Even,
    Odd,
}

impl DihedralClass {
    pub fn classes(p: u32) -> Vec<DihedralClass> {
        if p % 2 == 1 {
            vec![DihedralClass::All]
        } else {
            vec![DihedralClass::Even, DihedralClass::Odd]
        }
    }

    pub fn contains(self, j: u32) -> bool {
        match self {
            DihedralClass::All => true,
            DihedralClass::Even => j.is_multiple_of(2),
            DihedralClass::Odd => j % 2 == 1,
        }
    }

    /// `Σ_{j in class} ζ^(je)`.
    pub fn character_sum(self, p: u32, e: i64) -> i64 {
        let p = p as i64;
        match self {
            DihedralClass::All => {
                if e.rem_euclid(p) == 0 {
                    p
                } else {
                    0
                }
            }
            DihedralClass::Even | DihedralClass::Odd => {
                let h = p / 2;
                if e.rem_euclid(h) != 0 {
                    return 0;
                }
                // ζ^e = (−1)^(e/h) once h | e
                let sign = if self == DihedralClass::Odd && (e / h).rem_euclid(2) == 1 { -1 } else { 1 };
                h * sign
            }
        }
    }
}

/// `W(e) = Σ_j g_j ζ^(je)` for couplings given per class.
pub fn weight(p: u32, classes: &[(DihedralClass, ExactRational)], e: i64) -> ExactRational {
    classes.iter().fold(ExactRational::zero(), |acc, (c, g)| acc + g * int(c.character_sum(p, e)))
}

/// `P(x, y) ↦ P((z + z̄)/2, (z − z̄)/(2i))`
pub fn to_complex(p: &MultiPoly) -> MultiPoly {
    let half = GaussianRational::real(rat(1, 2));
    let minus_half_i = GaussianRational::new(int(0), rat(-1, 2));
    let (z, zb) = (MultiPoly::var(2, 0), MultiPoly::var(2, 1));
    let x = (&z + &zb).scale(&half);
    let y = (&z - &zb).scale(&minus_half_i);
    p.substitute(&[x, y]).expect("two-variable polynomial")
}

/// `Q(z, z̄) ↦ Q(x + iy, x − iy)`
pub fn from_complex(q: &MultiPoly) -> MultiPoly {
    let i = GaussianRational::i();
    let (x, y) = (MultiPoly::var(2, 0), MultiPoly::var(2, 1));
    let iy = y.scale(&i);
    q.substitute(&[&x + &iy, &x - &iy]).expect("two-variable polynomial")
}

/// `κ`: exchanges the roles of `z` and `z̄` without conjugating coefficients.
pub fn kappa(q: &MultiPoly) -> MultiPoly {
    q.swap_unchecked(0, 1)
}

/// Reflection part of `T_z = ∂_z + Σ_j g_j (1 − s_j)/(z − ζ^j z̄)` on a `(z, z̄)` polynomial.
pub fn exchange_z(q: &MultiPoly, w: &dyn Fn(i64) -> ExactRational) -> MultiPoly {
    let mut out = MultiPoly::zero(2);
    for (m, c) in q.terms() {
        let (a, b) = (m.0[0] as i64, m.0[1] as i64);
        if a > b {
            for t in 0..a - b {
                let wt = w(a - b - 1 - t);
                if !wt.is_zero() {
                    let mono = Monomial::from_slice(&[(b + t) as u16, (a - 1 - t) as u16]);
                    out.add_term(mono, c.mul_rational(&wt));
                }
            }
        } else if a < b {
            for t in 0..b - a {
                let wt = w(1 + t);
                if !wt.is_zero() {
                    let mono = Monomial::from_slice(&[(a + t) as u16, (b - 1 - t) as u16]);
                    out.add_term(mono, c.mul_rational(&-wt));
                }
            }
        }
    }
    out
}

/// Reflection part of `T_z̄ = κ T_z κ`.
pub fn exchange_zbar(q: &MultiPoly, w: &dyn Fn(i64) -> ExactRational) -> MultiPoly {
    kappa(&exchange_z(&kappa(q), w))
}

/// Full `T_z` on a `(z, z̄)` polynomial.
pub fn t_z(q: &MultiPoly, w: &dyn Fn(i64) -> ExactRational) -> MultiPoly {
    &q.derivative(0) + &exchange_z(q, w)
}

/// Full `T_z̄` on a `(z, z̄)` polynomial.
pub fn t_zbar(q: &MultiPoly, w: &dyn Fn(i64) -> ExactRational) -> MultiPoly {
    &q.derivative(1) + &exchange_zbar(q, w)
}

/// `Σ_{j in class} s_j Q`, using `s_j z^a z̄^b = ζ^(j(a−b)) z^b z̄^a`.
pub fn class_reflection_sum(q: &MultiPoly, p: u32, class: DihedralClass) -> MultiPoly {
    let mut out = MultiPoly::zero(2);
    for (m, c) in q.terms() {
        let (a, b) = (m.0[0] as i64, m.0[1] as i64);
        let s = class.character_sum(p, a - b);
        if s != 0 {
            out.add_term(Monomial::from_slice(&[b as u16, a as u16]), c.mul_rational(&int(s)));
        }
    }
    out
}

/// `(Re (x+iy)^k, Im (x+iy)^k)` as rational polynomials in `(x, y)`.
pub fn re_im_power(k: u32) -> (MultiPoly, MultiPoly) {
    let w = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1).scale(&GaussianRational::i());
    let wk = w.pow(k);
    (wk.real_part(), wk.imag_part())
}

/// Invariance under `I₂(p)`: `Q(z, z̄)` is fixed by `z ↔ z̄` and by `z ↦ ζz`.
pub fn is_invariant(p_cart: &MultiPoly, p: u32) -> bool {
    let q = to_complex(p_cart);
    let ok = q.terms().all(|(m, c)| {
        let (a, b) = (m.0[0] as i64, m.0[1] as i64);
        (a - b).rem_euclid(p as i64) == 0 && q.coeff(&Monomial::from_slice(&[b as u16, a as u16])) == *c
    });
    ok
}
