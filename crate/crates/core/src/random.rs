//! Seeded random polynomials and points for randomized identity checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{rat, GaussianRational};
use crate::poly::{Monomial, MultiPoly};
use crate::spin::YoungDiagram;

pub type CheckRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CheckRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational `a/b` with `|a| ≤ 5`, `1 ≤ b ≤ 4`.
pub fn small_rational<R: Rng>(rng: &mut R) -> GaussianRational {
    GaussianRational::real(rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
}

/// Random real polynomial with up to `terms` terms of total degree ≤ `max_degree`.
pub fn random_poly<R: Rng>(rng: &mut R, n: usize, max_degree: u16, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_degree);
        let mut e = vec![0u16; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        p.add_term(Monomial::from_slice(&e), small_rational(rng));
    }
    p
}

/// Random homogeneous real polynomial of degree `d`.
pub fn random_homogeneous<R: Rng>(rng: &mut R, n: usize, d: u16, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    for _ in 0..terms {
        let mut e = vec![0u16; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        p.add_term(Monomial::from_slice(&e), small_rational(rng));
    }
    p
}

/// Random rational point in `n` dimensions.
pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<GaussianRational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

/// Random diagram with at most `max_rows` rows of length at most `max_len`.
pub fn random_diagram<R: Rng>(rng: &mut R, max_rows: usize, max_len: u32) -> YoungDiagram {
    let mut rows: Vec<u32> = (0..rng.gen_range(0..=max_rows)).map(|_| rng.gen_range(1..=max_len)).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    YoungDiagram::new(rows).expect("sorted rows")
}
