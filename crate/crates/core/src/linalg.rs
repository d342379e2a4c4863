//! Exact linear algebra on small dense matrices.
//!
//! Ranks of real matrices go through fraction-free (Bareiss) elimination over
//! the integers after clearing row denominators. A plain reduced row echelon
//! form over the Gaussian rationals is kept alongside for solving and as an
//! independent rank route.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coeff::{ExactRational, GaussianRational};
use crate::error::{Error, Result};
use crate::poly::{joint_support, MultiPoly};

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[ExactRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| (r * &l).to_integer()).collect()
}

/// Rank by fraction-free Bareiss elimination. All intermediate divisions are exact.
pub fn rank_fraction_free(rows: &[Vec<ExactRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over the Gaussian rationals. Returns pivot columns.
pub fn rref(m: &mut [Vec<GaussianRational>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (dst, src) in row[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                    *dst -= &(&f * src);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank_rref(rows: &[Vec<GaussianRational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Finds `c` with `Σ c_k·vectors[k] = target`, if one exists.
pub fn solve_combination(vectors: &[Vec<GaussianRational>], target: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
    let k = vectors.len();
    let len = target.len();
    // Rows are coordinates, columns the unknowns plus the right-hand side.
    let mut m: Vec<Vec<GaussianRational>> = (0..len)
        .map(|row| {
            let mut r: Vec<GaussianRational> = vectors.iter().map(|v| v[row].clone()).collect();
            r.push(target[row].clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut sol = vec![GaussianRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = m[r][k].clone();
    }
    Some(sol)
}

/// Real coefficient rows of `polys` over their joint support.
pub fn coefficient_rows(polys: &[MultiPoly]) -> Result<Vec<Vec<ExactRational>>> {
    let basis = joint_support(polys);
    polys.iter().map(|p| p.real_coefficients(&basis)).collect()
}

/// Rank of a family of real polynomials, via fraction-free elimination.
pub fn poly_rank(polys: &[MultiPoly]) -> Result<usize> {
    if polys.iter().any(|p| !p.is_real()) {
        return Err(Error::NotReal);
    }
    Ok(rank_fraction_free(&coefficient_rows(polys)?))
}

/// Rank of a family of polynomials over the Gaussian rationals, via RREF.
pub fn poly_rank_rref(polys: &[MultiPoly]) -> usize {
    let basis = joint_support(polys);
    let rows: Vec<Vec<GaussianRational>> =
        polys.iter().map(|p| basis.iter().map(|m| p.coeff(m)).collect()).collect();
    rank_rref(&rows)
}
