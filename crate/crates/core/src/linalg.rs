//! Small exact linear algebra over ℚ: row reduction, kernels, span tests and
//! unimodular integer inversion.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::scalar::{rat_int, Rational};

/// Reduced row echelon form in place; returns pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::from_integer(BigInt::from(1)) / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..rows {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[k][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : m·x = 0}` for an `r × ncols` matrix.
pub fn kernel(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut red = m.to_vec();
    let pivots = rref(&mut red);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = rat_int(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -red[row][f].clone();
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the ℚ-span of `gens`.
pub fn in_span(gens: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let base = rank(gens);
    let mut ext = gens.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == base
}

/// Inverse of a square integer matrix when it exists over ℤ.
pub fn integer_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&x| rat_int(x)).collect();
            r.extend((0..n).map(|j| rat_int(i64::from(i == j))));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(k, &p)| k != p) {
        return None;
    }
    aug.iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| {
                    if x.is_integer() {
                        x.to_integer().to_i64()
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}
