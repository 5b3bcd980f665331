//! Exact Gaussian elimination over ℚ.

use num_traits::{One, Zero};

use crate::arith::Rational;

/// Basis of `{x : A x = 0}` for a dense `rows × ncols` matrix.
///
/// Each basis vector has a 1 in one free column and zeros in the other free
/// columns; pivots are taken left to right, so later columns end up free.
pub fn nullspace(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in col..ncols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

/// Rank of a dense matrix.
pub fn rank(rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    ncols - nullspace(rows, ncols).len()
}
