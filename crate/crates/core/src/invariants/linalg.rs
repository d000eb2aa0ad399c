//! Exact Gaussian elimination and an integer lattice solve for monomial
//! systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactnum::Rational;
use crate::scalar::ExactScalar;

/// Basis of {v : A v = 0} for a row-major matrix with `cols` columns.
pub fn nullspace<S: ExactScalar>(rows: &[Vec<S>], cols: usize) -> Vec<Vec<S>> {
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][col].clone();
        for x in a[r].iter_mut() {
            *x = x.checked_div(&lead).expect("nonzero pivot");
        }
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let k = a[i][col].clone();
                for j in 0..cols {
                    let t = k.mul_ref(&a[r][j]);
                    a[i][j] = a[i][j].sub_ref(&t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![S::zero(); cols];
            v[fc] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc].clone();
            }
            v
        })
        .collect()
}

/// Kernel basis of a rational matrix by fraction-free (Bareiss) elimination
/// on the row-scaled integer matrix; same result as [`nullspace`] without the
/// coefficient growth of rational pivoting.
pub fn nullspace_rational(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len())
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| a[i][col].bits())
        else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            for j in col + 1..cols {
                let t = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); cols];
            v[fc] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in pc + 1..cols {
                    if !v[j].is_zero() && !a[row][j].is_zero() {
                        acc += Rational::from_integer(a[row][j].clone()) * &v[j];
                    }
                }
                v[pc] = -acc / Rational::from_integer(a[row][pc].clone());
            }
            v
        })
        .collect()
}

/// Integer vectors α_k with Σ_m α_k[m]·rows[m] = e_k, k < width, or `None`
/// when the rows do not generate Z^width.
///
/// Row reduction over Z keeps a unimodular transform alongside.
pub fn unit_combinations(rows: &[Vec<i64>], width: usize) -> Option<Vec<Vec<i64>>> {
    let m = rows.len();
    let mut h: Vec<Vec<i64>> = rows.to_vec();
    let mut u: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut r = 0;
    for col in 0..width {
        // Euclid on column `col` among rows r.., leaving one nonzero entry.
        loop {
            let nz: Vec<usize> = (r..m).filter(|&i| h[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz
                .iter()
                .min_by_key(|&&i| h[i][col].abs())
                .expect("nonempty");
            for &i in &nz {
                if i != p {
                    let q = h[i][col] / h[p][col];
                    for j in 0..width {
                        h[i][j] -= q * h[p][j];
                    }
                    for j in 0..m {
                        u[i][j] -= q * u[p][j];
                    }
                }
            }
        }
        let Some(p) = (r..m).find(|&i| h[i][col] != 0) else {
            return None;
        };
        h.swap(r, p);
        u.swap(r, p);
        if h[r][col] < 0 {
            h[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        if h[r][col] != 1 {
            return None;
        }
        r += 1;
    }
    // Back-substitute to clear entries above the pivots.
    for col in (0..width).rev() {
        for i in 0..col {
            let q = h[i][col];
            if q != 0 {
                for j in 0..width {
                    h[i][j] -= q * h[col][j];
                }
                for j in 0..m {
                    u[i][j] -= q * u[col][j];
                }
            }
        }
    }
    Some(u[..width].to_vec())
}
