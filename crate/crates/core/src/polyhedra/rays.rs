//! Extreme rays of `{x >= 0 : A x >= 0}` from Cramer determinants of
//! rank-`(e-1)` subsystems of tight hyperplanes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::system::{check_budget, ConstraintSystem, IntVector};
use crate::error::{Error, Result};

/// Exact determinant by fraction-free (Bareiss) elimination. The empty matrix
/// has determinant 1.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Signed maximal minors of an `(e-1) x e` matrix: a kernel vector, zero iff the
/// rows are dependent.
fn cofactor_kernel(rows: &[Vec<i64>], e: usize) -> Vec<BigInt> {
    (0..e)
        .map(|j| {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = determinant(&minor);
            if j % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Visit every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Primitive generators of the extreme rays of `{x >= 0 : A x >= 0}`, sorted.
///
/// Every choice of `e - 1` hyperplanes among the constraint rows and the
/// coordinate hyperplanes `x_i = 0` is tried; independent choices give a line,
/// which is kept (oriented into the cone, divided by its content) when the cone
/// contains it.
pub fn extreme_rays(sys: &ConstraintSystem, budget: u64) -> Result<Vec<IntVector>> {
    if !sys.is_homogeneous() {
        return Err(Error::InvalidInput("extreme rays need a homogeneous system".into()));
    }
    let e = sys.e;
    if e == 0 {
        return Ok(Vec::new());
    }
    let mut hyperplanes: Vec<Vec<i64>> = sys.rows.clone();
    for i in 0..e {
        let mut unit = vec![0; e];
        unit[i] = 1;
        hyperplanes.push(unit);
    }
    check_budget(binomial(hyperplanes.len(), e - 1), budget)?;

    let mut rays = BTreeSet::new();
    let mut overflow = false;
    for_each_subset(hyperplanes.len(), e - 1, |pick| {
        let chosen: Vec<Vec<i64>> = pick.iter().map(|&p| hyperplanes[p].clone()).collect();
        let kernel = cofactor_kernel(&chosen, e);
        if kernel.iter().all(Zero::is_zero) {
            return;
        }
        let content = kernel.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for orientation in [1i32, -1] {
            let v: Option<Vec<i64>> = kernel
                .iter()
                .map(|x| (x / &content * orientation).to_i64())
                .collect();
            let Some(v) = v else {
                overflow = true;
                return;
            };
            if sys.satisfies_homogeneous(&v) {
                rays.insert(IntVector(v));
                return;
            }
        }
    });
    if overflow {
        return Err(Error::InvalidInput("ray coordinates exceed 64-bit range".into()));
    }
    Ok(rays.into_iter().collect())
}

/// True when `|det(c_1 .. c_q)| <= ‖c_1‖ ⋯ ‖c_q‖`, decided on squares.
pub fn hadamard_holds(columns: &[Vec<i64>]) -> bool {
    let q = columns.len();
    // rows of the matrix whose columns are `columns`
    let matrix: Vec<Vec<i64>> = (0..q).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    let det = determinant(&matrix);
    let lhs = (&det * &det).abs();
    let rhs: BigInt = columns
        .iter()
        .map(|c| BigInt::from(IntVector(c.clone()).norm_sq()))
        .product();
    lhs <= rhs
}
