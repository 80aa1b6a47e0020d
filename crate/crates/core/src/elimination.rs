//! Exact elimination: determinants, inverses, rank, cofactors.
//!
//! Determinant and rank go through Bareiss fraction-free elimination on
//! denominator-cleared `BigInt` rows, which keeps intermediate entries at
//! minor size instead of exploding like naive fraction arithmetic. The
//! inverse uses plain rational Gauss-Jordan with first-nonzero pivoting; the
//! two routes are cross-checked in tests (`det(A) != 0` iff the inverse
//! exists, `A * A^{-1} = I`, `adj(A) = det(A) * A^{-1}`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Clears denominators row by row; returns the integer matrix and the product
/// of the row multipliers (so `det(input) = det(ints) / scale`).
fn row_cleared(m: &Matrix) -> (Vec<BigInt>, BigInt) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data = Vec::with_capacity(rows * cols);
    let mut scale = BigInt::one();
    for i in 0..rows {
        let mut lcm = BigInt::one();
        for x in m.row(i) {
            lcm = lcm.lcm(x.denom());
        }
        for x in m.row(i) {
            data.push((x.numer() * &lcm) / x.denom());
        }
        scale *= lcm;
    }
    (data, scale)
}

fn swap_rows(a: &mut [BigInt], cols: usize, r1: usize, r2: usize) {
    for j in 0..cols {
        a.swap(r1 * cols + j, r2 * cols + j);
    }
}

/// Bareiss elimination on an integer matrix; returns the determinant.
fn bareiss_det(a: &mut [BigInt], n: usize) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        let pivot = match (k..n).find(|&r| !a[r * n + k].is_zero()) {
            Some(r) => r,
            None => return BigInt::zero(),
        };
        if pivot != k {
            swap_rows(a, n, pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                // Exact by Sylvester's identity: prev divides t.
                a[i * n + j] = t / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &Matrix) -> Rational {
    assert!(m.is_square(), "determinant of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let (mut ints, scale) = row_cleared(m);
    let det = bareiss_det(&mut ints, n);
    Rational::new(det, scale)
}

/// Rank via fraction-free elimination with column skipping.
pub fn rank(m: &Matrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    if rows == 0 || cols == 0 {
        return 0;
    }
    let (mut a, _) = row_cleared(m);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = match (r..rows).find(|&i| !a[i * cols + c].is_zero()) {
            Some(i) => i,
            None => continue,
        };
        if pivot != r {
            swap_rows(&mut a, cols, pivot, r);
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[i * cols + j] * &a[r * cols + c] - &a[i * cols + c] * &a[r * cols + j];
                a[i * cols + j] = t / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = a[r * cols + c].clone();
        r += 1;
    }
    r
}

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
///
/// Returns [`Error::Singular`] when no pivot is available, which for exact
/// arithmetic is equivalent to `determinant(m) == 0`.
pub fn gauss_jordan_inverse(m: &Matrix) -> Result<Matrix> {
    assert!(m.is_square(), "inverse of non-square matrix");
    let n = m.rows();
    let w = 2 * n;
    let mut a = vec![Rational::zero(); n * w];
    for i in 0..n {
        for j in 0..n {
            a[i * w + j] = m.get(i, j).clone();
        }
        a[i * w + n + i] = Rational::one();
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r * w + col].is_zero())
            .ok_or(Error::Singular)?;
        if pivot != col {
            for j in 0..w {
                a.swap(pivot * w + j, col * w + j);
            }
        }
        let piv = a[col * w + col].clone();
        if !piv.is_one() {
            for j in col..w {
                let q = &a[col * w + j] / &piv;
                a[col * w + j] = q;
            }
        }
        let pivot_row: Vec<Rational> = a[col * w + col..(col + 1) * w].to_vec();
        for r in 0..n {
            if r == col || a[r * w + col].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut a[r * w + col], Rational::zero());
            for (offset, p) in pivot_row.iter().enumerate().skip(1) {
                if !p.is_zero() {
                    let j = col + offset;
                    a[r * w + j] -= &f * p;
                }
            }
        }
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, a[i * w + n + j].clone());
        }
    }
    Ok(inv)
}

/// Signed minor `(-1)^{i+j} det(M with row i and column j removed)`.
/// Indices are 0-based.
pub fn cofactor(m: &Matrix, i: usize, j: usize) -> Result<Rational> {
    assert!(m.is_square() && m.rows() >= 2, "cofactor needs order >= 2");
    let n = m.rows();
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange {
            i,
            j,
            rows: n,
            cols: n,
        });
    }
    let mut minor = Matrix::zeros(n - 1, n - 1);
    for r in 0..n - 1 {
        let src_r = if r < i { r } else { r + 1 };
        for c in 0..n - 1 {
            let src_c = if c < j { c } else { c + 1 };
            minor.set(r, c, m.get(src_r, src_c).clone());
        }
    }
    let d = determinant(&minor);
    Ok(if (i + j) % 2 == 0 { d } else { -d })
}

/// Transposed matrix of cofactors, satisfying `M adj(M) = det(M) I`.
pub fn adjugate(m: &Matrix) -> Result<Matrix> {
    assert!(m.is_square() && m.rows() >= 2, "adjugate needs order >= 2");
    let n = m.rows();
    let mut adj = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            adj.set(j, i, cofactor(m, i, j)?);
        }
    }
    Ok(adj)
}
