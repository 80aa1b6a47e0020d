//! Dense vectors and matrices over [`Rational`].
//!
//! Everything here is exact: no entry is ever rounded. Products run through a
//! scaled-integer path (per-row / per-column denominator clearing, `i128`
//! accumulators with an explicit overflow bound, `BigInt` fallback) because
//! naive rational arithmetic spends most of its time in gcd reductions. The
//! fast path returns bit-identical results to schoolbook rational
//! multiplication; the test suite checks that equivalence directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// Column vector of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    data: Vec<Rational>,
}

impl Vector {
    pub fn new(data: Vec<Rational>) -> Self {
        Vector { data }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector::new(
            entries
                .iter()
                .map(|&e| Rational::from_integer(BigInt::from(e)))
                .collect(),
        )
    }

    pub fn zeros(len: usize) -> Self {
        Vector::new(vec![Rational::zero(); len])
    }

    pub fn ones(len: usize) -> Self {
        Vector::new(vec![Rational::one(); len])
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.data[i]
    }

    pub fn set(&mut self, i: usize, value: Rational) {
        self.data[i] = value;
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.data.iter()
    }

    pub fn sum(&self) -> Rational {
        self.data.iter().sum()
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "add: length mismatch");
        Vector::new(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "sub: length mismatch");
        Vector::new(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector::new(self.data.iter().map(|a| a * factor).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.data.iter().map(to_f64).collect()
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.data[i]
    }
}

/// Whether `v` reads the same forwards and backwards after its first entry,
/// i.e. `v[i] == v[len - i]` (0-based) for every `i >= 1`. Circulant rows of
/// symmetric circulant matrices have this shape.
pub fn has_tail_symmetry(v: &Vector) -> bool {
    let m = v.len();
    (1..m).all(|i| v.get(i) == v.get(m - i))
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Rational::one(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&e| Rational::from_integer(BigInt::from(e))))
            .collect();
        Matrix::new(r, c, data)
    }

    /// Diagonal matrix with `v` on the diagonal.
    pub fn diag(v: &Vector) -> Self {
        let n = v.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = v.get(i).clone();
        }
        m
    }

    /// Rank-one product `u v'`.
    pub fn outer(u: &Vector, v: &Vector) -> Self {
        let data = u
            .iter()
            .flat_map(|a| v.iter().map(move |b| a * b))
            .collect();
        Matrix::new(u.len(), v.len(), data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Vector {
        Vector::new(self.row(i).to_vec())
    }

    pub fn col_vector(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn entries(&self) -> std::slice::Iter<'_, Rational> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        Matrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(|a| a * factor).collect(),
        )
    }

    pub fn neg(&self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn diagonal(&self) -> Vector {
        assert!(self.is_square(), "diagonal of non-square matrix");
        Vector::new((0..self.rows).map(|i| self.get(i, i).clone()).collect())
    }

    pub fn row_sums(&self) -> Vector {
        Vector::new((0..self.rows).map(|i| self.row(i).iter().sum()).collect())
    }

    pub fn col_sums(&self) -> Vector {
        let mut sums = vec![Rational::zero(); self.cols];
        for i in 0..self.rows {
            for (j, s) in sums.iter_mut().enumerate() {
                *s += self.get(i, j);
            }
        }
        Vector::new(sums)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn to_f64_rowmajor(&self) -> Vec<f64> {
        self.data.iter().map(to_f64).collect()
    }

    /// Exact matrix product.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "mul: {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        if let (Some(a), Some(b)) = (scaled_rows_i64(self), scaled_cols_i64(rhs)) {
            if product_fits_i128(a.max_abs, b.max_abs, self.cols) {
                return mul_i128(self, rhs, &a, &b);
            }
        }
        mul_bigint(self, rhs)
    }

    /// Exact matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        if let (Some(a), Some(x)) = (scaled_rows_i64(self), scaled_vec_i64(v)) {
            if product_fits_i128(a.max_abs, x.max_abs, self.cols) {
                let out = (0..self.rows)
                    .map(|i| {
                        let acc: i128 = a.data[i * self.cols..(i + 1) * self.cols]
                            .iter()
                            .zip(&x.data)
                            .map(|(&p, &q)| p as i128 * q as i128)
                            .sum();
                        Rational::new(
                            BigInt::from(acc),
                            BigInt::from(a.scale[i]) * BigInt::from(x.scale),
                        )
                    })
                    .collect();
                return Vector::new(out);
            }
        }
        Vector::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.iter())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    /// Exact vector-matrix product `v' M`, returned as a plain vector.
    pub fn vec_mul(&self, v: &Vector) -> Vector {
        assert_eq!(self.rows, v.len(), "vec_mul: dimension mismatch");
        if let (Some(b), Some(x)) = (scaled_cols_i64(self), scaled_vec_i64(v)) {
            if product_fits_i128(b.max_abs, x.max_abs, self.rows) {
                let mut acc = vec![0i128; self.cols];
                for i in 0..self.rows {
                    let xi = x.data[i] as i128;
                    if xi == 0 {
                        continue;
                    }
                    for (j, slot) in acc.iter_mut().enumerate() {
                        *slot += xi * b.data[i * self.cols + j] as i128;
                    }
                }
                let out = acc
                    .into_iter()
                    .enumerate()
                    .map(|(j, s)| {
                        Rational::new(
                            BigInt::from(s),
                            BigInt::from(x.scale) * BigInt::from(b.scale[j]),
                        )
                    })
                    .collect();
                return Vector::new(out);
            }
        }
        let mut acc = vec![Rational::zero(); self.cols];
        for i in 0..self.rows {
            let xi = v.get(i);
            if xi.is_zero() {
                continue;
            }
            for (j, slot) in acc.iter_mut().enumerate() {
                *slot += xi * self.get(i, j);
            }
        }
        Vector::new(acc)
    }

    /// Largest absolute value of any entry.
    pub fn max_abs(&self) -> Rational {
        self.data
            .iter()
            .map(|a| a.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Requires every entry to be symmetric-equal before float conversion.
    pub fn to_f64_symmetric(&self) -> Result<Vec<f64>> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(self.to_f64_rowmajor())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

struct ScaledI64 {
    /// Per-row (or per-column) denominator-clearing multiplier.
    scale: Vec<i64>,
    data: Vec<i64>,
    max_abs: i64,
}

struct ScaledVecI64 {
    scale: i64,
    data: Vec<i64>,
    max_abs: i64,
}

fn lcm_to_i64(denoms: impl Iterator<Item = BigInt>) -> Option<(BigInt, i64)> {
    let mut acc = BigInt::one();
    for d in denoms {
        acc = acc.lcm(&d);
    }
    let small = acc.to_i64()?;
    Some((acc, small))
}

fn scaled_entry_i64(x: &Rational, lcm: &BigInt) -> Option<i64> {
    ((x.numer() * lcm) / x.denom()).to_i64()
}

fn scaled_rows_i64(m: &Matrix) -> Option<ScaledI64> {
    let mut scale = Vec::with_capacity(m.rows);
    let mut data = Vec::with_capacity(m.rows * m.cols);
    let mut max_abs: i64 = 0;
    for i in 0..m.rows {
        let (lcm, small) = lcm_to_i64(m.row(i).iter().map(|x| x.denom().clone()))?;
        scale.push(small);
        for x in m.row(i) {
            let v = scaled_entry_i64(x, &lcm)?;
            max_abs = max_abs.max(v.checked_abs()?);
            data.push(v);
        }
    }
    Some(ScaledI64 {
        scale,
        data,
        max_abs,
    })
}

fn scaled_cols_i64(m: &Matrix) -> Option<ScaledI64> {
    let mut scale = Vec::with_capacity(m.cols);
    let mut lcms = Vec::with_capacity(m.cols);
    for j in 0..m.cols {
        let (lcm, small) = lcm_to_i64((0..m.rows).map(|i| m.get(i, j).denom().clone()))?;
        scale.push(small);
        lcms.push(lcm);
    }
    let mut data = Vec::with_capacity(m.rows * m.cols);
    let mut max_abs: i64 = 0;
    for i in 0..m.rows {
        for j in 0..m.cols {
            let v = scaled_entry_i64(m.get(i, j), &lcms[j])?;
            max_abs = max_abs.max(v.checked_abs()?);
            data.push(v);
        }
    }
    Some(ScaledI64 {
        scale,
        data,
        max_abs,
    })
}

fn scaled_vec_i64(v: &Vector) -> Option<ScaledVecI64> {
    let (lcm, small) = lcm_to_i64(v.iter().map(|x| x.denom().clone()))?;
    let mut data = Vec::with_capacity(v.len());
    let mut max_abs: i64 = 0;
    for x in v.iter() {
        let e = scaled_entry_i64(x, &lcm)?;
        max_abs = max_abs.max(e.checked_abs()?);
        data.push(e);
    }
    Some(ScaledVecI64 {
        scale: small,
        data,
        max_abs,
    })
}

/// True when `terms * (max_a * max_b)` stays clear of i128 overflow.
fn product_fits_i128(max_a: i64, max_b: i64, terms: usize) -> bool {
    let bound = (max_a as i128)
        .checked_mul(max_b as i128)
        .and_then(|p| p.checked_mul(terms as i128 + 1));
    matches!(bound, Some(b) if b < i128::MAX / 2)
}

fn mul_i128(lhs: &Matrix, rhs: &Matrix, a: &ScaledI64, b: &ScaledI64) -> Matrix {
    let (n, k, m) = (lhs.rows, lhs.cols, rhs.cols);
    let mut data = Vec::with_capacity(n * m);
    let mut acc = vec![0i128; m];
    for i in 0..n {
        acc.iter_mut().for_each(|s| *s = 0);
        for t in 0..k {
            let av = a.data[i * k + t] as i128;
            if av == 0 {
                continue;
            }
            let brow = &b.data[t * m..(t + 1) * m];
            for (slot, &bv) in acc.iter_mut().zip(brow) {
                *slot += av * bv as i128;
            }
        }
        let si = BigInt::from(a.scale[i]);
        for (j, s) in acc.iter().enumerate() {
            data.push(Rational::new(
                BigInt::from(*s),
                &si * BigInt::from(b.scale[j]),
            ));
        }
    }
    Matrix::new(n, m, data)
}

/// Fallback product: clears denominators into `BigInt` rows/columns so the
/// inner loop is gcd-free integer arithmetic, then divides the scales back
/// out. Exact for any operand size.
fn mul_bigint(lhs: &Matrix, rhs: &Matrix) -> Matrix {
    let (n, k, m) = (lhs.rows, lhs.cols, rhs.cols);
    let mut row_scale = Vec::with_capacity(n);
    let mut a = Vec::with_capacity(n * k);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for x in lhs.row(i) {
            lcm = lcm.lcm(x.denom());
        }
        for x in lhs.row(i) {
            a.push((x.numer() * &lcm) / x.denom());
        }
        row_scale.push(lcm);
    }
    let mut col_scale = Vec::with_capacity(m);
    for j in 0..m {
        let mut lcm = BigInt::one();
        for i in 0..k {
            lcm = lcm.lcm(rhs.get(i, j).denom());
        }
        col_scale.push(lcm);
    }
    let mut b = Vec::with_capacity(k * m);
    for i in 0..k {
        for j in 0..m {
            let x = rhs.get(i, j);
            b.push((x.numer() * &col_scale[j]) / x.denom());
        }
    }
    let mut data = Vec::with_capacity(n * m);
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); m];
    for i in 0..n {
        acc.iter_mut().for_each(|s| s.set_zero());
        for t in 0..k {
            let av = &a[i * k + t];
            if av.is_zero() {
                continue;
            }
            let brow = &b[t * m..(t + 1) * m];
            for (slot, bv) in acc.iter_mut().zip(brow) {
                *slot += av * bv;
            }
        }
        for (j, s) in acc.iter().enumerate() {
            data.push(Rational::new(s.clone(), &row_scale[i] * &col_scale[j]));
        }
    }
    Matrix::new(n, m, data)
}
