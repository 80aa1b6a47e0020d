//! Circulant matrices and the cyclic-shift operator.
//!
//! A circulant of order `m` is determined by its first row `c'`; row `k + 1`
//! is the `k`-fold cyclic right shift of `c'`. Products of circulants are
//! again circulant, which lets `circ_mul` work on generators alone (a
//! circular convolution) instead of materializing dense factors.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::rational::Rational;
use num_traits::Zero;

/// Generator (first row) of a circulant matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    pub generator: Vector,
}

impl CirculantSpec {
    pub fn new(generator: Vector) -> Result<Self> {
        if generator.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(CirculantSpec { generator })
    }

    pub fn order(&self) -> usize {
        self.generator.len()
    }

    /// Dense form of this circulant.
    pub fn to_matrix(&self) -> Matrix {
        circulant(self)
    }
}

/// One cyclic right shift: `(v_1, ..., v_m) -> (v_m, v_1, ..., v_{m-1})`.
pub fn shift(v: &Vector) -> Result<Vector> {
    if v.is_empty() {
        return Err(Error::EmptyVector);
    }
    let m = v.len();
    let mut out = Vec::with_capacity(m);
    out.push(v.get(m - 1).clone());
    out.extend(v.as_slice()[..m - 1].iter().cloned());
    Ok(Vector::new(out))
}

/// Dense circulant with first row `spec.generator`; entry `(i, j)` is
/// `c[(j - i) mod m]` (0-based).
pub fn circulant(spec: &CirculantSpec) -> Matrix {
    let m = spec.order();
    let c = spec.generator.as_slice();
    let mut data = Vec::with_capacity(m * m);
    for i in 0..m {
        // Row i is c rotated right i times: entries c[m-i..], then c[..m-i].
        data.extend(c[m - i..].iter().cloned());
        data.extend(c[..m - i].iter().cloned());
    }
    Matrix::new(m, m, data)
}

/// Product of two circulants, computed on generators: the result is the
/// circulant generated by the circular convolution
/// `g[t] = sum_s a[s] * b[(t - s) mod m]`.
pub fn circ_mul(a: &CirculantSpec, b: &CirculantSpec) -> Result<CirculantSpec> {
    let m = a.order();
    if m != b.order() {
        return Err(Error::DimensionMismatch(format!(
            "circulant orders {} and {}",
            m,
            b.order()
        )));
    }
    let av = a.generator.as_slice();
    let bv = b.generator.as_slice();
    let mut g = vec![Rational::zero(); m];
    for (s, ax) in av.iter().enumerate() {
        if ax.is_zero() {
            continue;
        }
        for (t, slot) in g.iter_mut().enumerate() {
            // (t - s) mod m without going negative.
            let idx = (t + m - s) % m;
            *slot += ax * &bv[idx];
        }
    }
    CirculantSpec::new(Vector::new(g))
}
