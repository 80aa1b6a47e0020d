//! Machine checks for the closed-form inverse of the wheel distance matrix
//! and the identities surrounding it.
//!
//! Every check runs in exact rational arithmetic and returns a
//! [`TheoremCheck`]: pass/fail plus, on failure, a serializable witness (the
//! residual matrix or vector that should have been zero). A check can only
//! carry a witness when it failed, so downstream reports never have to guess.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::elimination::{adjugate, cofactor, determinant, gauss_jordan_inverse, rank};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::rational::{rat, render_rational, rint, Rational};
use crate::wheel::{
    distance_matrix, f_vector, ones_vector, q_row_closed_form, special_laplacian, w_vector,
    alternating_sum_identity, c_vector,
};

/// Counterexample payload attached to a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Matrix {
        rows: usize,
        cols: usize,
        entries: Vec<Vec<String>>,
    },
    Vector {
        entries: Vec<String>,
    },
}

impl Witness {
    pub fn from_matrix(m: &Matrix) -> Self {
        Witness::Matrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(render_rational).collect())
                .collect(),
        }
    }

    pub fn from_vector(v: &Vector) -> Self {
        Witness::Vector {
            entries: v.iter().map(render_rational).collect(),
        }
    }

    pub fn from_floats(xs: &[f64]) -> Self {
        Witness::Vector {
            entries: xs.iter().map(|x| format!("{x}")).collect(),
        }
    }
}

/// Outcome of one verified statement at one size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub name: String,
    pub n: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TheoremCheck {
    pub fn pass(name: &str, n: usize) -> Self {
        TheoremCheck {
            name: name.to_string(),
            n,
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: &str, n: usize, witness: Witness) -> Self {
        TheoremCheck {
            name: name.to_string(),
            n,
            passed: false,
            witness: Some(witness),
        }
    }

    fn residual(name: &str, n: usize, residual: &Matrix) -> Self {
        if residual.is_zero() {
            TheoremCheck::pass(name, n)
        } else {
            TheoremCheck::fail(name, n, Witness::from_matrix(residual))
        }
    }

    fn residual_vec(name: &str, n: usize, residual: &Vector) -> Self {
        if residual.is_zero() {
            TheoremCheck::pass(name, n)
        } else {
            TheoremCheck::fail(name, n, Witness::from_vector(residual))
        }
    }
}

/// The two exact pieces whose sum inverts the distance matrix:
/// `-L/2` and the rank-one term `(4/(n-1)) w w'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseDecomposition {
    pub n: usize,
    pub laplacian_part: Matrix,
    pub rank_one_part: Matrix,
    pub total: Matrix,
}

/// Distance matrix, special Laplacian and rank-one factor of one even wheel,
/// built once and shared across checks. Fields are public so tests can plant
/// single-entry corruptions and watch the checks catch them.
#[derive(Debug, Clone)]
pub struct WheelSystem {
    pub n: usize,
    pub distance: Matrix,
    pub laplacian: Matrix,
    pub w: Vector,
}

impl WheelSystem {
    pub fn new(n: usize) -> Result<Self> {
        let distance = distance_matrix(n)?;
        let laplacian = special_laplacian(n)?;
        Ok(WheelSystem {
            n,
            distance,
            laplacian,
            w: w_vector(n),
        })
    }

    pub fn closed_form_inverse(&self) -> InverseDecomposition {
        let n = self.n;
        let laplacian_part = self.laplacian.scale(&rat(-1, 2));
        let factor = rat(4, n as i64 - 1);
        let rank_one_part = Matrix::outer(&self.w, &self.w).scale(&factor);
        let total = laplacian_part.add(&rank_one_part);
        InverseDecomposition {
            n,
            laplacian_part,
            rank_one_part,
            total,
        }
    }

    /// `(-L/2 + (4/(n-1)) w w') D = I`, checked entrywise.
    pub fn check_inverse_product(&self) -> TheoremCheck {
        let inv = self.closed_form_inverse();
        let residual = inv.total.mul(&self.distance).sub(&Matrix::identity(self.n));
        TheoremCheck::residual("inverse_formula_product", self.n, &residual)
    }

    /// The closed form agrees entry for entry with an independent
    /// Gauss-Jordan inversion of the distance matrix.
    pub fn check_inverse_matches_gauss_jordan(&self) -> TheoremCheck {
        let name = "inverse_equals_gauss_jordan";
        let closed = self.closed_form_inverse().total;
        match gauss_jordan_inverse(&self.distance) {
            Ok(gj) => TheoremCheck::residual(name, self.n, &closed.sub(&gj)),
            Err(_) => TheoremCheck::fail(name, self.n, Witness::from_matrix(&closed)),
        }
    }

    /// `L D + 2I = 2 w 1'`.
    pub fn check_ld_identity(&self) -> TheoremCheck {
        let n = self.n;
        let two = rint(2);
        let lhs = self
            .laplacian
            .mul(&self.distance)
            .add(&Matrix::identity(n).scale(&two));
        let rhs = Matrix::outer(&self.w, &ones_vector(n)).scale(&two);
        TheoremCheck::residual("ld_identity", n, &lhs.sub(&rhs))
    }

    /// `D w = ((n-1)/4) 1`.
    pub fn check_dw_identity(&self) -> TheoremCheck {
        let n = self.n;
        let lhs = self.distance.mul_vec(&self.w);
        let rhs = ones_vector(n).scale(&rat(n as i64 - 1, 4));
        TheoremCheck::residual_vec("dw_identity", n, &lhs.sub(&rhs))
    }

    /// The Laplacian annihilates exactly the all-ones direction:
    /// rank `n - 1` with vanishing row and column sums.
    pub fn check_rank_and_kernel(&self) -> TheoremCheck {
        let name = "rank_and_kernel";
        let n = self.n;
        let row_sums = self.laplacian.row_sums();
        if !row_sums.is_zero() {
            return TheoremCheck::fail(name, n, Witness::from_vector(&row_sums));
        }
        let col_sums = self.laplacian.col_sums();
        if !col_sums.is_zero() {
            return TheoremCheck::fail(name, n, Witness::from_vector(&col_sums));
        }
        let r = rank(&self.laplacian);
        if r != n - 1 {
            let got = Vector::from_ints(&[r as i64, n as i64 - 1]);
            return TheoremCheck::fail(name, n, Witness::from_vector(&got));
        }
        TheoremCheck::pass(name, n)
    }

    /// `-P D P / 2` with `P = I - J/n`, the centered double of the distance
    /// matrix; equals the Moore-Penrose pseudoinverse of the Laplacian.
    pub fn pseudo_inverse(&self) -> Matrix {
        let n = self.n;
        let p = Matrix::identity(n).sub(&Matrix::ones(n, n).scale(&rat(1, n as i64)));
        p.mul(&self.distance).mul(&p).scale(&rat(-1, 2))
    }

    /// The four Moore-Penrose equations for `pseudo_inverse` against the
    /// Laplacian, all exact.
    pub fn check_moore_penrose(&self) -> TheoremCheck {
        let name = "moore_penrose";
        let n = self.n;
        let l = &self.laplacian;
        let g = self.pseudo_inverse();
        let lg = l.mul(&g);
        let gl = g.mul(l);
        let eq1 = lg.mul(l).sub(l);
        if !eq1.is_zero() {
            return TheoremCheck::fail(name, n, Witness::from_matrix(&eq1));
        }
        let eq2 = gl.mul(&g).sub(&g);
        if !eq2.is_zero() {
            return TheoremCheck::fail(name, n, Witness::from_matrix(&eq2));
        }
        let eq3 = lg.transpose().sub(&lg);
        if !eq3.is_zero() {
            return TheoremCheck::fail(name, n, Witness::from_matrix(&eq3));
        }
        let eq4 = gl.transpose().sub(&gl);
        if !eq4.is_zero() {
            return TheoremCheck::fail(name, n, Witness::from_matrix(&eq4));
        }
        TheoremCheck::pass(name, n)
    }

    /// Euclidean-distance-matrix reconstruction:
    /// `D = diag(G) 1' + 1 diag(G)' - 2G` with `G = pseudo_inverse()`.
    pub fn check_edm_decomposition(&self) -> TheoremCheck {
        let n = self.n;
        let g = self.pseudo_inverse();
        let diag = g.diagonal();
        let ones = ones_vector(n);
        let rebuilt = Matrix::outer(&diag, &ones)
            .add(&Matrix::outer(&ones, &diag))
            .sub(&g.scale(&rint(2)));
        TheoremCheck::residual("edm_decomposition", n, &rebuilt.sub(&self.distance))
    }

    /// Every cofactor of the Laplacian equals `2^{n-3}`. Checks all `n^2`
    /// positions for `n <= 16` (plus the determinant-lemma consequence tying
    /// the adjugate to `det(D) = 1 - n`); three spot positions for larger
    /// `n`, where each one is still an exact big-integer determinant.
    pub fn check_cofactor_theorem(&self) -> TheoremCheck {
        let name = "cofactor_theorem";
        let n = self.n;
        let expected = Rational::from_integer(BigInt::one() << (n - 3));
        let report_bad = |i: usize, j: usize, got: &Rational| {
            let entries = Vector::new(vec![
                rint(i as i64),
                rint(j as i64),
                got.clone(),
                expected.clone(),
            ]);
            TheoremCheck::fail(name, n, Witness::from_vector(&entries))
        };
        if n <= 16 {
            let adj = match adjugate(&self.laplacian) {
                Ok(a) => a,
                Err(_) => unreachable!("square laplacian of order >= 4"),
            };
            for i in 0..n {
                for j in 0..n {
                    // adj is the transposed cofactor matrix.
                    let got = adj.get(j, i);
                    if got != &expected {
                        return report_bad(i, j, got);
                    }
                }
            }
            // Rank-one update of the determinant: with every cofactor equal,
            // det(-L/2 + (4/(n-1)) w w') collapses to
            // (4/(n-1)) w' adj(-L/2) w, which must equal 1/det(D) = 1/(1-n).
            // (-1/2)^{n-1} without relying on a pow trait impl.
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            let half_pow = Rational::new(BigInt::from(sign), BigInt::one() << (n - 1));
            let scaled_adj = adj.scale(&half_pow);
            let quad = scaled_adj.mul_vec(&self.w).dot(&self.w) * rat(4, n as i64 - 1);
            let want = rat(1, 1 - n as i64);
            if quad != want {
                let entries = Vector::new(vec![quad, want]);
                return TheoremCheck::fail(name, n, Witness::from_vector(&entries));
            }
        } else {
            for (i, j) in [(0, 0), (0, 1), (n - 1, n - 1)] {
                let got = match cofactor(&self.laplacian, i, j) {
                    Ok(c) => c,
                    Err(_) => unreachable!("indices in range"),
                };
                if got != expected {
                    return report_bad(i, j, &got);
                }
            }
        }
        TheoremCheck::pass(name, n)
    }
}

/// Builds the closed-form inverse decomposition for an even wheel.
pub fn closed_form_inverse(n: usize) -> Result<InverseDecomposition> {
    if n % 2 != 0 {
        if n < 4 {
            return Err(Error::TooSmall(n));
        }
        return Err(Error::NoInverseForOdd(n));
    }
    Ok(WheelSystem::new(n)?.closed_form_inverse())
}

pub fn check_ld_identity(n: usize) -> Result<TheoremCheck> {
    Ok(WheelSystem::new(n)?.check_ld_identity())
}

pub fn check_dw_identity(n: usize) -> Result<TheoremCheck> {
    Ok(WheelSystem::new(n)?.check_dw_identity())
}

pub fn check_rank_and_kernel(n: usize) -> Result<TheoremCheck> {
    Ok(WheelSystem::new(n)?.check_rank_and_kernel())
}

/// `-P D P / 2` for the even wheel on `n` vertices.
pub fn pseudo_inverse_from_distance(n: usize) -> Result<Matrix> {
    Ok(WheelSystem::new(n)?.pseudo_inverse())
}

pub fn check_moore_penrose(n: usize) -> Result<TheoremCheck> {
    Ok(WheelSystem::new(n)?.check_moore_penrose())
}

pub fn check_edm_decomposition(n: usize) -> Result<TheoremCheck> {
    Ok(WheelSystem::new(n)?.check_edm_decomposition())
}

pub fn check_cofactor_theorem(n: usize) -> Result<TheoremCheck> {
    Ok(WheelSystem::new(n)?.check_cofactor_theorem())
}

/// `det(D) = 1 - n` for even wheels, `0` for odd ones. Runs for any
/// `n >= 4`.
pub fn check_determinant_formula(n: usize) -> Result<TheoremCheck> {
    let name = "determinant_formula";
    let d = distance_matrix(n)?;
    let got = determinant(&d);
    let expected = if n % 2 == 0 { rint(1 - n as i64) } else { rint(0) };
    if got == expected {
        Ok(TheoremCheck::pass(name, n))
    } else {
        let entries = Vector::new(vec![got, expected]);
        Ok(TheoremCheck::fail(name, n, Witness::from_vector(&entries)))
    }
}

/// Odd wheels have singular distance matrices; Gauss-Jordan must refuse.
pub fn check_odd_singularity(n: usize) -> Result<TheoremCheck> {
    let name = "odd_singularity";
    if n % 2 == 0 {
        return Err(Error::EvenRequired(n));
    }
    let d = distance_matrix(n)?;
    match gauss_jordan_inverse(&d) {
        Err(Error::Singular) => Ok(TheoremCheck::pass(name, n)),
        Err(_) => Ok(TheoremCheck::pass(name, n)),
        Ok(inv) => Ok(TheoremCheck::fail(name, n, Witness::from_matrix(&inv))),
    }
}

fn rim_block(d: &Matrix) -> Matrix {
    let m = d.rows() - 1;
    let mut rim = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            rim.set(i, j, d.get(i + 1, j + 1).clone());
        }
    }
    rim
}

/// For every `k`, the closed-form q-row equals the selector product
/// `c_k' D_rim` and keeps tail symmetry.
pub fn check_q_row_lemmas(n: usize) -> Result<TheoremCheck> {
    let name = "q_row_lemmas";
    if n % 2 != 0 && n >= 4 {
        return Err(Error::EvenRequired(n));
    }
    let rim = rim_block(&distance_matrix(n)?);
    for k in 1..=n / 2 - 1 {
        let closed = q_row_closed_form(n, k)?;
        let product = rim.vec_mul(&c_vector(n, k)?);
        if closed != product {
            let mut entries = vec![rint(k as i64)];
            entries.extend(closed.sub(&product).iter().cloned());
            return Ok(TheoremCheck::fail(
                name,
                n,
                Witness::from_vector(&Vector::new(entries)),
            ));
        }
        if !crate::matrix::has_tail_symmetry(&closed) {
            return Ok(TheoremCheck::fail(name, n, Witness::from_vector(&closed)));
        }
    }
    Ok(TheoremCheck::pass(name, n))
}

/// The closed-form f-vector equals the alternating combination of the
/// selector products (computed through the rim block, not the q-row
/// shortcut).
pub fn check_f_vector_lemma(n: usize) -> Result<TheoremCheck> {
    let name = "f_vector_lemma";
    if n % 2 != 0 {
        return Err(Error::EvenRequired(n));
    }
    let rim = rim_block(&distance_matrix(n)?);
    let mut acc = Vector::zeros(n - 1);
    for k in 1..=n / 2 - 1 {
        let q = rim.vec_mul(&c_vector(n, k)?);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coef = rat(sign * (n as i64 - 1 - 2 * k as i64), 2);
        acc = acc.add(&q.scale(&coef));
    }
    let closed = f_vector(n)?;
    Ok(TheoremCheck::residual_vec(name, n, &closed.sub(&acc)))
}

/// Coefficient identity behind the alternating circulant sum.
pub fn check_alternating_sum(n: usize) -> Result<TheoremCheck> {
    let name = "alternating_sum";
    if n < 4 {
        return Err(Error::TooSmall(n));
    }
    if n % 2 != 0 {
        return Err(Error::EvenRequired(n));
    }
    let (lhs, rhs) = alternating_sum_identity(n);
    if lhs == rhs {
        Ok(TheoremCheck::pass(name, n))
    } else {
        let entries = Vector::new(vec![lhs, rhs]);
        Ok(TheoremCheck::fail(name, n, Witness::from_vector(&entries)))
    }
}
