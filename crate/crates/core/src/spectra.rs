//! Floating-point spectral checks: positive semidefiniteness, inertia,
//! eigenvalue interlacing and the Euclidean-distance-matrix predicate.
//!
//! Exact matrices are converted to `f64` only after an exact symmetry check,
//! then diagonalized with cyclic Jacobi sweeps. All pass/fail decisions use
//! relative tolerances scaled by the spectral radius (or by the explicitly
//! documented slack for the interlacing chain), so ties and true zero
//! eigenvalues are handled without exact float comparisons.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{rat, to_f64};
use crate::theorems::{TheoremCheck, Witness};
use crate::wheel::{distance_matrix, special_laplacian};

/// Relative tolerance deciding when an eigenvalue counts as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-9;
/// Relative slack allowed in the interlacing chain (covers exact ties).
pub const DEFAULT_INTERLACING_SLACK: f64 = 1e-8;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_RATIO: f64 = 1e-12;

/// Eigenvalues of an exactly symmetric rational matrix, sorted descending.
///
/// Cyclic Jacobi with the usual small-rotation skip; converges when the
/// off-diagonal Frobenius norm drops below `1e-12` times the input norm.
pub fn symmetric_eigenvalues(m: &Matrix) -> Result<Vec<f64>> {
    let a = m.to_f64_symmetric()?;
    jacobi(a, m.rows())
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal_frobenius(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[p * n + q] * a[p * n + q];
            }
        }
    }
    s.sqrt()
}

fn jacobi(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Ok(vec![]);
    }
    let norm = frobenius(&a);
    if norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let target = OFF_DIAGONAL_RATIO * norm;
    for sweep in 1..=MAX_SWEEPS {
        if off_diagonal_frobenius(&a, n) <= target {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            eigs.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
            return Ok(eigs);
        }
        // Sum of off-diagonal magnitudes drives the early-sweep threshold.
        let mut sm = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                sm += a[p * n + q].abs();
            }
        }
        let tresh = if sweep < 4 {
            0.2 * sm / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // Tiny off-diagonal entries are flushed once the process has
                // settled; rotating on them only churns roundoff.
                if sweep > 4
                    && a[p * n + p].abs() + g == a[p * n + p].abs()
                    && a[q * n + q].abs() + g == a[q * n + q].abs()
                {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                if apq.abs() <= tresh {
                    continue;
                }
                let h = a[q * n + q] - a[p * n + p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let hpq = t * apq;
                a[p * n + p] -= hpq;
                a[q * n + q] += hpq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let grp = a[r * n + p];
                    let grq = a[r * n + q];
                    let new_rp = grp - s * (grq + grp * tau);
                    let new_rq = grq + s * (grp - grq * tau);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

/// Spectra of the distance matrix and the Laplacian of one even wheel,
/// plus the transformed chain used by the interlacing statement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    /// Eigenvalues of the distance matrix, descending.
    pub mu: Vec<f64>,
    /// Eigenvalues of the Laplacian, descending.
    pub lambda: Vec<f64>,
    /// `-2 / lambda_k` for the `n - 1` positive Laplacian eigenvalues.
    pub neg_two_over_lambda: Vec<f64>,
    /// Relative zero tolerance the report was produced with.
    pub tol: f64,
}

pub fn spectrum_report(n: usize, tol: f64) -> Result<SpectrumReport> {
    let d = distance_matrix(n)?;
    let l = special_laplacian(n)?;
    let mu = symmetric_eigenvalues(&d)?;
    let lambda = symmetric_eigenvalues(&l)?;
    let neg_two_over_lambda = lambda[..n - 1].iter().map(|&x| -2.0 / x).collect();
    Ok(SpectrumReport {
        n,
        mu,
        lambda,
        neg_two_over_lambda,
        tol,
    })
}

fn spectral_scale(eigs: &[f64]) -> f64 {
    eigs.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1e-300)
}

fn psd_verdict(n: usize, lambda: &[f64], zero_tol: f64) -> TheoremCheck {
    let name = "psd";
    let tol = zero_tol * spectral_scale(lambda);
    let negative = lambda.iter().any(|&x| x < -tol);
    let zeros = lambda.iter().filter(|&&x| x.abs() <= tol).count();
    if !negative && zeros == 1 {
        TheoremCheck::pass(name, n)
    } else {
        TheoremCheck::fail(name, n, Witness::from_floats(lambda))
    }
}

fn inertia_verdict(n: usize, mu: &[f64], zero_tol: f64) -> TheoremCheck {
    let name = "d_inertia";
    let tol = zero_tol * spectral_scale(mu);
    let pos = mu.iter().filter(|&&x| x > tol).count();
    let neg = mu.iter().filter(|&&x| x < -tol).count();
    let zero = mu.len() - pos - neg;
    if pos == 1 && zero == 0 && neg == n - 1 {
        TheoremCheck::pass(name, n)
    } else {
        TheoremCheck::fail(name, n, Witness::from_floats(mu))
    }
}

fn interlacing_verdict(n: usize, mu: &[f64], lambda: &[f64], slack_rel: f64) -> TheoremCheck {
    let name = "interlacing";
    // All transformed entries need strictly positive lambda values.
    if lambda[n - 2] <= 0.0 {
        return TheoremCheck::fail(name, n, Witness::from_floats(lambda));
    }
    let slack = slack_rel * (mu[n - 1].abs()).max(2.0 / lambda[n - 2]);
    let mut chain = Vec::with_capacity(2 * n - 2);
    for k in 0..n - 1 {
        chain.push(-2.0 / lambda[k]);
        chain.push(mu[k + 1]);
    }
    let ordered = chain.windows(2).all(|w| w[1] <= w[0] + slack);
    // The leading entry is the only strict comparison: it must clear zero
    // by more than the slack itself.
    if chain[0] < -slack && ordered {
        TheoremCheck::pass(name, n)
    } else {
        TheoremCheck::fail(name, n, Witness::from_floats(&chain))
    }
}

fn edm_verdict(n: usize, pdp_eigs: &[f64], zero_tol: f64) -> TheoremCheck {
    let name = "edm_predicate";
    let tol = zero_tol * spectral_scale(pdp_eigs);
    if pdp_eigs.iter().all(|&x| x <= tol) {
        TheoremCheck::pass(name, n)
    } else {
        TheoremCheck::fail(name, n, Witness::from_floats(pdp_eigs))
    }
}

fn trace_verdict(n: usize, pairs: &[(&[f64], f64)], rel_tol: f64) -> TheoremCheck {
    let name = "trace_consistency";
    let mut bad: Vec<f64> = Vec::new();
    for (eigs, exact) in pairs {
        let sum: f64 = eigs.iter().sum();
        let mass: f64 = eigs.iter().map(|x| x.abs()).sum::<f64>().max(1.0);
        if (sum - exact).abs() > rel_tol * mass {
            bad.push(sum);
            bad.push(*exact);
        }
    }
    if bad.is_empty() {
        TheoremCheck::pass(name, n)
    } else {
        TheoremCheck::fail(name, n, Witness::from_floats(&bad))
    }
}

/// Centered distance matrix `P D P` with `P = I - J/n`, computed exactly.
pub fn centered_distance(d: &Matrix) -> Matrix {
    let n = d.rows();
    let p = Matrix::identity(n).sub(&Matrix::ones(n, n).scale(&rat(1, n as i64)));
    p.mul(d).mul(&p)
}

/// All spectra of one even wheel, computed once so the individual verdicts
/// can share them.
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    pub n: usize,
    pub mu: Vec<f64>,
    pub lambda: Vec<f64>,
    pub pdp_eigs: Vec<f64>,
    pub d_trace: f64,
    pub l_trace: f64,
}

impl SpectralSummary {
    pub fn compute(n: usize) -> Result<Self> {
        let d = distance_matrix(n)?;
        let l = special_laplacian(n)?;
        SpectralSummary::from_matrices(n, &d, &l)
    }

    pub fn from_matrices(n: usize, d: &Matrix, l: &Matrix) -> Result<Self> {
        let mu = symmetric_eigenvalues(d)?;
        let lambda = symmetric_eigenvalues(l)?;
        let pdp_eigs = symmetric_eigenvalues(&centered_distance(d))?;
        Ok(SpectralSummary {
            n,
            mu,
            lambda,
            pdp_eigs,
            d_trace: to_f64(&d.trace()),
            l_trace: to_f64(&l.trace()),
        })
    }

    pub fn check_psd(&self, zero_tol: f64) -> TheoremCheck {
        psd_verdict(self.n, &self.lambda, zero_tol)
    }

    pub fn check_d_inertia(&self, zero_tol: f64) -> TheoremCheck {
        inertia_verdict(self.n, &self.mu, zero_tol)
    }

    pub fn check_interlacing(&self, slack_rel: f64) -> TheoremCheck {
        interlacing_verdict(self.n, &self.mu, &self.lambda, slack_rel)
    }

    pub fn check_edm_predicate(&self, zero_tol: f64) -> TheoremCheck {
        edm_verdict(self.n, &self.pdp_eigs, zero_tol)
    }

    pub fn check_trace_consistency(&self, rel_tol: f64) -> TheoremCheck {
        trace_verdict(
            self.n,
            &[(&self.mu, self.d_trace), (&self.lambda, self.l_trace)],
            rel_tol,
        )
    }
}

/// The Laplacian is positive semidefinite with a one-dimensional kernel:
/// no eigenvalue below `-tol` and exactly one inside `[-tol, tol]`.
pub fn check_psd_with(n: usize, zero_tol: f64) -> Result<TheoremCheck> {
    let l = special_laplacian(n)?;
    Ok(psd_verdict(n, &symmetric_eigenvalues(&l)?, zero_tol))
}

pub fn check_psd(n: usize) -> Result<TheoremCheck> {
    check_psd_with(n, DEFAULT_ZERO_TOL)
}

/// Inertia of the wheel distance matrix: one positive eigenvalue, none
/// zero, `n - 1` negative. Odd sizes run too and simply fail the predicate
/// (their distance matrix is singular).
pub fn check_d_inertia_with(n: usize, zero_tol: f64) -> Result<TheoremCheck> {
    let d = distance_matrix(n)?;
    Ok(inertia_verdict(n, &symmetric_eigenvalues(&d)?, zero_tol))
}

pub fn check_d_inertia(n: usize) -> Result<TheoremCheck> {
    check_d_inertia_with(n, DEFAULT_ZERO_TOL)
}

/// Interlacing of the distance spectrum with the transformed Laplacian
/// spectrum:
/// `0 > -2/lambda_1 >= mu_2 >= -2/lambda_2 >= ... >= -2/lambda_{n-1} >= mu_n`,
/// allowing `slack` (relative) on each comparison so exact ties pass.
pub fn check_interlacing_with(n: usize, slack_rel: f64) -> Result<TheoremCheck> {
    let d = distance_matrix(n)?;
    let l = special_laplacian(n)?;
    let mu = symmetric_eigenvalues(&d)?;
    let lambda = symmetric_eigenvalues(&l)?;
    Ok(interlacing_verdict(n, &mu, &lambda, slack_rel))
}

pub fn check_interlacing(n: usize) -> Result<TheoremCheck> {
    check_interlacing_with(n, DEFAULT_INTERLACING_SLACK)
}

/// Euclidean-distance-matrix predicate: `P D P` is negative semidefinite
/// for the centering projector `P = I - J/n`.
pub fn check_edm_predicate_with(n: usize, zero_tol: f64) -> Result<TheoremCheck> {
    let d = distance_matrix(n)?;
    let eigs = symmetric_eigenvalues(&centered_distance(&d))?;
    Ok(edm_verdict(n, &eigs, zero_tol))
}

pub fn check_edm_predicate(n: usize) -> Result<TheoremCheck> {
    check_edm_predicate_with(n, DEFAULT_ZERO_TOL)
}

/// Eigenvalue sums reproduce the exact traces of both matrices, relative to
/// the total eigenvalue mass.
pub fn check_trace_consistency_with(n: usize, rel_tol: f64) -> Result<TheoremCheck> {
    let d = distance_matrix(n)?;
    let l = special_laplacian(n)?;
    let mu = symmetric_eigenvalues(&d)?;
    let lambda = symmetric_eigenvalues(&l)?;
    Ok(trace_verdict(
        n,
        &[
            (&mu, to_f64(&d.trace())),
            (&lambda, to_f64(&l.trace())),
        ],
        rel_tol,
    ))
}

pub fn check_trace_consistency(n: usize) -> Result<TheoremCheck> {
    check_trace_consistency_with(n, DEFAULT_ZERO_TOL)
}
