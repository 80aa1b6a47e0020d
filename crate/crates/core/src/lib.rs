//! Exact verification toolkit for wheel-graph distance matrices.
//!
//! The distance matrix `D` of a wheel on an even number of vertices is
//! invertible, and its inverse splits into a signed circulant-sum Laplacian
//! plus a rank-one term. This crate builds all of those objects in exact
//! rational arithmetic and machine-checks the identities that make the
//! closed form work, at any size:
//!
//! * [`wheel`] constructs the graph, its distance matrix (closed form and
//!   BFS), the special Laplacian and the small lemma vectors.
//! * [`theorems`] verifies the inverse formula, the defining identities
//!   `L D + 2I = 2 w 1'` and `D w = ((n-1)/4) 1`, rank and kernel facts,
//!   the Moore-Penrose pseudoinverse and the cofactor and determinant
//!   formulas. Failures carry serializable witnesses.
//! * [`spectra`] is the floating-point lane: Jacobi eigenvalues, positive
//!   semidefiniteness, inertia, interlacing, and the Euclidean-distance
//!   predicate, with documented tolerances.
//! * [`matrix`], [`circulant`] and [`elimination`] supply the exact dense
//!   linear algebra everything else stands on.
//! * [`encode`] fixes the JSON/CSV interchange formats.

pub mod circulant;
pub mod elimination;
pub mod encode;
pub mod error;
pub mod matrix;
pub mod rational;
pub mod spectra;
pub mod theorems;
pub mod wheel;

pub use circulant::{circ_mul, circulant, shift, CirculantSpec};
pub use elimination::{adjugate, cofactor, determinant, gauss_jordan_inverse, rank};
pub use error::{Error, Result};
pub use matrix::{has_tail_symmetry, Matrix, Vector};
pub use rational::{parse_rational, rat, render_rational, rint, Rational};
pub use spectra::{
    centered_distance, spectrum_report, symmetric_eigenvalues, SpectralSummary, SpectrumReport,
};
pub use theorems::{InverseDecomposition, TheoremCheck, WheelSystem, Witness};
pub use wheel::{
    build_wheel, distance_matrix, special_laplacian, DistanceMatrix, SpecialLaplacian, WheelModel,
};
