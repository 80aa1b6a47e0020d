//! Frozen end-to-end values for the six-vertex wheel: distance matrix,
//! special Laplacian and closed-form inverse, all exact.

use wheeldist::rational::rat;
use wheeldist::theorems::WheelSystem;
use wheeldist::wheel::{bfs_distances, build_wheel};
use wheeldist::{determinant, gauss_jordan_inverse, rint, Matrix};

fn golden_distance() -> Matrix {
    Matrix::from_ints(&[
        &[0, 1, 1, 1, 1, 1],
        &[1, 0, 1, 2, 2, 1],
        &[1, 1, 0, 1, 2, 2],
        &[1, 2, 1, 0, 1, 2],
        &[1, 2, 2, 1, 0, 1],
        &[1, 1, 2, 2, 1, 0],
    ])
}

fn golden_laplacian() -> Matrix {
    Matrix::from_ints(&[
        &[5, -1, -1, -1, -1, -1],
        &[-1, 5, -3, 1, 1, -3],
        &[-1, -3, 5, -3, 1, 1],
        &[-1, 1, -3, 5, -3, 1],
        &[-1, 1, 1, -3, 5, -3],
        &[-1, -3, 1, 1, -3, 5],
    ])
    .scale(&rat(1, 2))
}

fn golden_inverse() -> Matrix {
    Matrix::from_ints(&[
        &[-6, 1, 1, 1, 1, 1],
        &[1, -6, 4, -1, -1, 4],
        &[1, 4, -6, 4, -1, -1],
        &[1, -1, 4, -6, 4, -1],
        &[1, -1, -1, 4, -6, 4],
        &[1, 4, -1, -1, 4, -6],
    ])
    .scale(&rat(1, 5))
}

#[test]
fn distance_matrix_matches_golden() {
    let sys = WheelSystem::new(6).unwrap();
    assert_eq!(sys.distance, golden_distance());
    // BFS over the adjacency structure agrees with the closed form.
    let bfs = bfs_distances(&build_wheel(6).unwrap()).unwrap();
    assert_eq!(bfs, golden_distance());
}

#[test]
fn laplacian_matches_golden() {
    let sys = WheelSystem::new(6).unwrap();
    assert_eq!(sys.laplacian, golden_laplacian());
}

#[test]
fn closed_form_inverse_matches_golden() {
    let sys = WheelSystem::new(6).unwrap();
    let inv = sys.closed_form_inverse();
    assert_eq!(inv.total, golden_inverse());
    assert_eq!(inv.total, inv.laplacian_part.add(&inv.rank_one_part));
    // Both inversion routes land on the same matrix.
    assert_eq!(gauss_jordan_inverse(&sys.distance).unwrap(), golden_inverse());
    assert_eq!(golden_inverse().mul(&golden_distance()), Matrix::identity(6));
}

#[test]
fn golden_determinant() {
    assert_eq!(determinant(&golden_distance()), rint(-5));
    assert_eq!(determinant(&golden_laplacian()), rint(0));
}
