//! Independent-route oracles for the wheel lemmas at moderate sizes.
//! The full-range sweeps live in the acceptance suite; these keep the
//! library honest on every ordinary test run.

use wheeldist::circulant::{circulant, CirculantSpec};
use wheeldist::matrix::{has_tail_symmetry, Matrix, Vector};
use wheeldist::rational::{rat, rint, to_f64, Rational};
use wheeldist::spectra::centered_distance;
use wheeldist::theorems::{self, WheelSystem};
use wheeldist::wheel::{
    alternating_sum_identity, bfs_distances, build_wheel, c_vector, distance_matrix, f_vector,
    f_vector_by_summation, ones_vector, q_row_closed_form, w_vector,
};
use wheeldist::{
    determinant, gauss_jordan_inverse, rank, special_laplacian, symmetric_eigenvalues, Error,
};

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

#[test]
fn closed_form_distances_equal_bfs_for_both_parities() {
    for n in 4..=200 {
        let model = build_wheel(n).unwrap();
        assert_eq!(bfs_distances(&model).unwrap(), distance_matrix(n).unwrap());
    }
}

#[test]
fn rim_row_sums_are_constant() {
    for n in (4..=60).step_by(2) {
        let rim = rim_block(&distance_matrix(n).unwrap());
        let expect = rint(2 * (n as i64 - 3));
        for s in rim.row_sums().iter() {
            assert_eq!(s, &expect, "n = {n}");
        }
    }
}

#[test]
fn selector_rows_have_two_ones() {
    for n in (4..=40).step_by(2) {
        for k in 1..=n / 2 - 1 {
            let c = c_vector(n, k).unwrap();
            assert_eq!(c.sum(), rint(2));
            assert!(c.iter().all(|x| x == &rint(0) || x == &rint(1)));
        }
    }
}

#[test]
fn q_rows_closed_form_equals_product_route() {
    for n in (4..=48).step_by(2) {
        let rim = rim_block(&distance_matrix(n).unwrap());
        for k in 1..=n / 2 - 1 {
            let closed = q_row_closed_form(n, k).unwrap();
            let product = rim.vec_mul(&c_vector(n, k).unwrap());
            assert_eq!(closed, product, "n = {n}, k = {k}");
            assert!(has_tail_symmetry(&closed), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn f_vector_closed_form_equals_product_route() {
    for n in (4..=48).step_by(2) {
        let rim = rim_block(&distance_matrix(n).unwrap());
        let mut acc = Vector::zeros(n - 1);
        for k in 1..=n / 2 - 1 {
            let q = rim.vec_mul(&c_vector(n, k).unwrap());
            let sign = if k % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&q.scale(&rat(sign * (n as i64 - 1 - 2 * k as i64), 2)));
        }
        assert_eq!(f_vector(n).unwrap(), acc, "n = {n}");
        assert_eq!(f_vector_by_summation(n).unwrap(), acc, "n = {n}");
    }
}

#[test]
fn alternating_sum_closed_form() {
    for n in (4..=120).step_by(2) {
        let (lhs, rhs) = alternating_sum_identity(n);
        assert_eq!(lhs, rhs, "n = {n}");
        assert_eq!(rhs, rat(2 - n as i64, 2));
    }
}

#[test]
fn identity_checks_hold_through_n_forty() {
    for n in (4..=40).step_by(2) {
        let sys = WheelSystem::new(n).unwrap();
        assert!(sys.check_inverse_product().passed, "n = {n}");
        assert!(sys.check_ld_identity().passed, "n = {n}");
        assert!(sys.check_dw_identity().passed, "n = {n}");
        assert!(theorems::check_alternating_sum(n).unwrap().passed);
    }
}

#[test]
fn inverse_row_sums_match_rank_one_factor() {
    for n in (4..=24).step_by(2) {
        let sys = WheelSystem::new(n).unwrap();
        let total = sys.closed_form_inverse().total;
        let sums = total.vec_mul(&ones_vector(n));
        assert_eq!(sums, w_vector(n).scale(&rat(4, n as i64 - 1)), "n = {n}");
    }
}

#[test]
fn determinants_by_parity_small_range() {
    for n in 4..=21 {
        let d = distance_matrix(n).unwrap();
        let det = determinant(&d);
        if n % 2 == 0 {
            assert_eq!(det, rint(1 - n as i64), "n = {n}");
            assert!(gauss_jordan_inverse(&d).is_ok());
        } else {
            assert_eq!(det, rint(0), "n = {n}");
            assert_eq!(gauss_jordan_inverse(&d), Err(Error::Singular));
        }
    }
}

#[test]
fn pseudo_inverse_kernel_and_symmetry() {
    for n in (4..=24).step_by(2) {
        let sys = WheelSystem::new(n).unwrap();
        let g = sys.pseudo_inverse();
        assert!(g.is_symmetric());
        // The centering projector keeps the all-ones direction in the kernel.
        assert!(g.mul_vec(&ones_vector(n)).is_zero(), "n = {n}");
        assert!(sys.check_moore_penrose().passed, "n = {n}");
        assert!(sys.check_edm_decomposition().passed, "n = {n}");
    }
}

#[test]
fn laplacian_rank_kernel_and_cofactors() {
    for n in (4..=20).step_by(2) {
        let sys = WheelSystem::new(n).unwrap();
        assert!(sys.check_rank_and_kernel().passed, "n = {n}");
        assert!(sys.check_cofactor_theorem().passed, "n = {n}");
    }
}

#[test]
fn every_single_entry_distance_corruption_is_caught() {
    // Exhaustive single-entry mutation control at n = 6: each bump must trip
    // at least the product identity, and symmetric bumps trip `D w`.
    let base = WheelSystem::new(6).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            let mut sys = base.clone();
            let bumped = sys.distance.get(i, j) + rint(1);
            sys.distance.set(i, j, bumped);
            assert!(
                !sys.check_ld_identity().passed,
                "corruption at ({i}, {j}) slipped through"
            );
            assert!(!sys.check_dw_identity().passed || !sys.check_inverse_product().passed);
        }
    }
}

#[test]
fn every_single_entry_laplacian_corruption_is_caught() {
    let base = WheelSystem::new(6).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            let mut sys = base.clone();
            let bumped = sys.laplacian.get(i, j) + rat(1, 2);
            sys.laplacian.set(i, j, bumped);
            let ld = sys.check_ld_identity();
            let rank = sys.check_rank_and_kernel();
            assert!(
                !ld.passed && !rank.passed,
                "corruption at ({i}, {j}) slipped through"
            );
            assert!(ld.witness.is_some());
        }
    }
}

#[test]
fn fractional_corruptions_are_caught_too() {
    let base = WheelSystem::new(10).unwrap();
    let deltas = [rat(1, 3), rat(-1, 7), rat(1, 1000)];
    for (idx, delta) in deltas.iter().enumerate() {
        let mut sys = base.clone();
        let i = idx + 1;
        let bumped = sys.distance.get(i, 2) + delta;
        sys.distance.set(i, 2, bumped);
        assert!(!sys.check_inverse_product().passed);
        let mut sys = base.clone();
        let bumped = sys.laplacian.get(0, idx) + delta;
        sys.laplacian.set(0, idx, bumped);
        assert!(!sys.check_ld_identity().passed);
    }
}

#[test]
fn dw_scalar_value() {
    for n in (4..=20).step_by(2) {
        let sys = WheelSystem::new(n).unwrap();
        let dw = sys.distance.mul_vec(&sys.w);
        let expect: Rational = rat(n as i64 - 1, 4);
        for x in dw.iter() {
            assert_eq!(x, &expect, "n = {n}");
        }
    }
}

#[test]
fn rank_one_factor_has_rank_one_and_unit_mass() {
    for n in (4..=20).step_by(2) {
        let w = w_vector(n);
        assert_eq!(w.sum(), rint(1), "n = {n}");
        assert_eq!(rank(&Matrix::outer(&w, &w)), 1, "n = {n}");
    }
}

fn product_of_largest(eigs: &[f64], count: usize) -> f64 {
    let mut mags: Vec<f64> = eigs.iter().map(|x| x.abs()).collect();
    mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
    mags.iter().take(count).product()
}

#[test]
fn eigenvalue_products_match_exact_determinants() {
    // Product-vs-determinant consistency for both matrices. The scale drops
    // the smallest magnitude so a genuinely zero eigenvalue is not compared
    // relative to itself.
    for n in (4..=64).step_by(2) {
        let d = distance_matrix(n).unwrap();
        let mu = symmetric_eigenvalues(&d).unwrap();
        let prod: f64 = mu.iter().product();
        let exact = to_f64(&determinant(&d));
        let scale = product_of_largest(&mu, n - 1).max(1.0);
        assert!((prod - exact).abs() <= 1e-6 * scale, "D at n = {n}");

        let l = special_laplacian(n).unwrap();
        let lambda = symmetric_eigenvalues(&l).unwrap();
        let prod: f64 = lambda.iter().product();
        let scale = product_of_largest(&lambda, n - 1).max(1.0);
        assert!(prod.abs() <= 1e-6 * scale, "L at n = {n}");
    }
}

#[test]
fn pseudo_inverse_spectrum_is_reciprocal_of_laplacian() {
    for n in (4..=48).step_by(2) {
        let sys = WheelSystem::new(n).unwrap();
        let got = symmetric_eigenvalues(&sys.pseudo_inverse()).unwrap();
        let lambda = symmetric_eigenvalues(&sys.laplacian).unwrap();
        let radius = lambda[0];
        let mut expect: Vec<f64> = lambda
            .iter()
            .filter(|&&x| x > 1e-9 * radius)
            .map(|x| 1.0 / x)
            .collect();
        expect.push(0.0);
        expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_eq!(expect.len(), n, "kernel dimension at n = {n}");
        let scale = expect[0].max(1.0);
        for (g, e) in got.iter().zip(&expect) {
            assert!((g - e).abs() <= 1e-8 * scale, "n = {n}: {g} vs {e}");
        }
    }
}

#[test]
fn non_wheel_control_is_recorded_not_asserted() {
    // The centered-spectrum machinery accepts any symmetric hollow matrix;
    // feed it the plain 6-cycle's distances and record the verdict without
    // asserting it either way.
    let spec = CirculantSpec::new(Vector::from_ints(&[0, 1, 2, 3, 2, 1])).unwrap();
    let cycle = circulant(&spec);
    let eigs = symmetric_eigenvalues(&centered_distance(&cycle)).unwrap();
    assert_eq!(eigs.len(), 6);
    let tol = 1e-9 * eigs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let nsd = eigs.iter().all(|&x| x <= tol);
    println!("6-cycle centered distance spectrum {eigs:?} is NSD: {nsd}");
}
