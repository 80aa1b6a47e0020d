//! Wheel graphs and the exact objects attached to them.
//!
//! The wheel on `n` vertices has hub vertex 1 joined to every vertex of the
//! rim cycle `2, 3, ..., n, 2`. Its distance matrix splits into a hub
//! row/column of ones and a rim block that is the circulant generated by
//! `(0, 1, 2, ..., 2, 1)`: rim vertices are at cycle distance capped at 2
//! because any two of them meet through the hub.
//!
//! For even `n` the rim block admits an alternating decomposition into
//! two-entry circulants `C_k`, which is what the special Laplacian below is
//! built from. That matrix is the certificate object for the closed-form
//! inverse of the distance matrix checked in [`crate::theorems`].

use num_traits::Zero;

use crate::circulant::{circulant, CirculantSpec};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::rational::{rat, rint, Rational};

/// Wheel graph with 1-based vertex labels; vertex 1 is the hub.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelModel {
    pub n: usize,
    pub adjacency: Matrix,
    /// Sorted `(i, j)` pairs with `i < j`, 1-based.
    pub edges: Vec<(usize, usize)>,
}

/// Distance matrix of a wheel; plain dense rational matrix.
pub type DistanceMatrix = Matrix;

/// The signed circulant-sum Laplacian attached to an even wheel.
pub type SpecialLaplacian = Matrix;

fn require_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::TooSmall(n));
    }
    Ok(())
}

fn require_even(n: usize) -> Result<()> {
    require_n(n)?;
    if n % 2 != 0 {
        return Err(Error::EvenRequired(n));
    }
    Ok(())
}

/// Builds the wheel on `n >= 4` vertices.
pub fn build_wheel(n: usize) -> Result<WheelModel> {
    require_n(n)?;
    let m = n - 1;
    let mut adjacency = Matrix::zeros(n, n);
    let mut edges = Vec::with_capacity(2 * m);
    let mut connect = |a: usize, b: usize, adj: &mut Matrix| {
        adj.set(a - 1, b - 1, rint(1));
        adj.set(b - 1, a - 1, rint(1));
        edges.push((a.min(b), a.max(b)));
    };
    for v in 2..=n {
        connect(1, v, &mut adjacency);
    }
    for t in 0..m {
        let a = 2 + t;
        let b = 2 + (t + 1) % m;
        connect(a, b, &mut adjacency);
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(WheelModel { n, adjacency, edges })
}

/// All-pairs breadth-first distances over the adjacency matrix.
pub fn bfs_distances(model: &WheelModel) -> Result<Matrix> {
    let n = model.n;
    let neighbors: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| !model.adjacency.get(i, j).is_zero())
                .collect()
        })
        .collect();
    let mut out = Matrix::zeros(n, n);
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for src in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[src] = 0;
        queue.clear();
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &u in &neighbors[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        for (j, &d) in dist.iter().enumerate() {
            if d == usize::MAX {
                return Err(Error::Disconnected);
            }
            out.set(src, j, rint(d as i64));
        }
    }
    Ok(out)
}

/// Generator of the rim distance block: cycle distance capped at 2.
fn rim_distance_generator(n: usize) -> Vector {
    let m = n - 1;
    Vector::new(
        (0..m)
            .map(|t| rint(t.min(m - t).min(2) as i64))
            .collect(),
    )
}

/// Closed-form distance matrix of the wheel on `n >= 4` vertices:
/// hub border of ones around the circulant rim block.
pub fn distance_matrix(n: usize) -> Result<DistanceMatrix> {
    require_n(n)?;
    let rim = circulant(&CirculantSpec::new(rim_distance_generator(n))?);
    let mut d = Matrix::zeros(n, n);
    for j in 1..n {
        d.set(0, j, rint(1));
        d.set(j, 0, rint(1));
    }
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            d.set(i + 1, j + 1, rim.get(i, j).clone());
        }
    }
    Ok(d)
}

/// Selector vector with ones at rim positions `k + 1` and `n - k` (1-based),
/// i.e. the generator of the two-entry circulant `C_k`.
pub fn c_vector(n: usize, k: usize) -> Result<Vector> {
    require_even(n)?;
    let max = n / 2 - 1;
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max, n });
    }
    let mut v = Vector::zeros(n - 1);
    v.set(k, rint(1));
    v.set(n - 1 - k, rint(1));
    Ok(v)
}

/// Signed coefficient `(-1)^k (n - 1 - 2k)/2` in the alternating sum.
fn alternating_coefficient(n: usize, k: usize) -> Rational {
    let magnitude = rat(n as i64 - 1 - 2 * k as i64, 2);
    if k % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// The special Laplacian of the even wheel:
/// `(n-1)/2` on the diagonal, `-1/2` on the hub border, and the alternating
/// sum of two-entry circulants `C_k` on the rim block.
pub fn special_laplacian(n: usize) -> Result<SpecialLaplacian> {
    require_even(n)?;
    let m = n - 1;
    // Sum the alternating circulant series on generators, then materialize
    // one circulant; identical to summing dense C_k terms.
    let k_max = n / 2 - 1;
    #[cfg(feature = "fault-injection")]
    let k_max = k_max.saturating_sub(1);
    let mut generator = Vector::zeros(m);
    for k in 1..=k_max {
        let coef = alternating_coefficient(n, k);
        generator.set(k, generator.get(k) + &coef);
        generator.set(m - k, generator.get(m - k) + &coef);
    }
    let rim = circulant(&CirculantSpec::new(generator)?);
    let half = rat(1, 2);
    let diag = rat(m as i64, 2);
    let mut l = Matrix::zeros(n, n);
    l.set(0, 0, diag.clone());
    for j in 1..n {
        l.set(0, j, -half.clone());
        l.set(j, 0, -half.clone());
    }
    for i in 0..m {
        for j in 0..m {
            let v = if i == j {
                rim.get(i, j) + &diag
            } else {
                rim.get(i, j).clone()
            };
            l.set(i + 1, j + 1, v);
        }
    }
    Ok(l)
}

/// Both sides of the coefficient identity
/// `sum_{k=1}^{n/2-1} (-1)^k (n - 1 - 2k) = (2 - n)/2`.
pub fn alternating_sum_identity(n: usize) -> (Rational, Rational) {
    assert!(n >= 4 && n % 2 == 0, "even n >= 4 required");
    let mut lhs = Rational::zero();
    for k in 1..=n / 2 - 1 {
        let term = rint(n as i64 - 1 - 2 * k as i64);
        if k % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = rat(2 - n as i64, 2);
    (lhs, rhs)
}

/// Closed form of the row-selection product `c_k' D_rim` without computing
/// the product: each selected rim row contributes its distance profile
/// (0 at itself, 1 at cycle neighbors, 2 elsewhere), and the two profiles
/// add entrywise. Wrap-around overlaps (small `n`, or `k = 1` where the
/// selected rows are cycle neighbors of each other) fall out naturally.
pub fn q_row_closed_form(n: usize, k: usize) -> Result<Vector> {
    require_even(n)?;
    let max = n / 2 - 1;
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max, n });
    }
    let m = n - 1;
    let profile = |row: usize, j: usize| -> i64 {
        // 1-based positions on the rim cycle of length m.
        let diff = (j + m - row) % m;
        match diff {
            0 => 0,
            1 => 1,
            d if d == m - 1 => 1,
            _ => 2,
        }
    };
    let (a, b) = (k + 1, n - k);
    Ok(Vector::new(
        (1..=m)
            .map(|j| rint(profile(a, j) + profile(b, j)))
            .collect(),
    ))
}

/// Closed form of the alternating combination
/// `f = sum_k (-1)^k ((n - 1 - 2k)/2) q_k`:
/// `(-1, (3-n)/2, 2-n, ..., 2-n, (3-n)/2)` for `n >= 6`. At `n = 4` the
/// middle run is empty and the shoulders merge, so the sum is evaluated
/// directly there.
pub fn f_vector(n: usize) -> Result<Vector> {
    require_even(n)?;
    if n == 4 {
        return f_vector_by_summation(n);
    }
    let m = n - 1;
    let shoulder = rat(3 - n as i64, 2);
    let mut v = Vector::zeros(m);
    v.set(0, rint(-1));
    v.set(1, shoulder.clone());
    v.set(m - 1, shoulder);
    for j in 2..m - 1 {
        v.set(j, rint(2 - n as i64));
    }
    Ok(v)
}

/// Direct evaluation of the alternating combination from the closed-form
/// q-rows; the product-based variant lives in the test oracles.
pub fn f_vector_by_summation(n: usize) -> Result<Vector> {
    require_even(n)?;
    let mut acc = Vector::zeros(n - 1);
    for k in 1..=n / 2 - 1 {
        let term = q_row_closed_form(n, k)?.scale(&alternating_coefficient(n, k));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The rank-one factor `w = (5 - n, 1, ..., 1)' / 4`; satisfies `1'w = 1`.
pub fn w_vector(n: usize) -> Vector {
    assert!(n >= 4 && n % 2 == 0, "even n >= 4 required");
    let mut v = Vector::new(vec![rat(1, 4); n]);
    v.set(0, rat(5 - n as i64, 4));
    v
}

/// Hub-extended all-ones vector paired with `w` in the rank-one term.
pub fn ones_vector(n: usize) -> Vector {
    Vector::ones(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::has_tail_symmetry;

    #[test]
    fn wheel_has_hub_and_rim_degrees() {
        for n in [4, 5, 6, 9, 12] {
            let w = build_wheel(n).unwrap();
            assert_eq!(w.edges.len(), 2 * (n - 1));
            let degrees = w.adjacency.row_sums();
            assert_eq!(degrees.get(0), &rint(n as i64 - 1));
            for v in 1..n {
                assert_eq!(degrees.get(v), &rint(3), "rim degree at n = {n}");
            }
        }
        assert_eq!(build_wheel(3), Err(Error::TooSmall(3)));
    }

    #[test]
    fn smallest_wheel_is_complete() {
        let w = build_wheel(4).unwrap();
        let d = bfs_distances(&w).unwrap();
        let j_minus_i = Matrix::ones(4, 4).sub(&Matrix::identity(4));
        assert_eq!(d, j_minus_i);
        assert_eq!(distance_matrix(4).unwrap(), j_minus_i);
    }

    #[test]
    fn closed_form_distances_match_bfs() {
        for n in 4..=13 {
            let w = build_wheel(n).unwrap();
            assert_eq!(
                distance_matrix(n).unwrap(),
                bfs_distances(&w).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn rim_block_is_the_expected_circulant() {
        let d = distance_matrix(6).unwrap();
        let expect = Matrix::from_ints(&[
            &[0, 1, 1, 1, 1, 1],
            &[1, 0, 1, 2, 2, 1],
            &[1, 1, 0, 1, 2, 2],
            &[1, 2, 1, 0, 1, 2],
            &[1, 2, 2, 1, 0, 1],
            &[1, 1, 2, 2, 1, 0],
        ]);
        assert_eq!(d, expect);
        // Rim row sums are constant: 2(n - 3).
        for n in [4usize, 6, 8, 14] {
            let d = distance_matrix(n).unwrap();
            for i in 1..n {
                let s: Rational = d.row(i)[1..].iter().sum();
                assert_eq!(s, rint(2 * (n as i64 - 3)));
            }
        }
    }

    #[test]
    fn selector_vectors() {
        assert_eq!(c_vector(6, 1).unwrap(), Vector::from_ints(&[0, 1, 0, 0, 1]));
        assert_eq!(c_vector(6, 2).unwrap(), Vector::from_ints(&[0, 0, 1, 1, 0]));
        assert_eq!(c_vector(4, 1).unwrap(), Vector::from_ints(&[0, 1, 1]));
        assert!(matches!(c_vector(6, 3), Err(Error::KOutOfRange { .. })));
        assert!(matches!(c_vector(6, 0), Err(Error::KOutOfRange { .. })));
        assert_eq!(c_vector(7, 1), Err(Error::EvenRequired(7)));
        for k in 1..=5 {
            let c = c_vector(12, k).unwrap();
            assert_eq!(c.sum(), rint(2));
            assert!(has_tail_symmetry(&c));
        }
    }

    #[cfg(not(feature = "fault-injection"))]
    #[test]
    fn laplacian_matches_dense_circulant_sum() {
        // Rebuild from dense C_k terms and compare with the generator route.
        for n in [4usize, 6, 8, 10, 14] {
            let mut expect = Matrix::zeros(n, n);
            expect.set(0, 0, rat(n as i64 - 1, 2));
            for j in 1..n {
                expect.set(0, j, rat(-1, 2));
                expect.set(j, 0, rat(-1, 2));
                expect.set(j, j, rat(n as i64 - 1, 2));
            }
            for k in 1..=n / 2 - 1 {
                let ck = circulant(&CirculantSpec::new(c_vector(n, k).unwrap()).unwrap());
                let coef = alternating_coefficient(n, k);
                for i in 0..n - 1 {
                    for j in 0..n - 1 {
                        let v = expect.get(i + 1, j + 1) + ck.get(i, j) * &coef;
                        expect.set(i + 1, j + 1, v);
                    }
                }
            }
            assert_eq!(special_laplacian(n).unwrap(), expect, "n = {n}");
        }
    }

    #[cfg(not(feature = "fault-injection"))]
    #[test]
    fn laplacian_golden_w6() {
        let twice: Matrix = special_laplacian(6).unwrap().scale(&rint(2));
        let expect = Matrix::from_ints(&[
            &[5, -1, -1, -1, -1, -1],
            &[-1, 5, -3, 1, 1, -3],
            &[-1, -3, 5, -3, 1, 1],
            &[-1, 1, -3, 5, -3, 1],
            &[-1, 1, 1, -3, 5, -3],
            &[-1, -3, 1, 1, -3, 5],
        ]);
        assert_eq!(twice, expect);
        assert_eq!(special_laplacian(5), Err(Error::EvenRequired(5)));
        assert_eq!(special_laplacian(2), Err(Error::TooSmall(2)));
    }

    #[cfg(not(feature = "fault-injection"))]
    #[test]
    fn laplacian_row_sums_vanish() {
        for n in [4usize, 6, 10, 16] {
            let l = special_laplacian(n).unwrap();
            assert!(l.row_sums().is_zero());
            assert!(l.col_sums().is_zero());
            assert!(l.is_symmetric());
        }
    }

    #[test]
    fn alternating_sum_examples() {
        for (n, v) in [(4, -1), (6, -2), (8, -3), (20, -9)] {
            let (lhs, rhs) = alternating_sum_identity(n);
            assert_eq!(lhs, rint(v));
            assert_eq!(rhs, rint(v));
        }
    }

    #[test]
    fn q_rows_small_cases() {
        assert_eq!(q_row_closed_form(4, 1).unwrap(), Vector::from_ints(&[2, 1, 1]));
        assert_eq!(
            q_row_closed_form(6, 1).unwrap(),
            Vector::from_ints(&[2, 2, 3, 3, 2])
        );
        assert_eq!(
            q_row_closed_form(6, 2).unwrap(),
            Vector::from_ints(&[4, 3, 1, 1, 3])
        );
        assert_eq!(
            q_row_closed_form(8, 1).unwrap(),
            Vector::from_ints(&[2, 2, 3, 4, 4, 3, 2])
        );
        assert_eq!(
            q_row_closed_form(8, 2).unwrap(),
            Vector::from_ints(&[4, 3, 2, 3, 3, 2, 3])
        );
        assert_eq!(
            q_row_closed_form(8, 3).unwrap(),
            Vector::from_ints(&[4, 4, 3, 1, 1, 3, 4])
        );
        assert_eq!(
            q_row_closed_form(10, 2).unwrap(),
            Vector::from_ints(&[4, 3, 2, 3, 4, 4, 3, 2, 3])
        );
        assert!(matches!(
            q_row_closed_form(8, 4),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn q_rows_match_selector_products() {
        for n in (4..=20).step_by(2) {
            let d = distance_matrix(n).unwrap();
            // Rim block only.
            let mut rim = Matrix::zeros(n - 1, n - 1);
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    rim.set(i, j, d.get(i + 1, j + 1).clone());
                }
            }
            for k in 1..=n / 2 - 1 {
                let q = q_row_closed_form(n, k).unwrap();
                let prod = rim.vec_mul(&c_vector(n, k).unwrap());
                assert_eq!(q, prod, "n = {n}, k = {k}");
                assert!(has_tail_symmetry(&q), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn f_vector_values_and_summation_agreement() {
        assert_eq!(
            f_vector(4).unwrap(),
            Vector::new(vec![rint(-1), rat(-1, 2), rat(-1, 2)])
        );
        assert_eq!(
            f_vector(6).unwrap(),
            Vector::new(vec![rint(-1), rat(-3, 2), rint(-4), rint(-4), rat(-3, 2)])
        );
        assert_eq!(
            f_vector(8).unwrap(),
            Vector::new(vec![
                rint(-1),
                rat(-5, 2),
                rint(-6),
                rint(-6),
                rint(-6),
                rint(-6),
                rat(-5, 2)
            ])
        );
        for n in (4..=30).step_by(2) {
            assert_eq!(f_vector(n).unwrap(), f_vector_by_summation(n).unwrap());
        }
        assert_eq!(f_vector(7), Err(Error::EvenRequired(7)));
    }

    #[test]
    fn w_vector_sums_to_one() {
        for n in (4..=20).step_by(2) {
            let w = w_vector(n);
            assert_eq!(w.sum(), rint(1));
            assert_eq!(w.get(0), &rat(5 - n as i64, 4));
            assert_eq!(w.get(1), &rat(1, 4));
        }
    }
}
