//! Small dense linear-algebra helpers on top of nalgebra, plus exact rational elimination.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
///
/// Cyclic Jacobi rotations; residuals stay near machine precision, which the
/// random splitting elements used for irreps rely on.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let n = m.nrows();
    let mut a = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let mut v = CMat::identity(n, n);
    let total: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if off <= 1e-32 * total || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= 1e-300 {
                    continue;
                }
                let phase = apq / r;
                let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // Columns: p' = c p - s e^{-iφ} q, q' = s p + c e^{-iφ} q.
                let cs = Complex64::new(c, 0.0);
                let ss = Complex64::new(s, 0.0);
                let ph = phase.conj();
                for k in 0..n {
                    let (xp, xq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = cs * xp - ss * ph * xq;
                    a[(k, q)] = ss * xp + cs * ph * xq;
                    let (yp, yq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = cs * yp - ss * ph * yq;
                    v[(k, q)] = ss * yp + cs * ph * yq;
                }
                for k in 0..n {
                    let (xp, xq) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = cs * xp - ss * phase * xq;
                    a[(q, k)] = ss * xp + cs * phase * xq;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vecs = CMat::zeros(n, n);
    for (j, &i) in order.iter().enumerate() {
        vecs.set_column(j, &v.column(i));
    }
    (values, vecs)
}

/// Groups ascending eigenvalues into clusters whose neighbours differ by at most `tol`.
/// Returns `(start, end)` index ranges.
pub fn eigen_clusters(values: &[f64], tol: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || (values[i] - values[i - 1]).abs() > tol {
            if i > start {
                out.push((start, i));
            }
            start = i;
        }
    }
    out
}

/// Smallest distance between neighbouring clusters, or infinity for fewer than two.
pub fn cluster_gap(values: &[f64], clusters: &[(usize, usize)]) -> f64 {
    clusters
        .windows(2)
        .map(|w| values[w[1].0] - values[w[0].1 - 1])
        .fold(f64::INFINITY, f64::min)
}

/// Modified Gram-Schmidt; vectors whose residual norm falls below `tol` are dropped.
pub fn orthonormalize(vectors: &[CVec], tol: f64) -> Vec<CVec> {
    let mut basis: Vec<CVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = b.dotc(&w);
                w -= b * c;
            }
        }
        let norm = w.norm();
        if norm > tol {
            basis.push(w / Complex64::new(norm, 0.0));
        }
    }
    basis
}

/// Null space of the linear map whose Gram matrix `A^* A` is `gram`.
/// Returns an orthonormal basis of the kernel (columns) and the smallest
/// retained nonzero eigenvalue, useful as a conditioning diagnostic.
pub fn kernel_from_gram(gram: &CMat, tol: f64) -> (Vec<CVec>, Option<f64>) {
    let (values, vecs) = hermitian_eigen(gram);
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut kernel = Vec::new();
    let mut gap = None;
    for (i, &v) in values.iter().enumerate() {
        if v <= tol * scale {
            kernel.push(vecs.column(i).into_owned());
        } else if gap.is_none() {
            gap = Some(v);
        }
    }
    (kernel, gap)
}

/// Complex matrix rank via the Gram matrix of the columns.
pub fn rank(m: &CMat, tol: f64) -> usize {
    let gram = m.adjoint() * m;
    let (kernel, _) = kernel_from_gram(&gram, tol);
    m.ncols() - kernel.len()
}

pub fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// Reduced row echelon form over the rationals; returns the rank.
pub fn rational_rank(rows: &mut [Vec<BigRational>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for c in col..ncols {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let sub = &f * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn eigen_sorted_and_clustered() {
        let m = CMat::from_diagonal(&CVec::from_vec(vec![
            Complex64::new(3.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ]));
        let (vals, _) = hermitian_eigen(&m);
        assert!((vals[0] - 1.0).abs() < 1e-12 && (vals[2] - 3.0).abs() < 1e-12);
        assert_eq!(eigen_clusters(&vals, 1e-8), vec![(0, 2), (2, 3)]);
    }

    #[test]
    fn eigen_residuals_near_machine_precision() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [1usize, 2, 7, 40] {
            let a = CMat::from_fn(n, n, |_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            let h = &a + a.adjoint();
            let (vals, vecs) = hermitian_eigen(&h);
            assert!(vals.windows(2).all(|w| w[0] <= w[1]));
            let d = CMat::from_diagonal(&CVec::from_iterator(n, vals.iter().map(|&v| Complex64::new(v, 0.0))));
            assert!(frobenius(&(&h * &vecs - &vecs * d)) < 1e-12 * n as f64);
            assert!(frobenius(&(vecs.adjoint() * &vecs - CMat::identity(n, n))) < 1e-12 * n as f64);
        }
    }

    #[test]
    fn rational_rank_of_dependent_rows() {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        let mut rows = vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(0), r(1), r(1)],
        ];
        assert_eq!(rational_rank(&mut rows), 2);
    }

    #[test]
    fn complex_rank_and_kernel() {
        let m = CMat::from_row_slice(2, 2, &[ONE, ONE, ONE, ONE]);
        assert_eq!(rank(&m, 1e-10), 1);
    }
}
