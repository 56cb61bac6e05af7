//! Dense and banded direct solvers sized for this problem: the 4x4
//! boundary system (with a condition estimate) and the narrow-band
//! matrices of the finite-difference oracle.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Row-major dense matrix view used by the small solver.
#[derive(Debug, Clone)]
pub struct DenseMatrix<T> {
    pub n: usize,
    pub data: Vec<T>, // n * n, row major
}

impl<T: Real> DenseMatrix<T> {
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            data.extend_from_slice(r);
        }
        Self { n, data }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    fn matvec(&self, x: &[T], out: &mut [T]) {
        for i in 0..self.n {
            let mut s = T::zero();
            for j in 0..self.n {
                s = s + self.at(i, j) * x[j];
            }
            out[i] = s;
        }
    }

    fn matvec_transposed(&self, x: &[T], out: &mut [T]) {
        for j in 0..self.n {
            out[j] = T::zero();
        }
        for i in 0..self.n {
            for j in 0..self.n {
                out[j] = out[j] + self.at(i, j) * x[i];
            }
        }
    }
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
/// `a` is consumed as scratch. Returns the solution.
pub fn solve_dense<T: Real>(mut a: DenseMatrix<T>, mut b: Vec<T>) -> Result<Vec<T>> {
    let n = a.n;
    for k in 0..n {
        let mut pivot_row = k;
        let mut pivot_mag = a.at(k, k).abs();
        for i in k + 1..n {
            if a.at(i, k).abs() > pivot_mag {
                pivot_mag = a.at(i, k).abs();
                pivot_row = i;
            }
        }
        if pivot_mag == T::zero() {
            return Err(Error::IllConditioned { estimate: f64::INFINITY });
        }
        if pivot_row != k {
            for j in 0..n {
                a.data.swap(k * n + j, pivot_row * n + j);
            }
            b.swap(k, pivot_row);
        }
        for i in k + 1..n {
            let factor = a.at(i, k) / a.at(k, k);
            if factor != T::zero() {
                for j in k..n {
                    let v = a.at(i, j) - factor * a.at(k, j);
                    a.data[i * n + j] = v;
                }
                b[i] = b[i] - factor * b[k];
            }
        }
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        for j in i + 1..n {
            s = s - a.at(i, j) * b[j];
        }
        b[i] = s / a.at(i, i);
    }
    Ok(b)
}

/// Estimates cond_2(A) = sigma_max(A) * sigma_max(A^-1) by one-sided
/// power iteration on A^T A and on solves with A. Adequate at size 4.
pub fn condition_estimate<T: Real>(a: &DenseMatrix<T>, iterations: usize) -> f64 {
    let n = a.n;
    let normalize = |v: &mut [T]| {
        let mut norm = T::zero();
        for x in v.iter() {
            norm = norm + *x * *x;
        }
        let norm = norm.sqrt();
        if norm > T::zero() {
            for x in v.iter_mut() {
                *x = *x / norm;
            }
        }
        norm
    };

    // sigma_max(A)
    let mut x: Vec<T> = (0..n)
        .map(|i| T::from_usize(i + 1).unwrap() / T::from_usize(n).unwrap())
        .collect();
    let mut y = vec![T::zero(); n];
    let mut sigma_max = T::zero();
    for _ in 0..iterations {
        a.matvec(&x, &mut y);
        a.matvec_transposed(&y, &mut x);
        let s = normalize(&mut x);
        sigma_max = s.sqrt();
    }

    // sigma_max(A^-1) via repeated solves; a singular factorization means
    // the estimate is unbounded.
    let mut x: Vec<T> = (0..n)
        .map(|i| T::from_usize(n - i).unwrap() / T::from_usize(n).unwrap())
        .collect();
    let mut sigma_inv = T::zero();
    for _ in 0..iterations {
        let y = match solve_dense(a.clone(), x.clone()) {
            Ok(v) => v,
            Err(_) => return f64::INFINITY,
        };
        // x <- A^-T y by solving A^T z = y
        let mut at = a.clone();
        for i in 0..n {
            for j in 0..i {
                at.data.swap(i * n + j, j * n + i);
            }
        }
        x = match solve_dense(at, y) {
            Ok(v) => v,
            Err(_) => return f64::INFINITY,
        };
        let s = normalize(&mut x);
        sigma_inv = s.sqrt();
    }

    (sigma_max * sigma_inv).to_f64().unwrap_or(f64::INFINITY)
}

/// Band matrix in compact storage: `a[i][j]` holds `A[i, i - kl + j]`
/// for `j` in `0..kl+ku+1`. Factorization and solve follow the classic
/// band-LU with partial pivoting (bandwidth grows by at most `kl`).
pub struct BandMatrix<T> {
    n: usize,
    kl: usize,
    ku: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Real> BandMatrix<T> {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        Self { n, kl, ku, rows: vec![vec![T::zero(); kl + ku + 1]; n] }
    }

    /// Adds `v` to `A[i, j]`; panics if the entry is outside the band.
    pub fn add(&mut self, i: usize, j: usize, v: T) {
        let off = (j + self.kl) as isize - i as isize;
        assert!(
            off >= 0 && (off as usize) < self.kl + self.ku + 1,
            "entry ({i},{j}) outside band kl={} ku={}",
            self.kl,
            self.ku
        );
        self.rows[i][off as usize] = self.rows[i][off as usize] + v;
    }

    /// Factors in place and solves `A x = b`.
    pub fn solve(mut self, mut b: Vec<T>) -> Result<Vec<T>> {
        let (n, m1, m2) = (self.n, self.kl, self.ku);
        let mm = m1 + m2 + 1;
        let mut al = vec![vec![T::zero(); m1]; n];
        let mut indx = vec![0usize; n];

        // shift the top m1 rows left so column 0 is the diagonal candidate
        for i in 0..m1 {
            let shift = m1 - i;
            for j in shift..mm {
                self.rows[i][j - shift] = self.rows[i][j];
            }
            for j in mm - shift..mm {
                self.rows[i][j] = T::zero();
            }
        }

        let mut l = m1;
        for k in 0..n {
            let mut pivot = self.rows[k][0];
            let mut pivot_row = k;
            if l < n {
                l += 1;
            }
            for j in k + 1..l {
                if self.rows[j][0].abs() > pivot.abs() {
                    pivot = self.rows[j][0];
                    pivot_row = j;
                }
            }
            indx[k] = pivot_row;
            if pivot == T::zero() {
                return Err(Error::OracleFailure(format!(
                    "banded system singular at elimination step {k} of {n}"
                )));
            }
            if pivot_row != k {
                self.rows.swap(k, pivot_row);
            }
            for i in k + 1..l {
                let factor = self.rows[i][0] / self.rows[k][0];
                al[k][i - k - 1] = factor;
                for j in 1..mm {
                    self.rows[i][j - 1] = self.rows[i][j] - factor * self.rows[k][j];
                }
                self.rows[i][mm - 1] = T::zero();
            }
        }

        // forward substitution
        let mut l = m1;
        for k in 0..n {
            let j = indx[k];
            if j != k {
                b.swap(k, j);
            }
            if l < n {
                l += 1;
            }
            for i in k + 1..l {
                let factor = al[k][i - k - 1];
                b[i] = b[i] - factor * b[k];
            }
        }
        // back substitution
        let mut l = 1;
        for i in (0..n).rev() {
            let mut s = b[i];
            for k in 1..l {
                s = s - self.rows[i][k] * b[i + k];
            }
            b[i] = s / self.rows[i][0];
            if l < mm {
                l += 1;
            }
        }
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dense_solves_known_system() {
        let a = DenseMatrix::from_rows(&[
            vec![2.0, 1.0, -1.0],
            vec![-3.0, -1.0, 2.0],
            vec![-2.0, 1.0, 2.0],
        ]);
        let x = solve_dense(a, vec![8.0, -11.0, -3.0]).unwrap();
        assert_relative_eq!(x[0], 2.0, max_relative = 1e-14);
        assert_relative_eq!(x[1], 3.0, max_relative = 1e-14);
        assert_relative_eq!(x[2], -1.0, max_relative = 1e-14);
    }

    #[test]
    fn dense_rejects_singular() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(solve_dense(a, vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn condition_estimate_identity_is_one() {
        let a = DenseMatrix::from_rows(&[
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ]);
        let c = condition_estimate(&a, 20);
        assert_relative_eq!(c, 1.0, max_relative = 1e-9);
    }

    #[test]
    fn condition_estimate_diagonal_ratio() {
        let a = DenseMatrix::from_rows(&[
            vec![100.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.01],
        ]);
        let c = condition_estimate(&a, 30);
        assert_relative_eq!(c, 1e4, max_relative = 1e-6);
    }

    #[test]
    fn band_matches_dense_on_random_band_system() {
        // deterministic pseudo-random band system, kl = ku = 2
        let n = 40;
        let (kl, ku) = (2usize, 2usize);
        let mut band = BandMatrix::zeros(n, kl, ku);
        let mut dense = vec![vec![0.0_f64; n]; n];
        let mut state = 0x9e3779b97f4a7c15_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for i in 0..n {
            for j in i.saturating_sub(kl)..(i + ku + 1).min(n) {
                let v = if i == j { 4.0 + next() } else { next() };
                band.add(i, j, v);
                dense[i][j] = v;
            }
        }
        let b: Vec<f64> = (0..n).map(|i| (i as f64).sin()).collect();
        let x_band = band.solve(b.clone()).unwrap();
        let x_dense = solve_dense(
            DenseMatrix::from_rows(&dense.iter().map(|r| r.clone()).collect::<Vec<_>>()),
            b,
        )
        .unwrap();
        for i in 0..n {
            assert_relative_eq!(x_band[i], x_dense[i], max_relative = 1e-10, epsilon = 1e-12);
        }
    }

    #[test]
    fn band_rejects_out_of_band_entry() {
        let result = std::panic::catch_unwind(|| {
            let mut band = BandMatrix::zeros(10, 1, 1);
            band.add(0, 5, 1.0);
        });
        assert!(result.is_err());
    }
}
