//! Small dense and banded linear solvers with partial pivoting.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Builds a matrix from nested rows; all rows must share one length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &v| m.max(math::abs(v)))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Entrywise `|a - b| <= tol` over two same-shaped matrices.
    pub fn approx_eq(&self, other: &Mat, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(x, y)| math::abs(x - y) <= tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Singular;

impl core::fmt::Display for Singular {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "singular matrix")
    }
}

/// Dense LU factorization with partial pivoting, kept for repeated solves.
pub struct LuFactors {
    n: usize,
    lu: Vec<f64>,
    pivots: Vec<usize>,
}

pub fn lu_factor(a: &Mat) -> Result<LuFactors, Singular> {
    assert_eq!(a.rows, a.cols, "lu_factor needs a square matrix");
    let n = a.rows;
    let mut lu = a.data.clone();
    let mut pivots = vec![0usize; n];
    for k in 0..n {
        let mut p = k;
        let mut pmax = math::abs(lu[k * n + k]);
        for i in k + 1..n {
            let v = math::abs(lu[i * n + k]);
            if v > pmax {
                pmax = v;
                p = i;
            }
        }
        if pmax == 0.0 || !pmax.is_finite() {
            return Err(Singular);
        }
        pivots[k] = p;
        if p != k {
            for j in 0..n {
                lu.swap(k * n + j, p * n + j);
            }
        }
        let piv = lu[k * n + k];
        for i in k + 1..n {
            let m = lu[i * n + k] / piv;
            lu[i * n + k] = m;
            for j in k + 1..n {
                lu[i * n + j] -= m * lu[k * n + j];
            }
        }
    }
    Ok(LuFactors { n, lu, pivots })
}

impl LuFactors {
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        assert_eq!(rhs.len(), self.n);
        let n = self.n;
        let mut x = rhs.to_vec();
        for k in 0..n {
            x.swap(k, self.pivots[k]);
            for i in k + 1..n {
                x[i] -= self.lu[i * n + k] * x[k];
            }
        }
        for k in (0..n).rev() {
            x[k] /= self.lu[k * n + k];
            for i in 0..k {
                x[i] -= self.lu[i * n + k] * x[k];
            }
        }
        x
    }
}

pub fn lu_solve(a: &Mat, rhs: &[f64]) -> Result<Vec<f64>, Singular> {
    Ok(lu_factor(a)?.solve(rhs))
}

/// Rank test by elimination: true when every pivot stays above
/// `rel_pivot_tol * max|a_ij|`.
pub fn is_invertible(a: &Mat, rel_pivot_tol: f64) -> bool {
    if a.rows != a.cols {
        return false;
    }
    let n = a.rows;
    let scale = a.max_abs();
    if scale == 0.0 || !scale.is_finite() {
        return false;
    }
    let tol = rel_pivot_tol * scale;
    let mut lu = a.data.clone();
    for k in 0..n {
        let mut p = k;
        let mut pmax = math::abs(lu[k * n + k]);
        for i in k + 1..n {
            let v = math::abs(lu[i * n + k]);
            if v > pmax {
                pmax = v;
                p = i;
            }
        }
        if pmax <= tol {
            return false;
        }
        if p != k {
            for j in 0..n {
                lu.swap(k * n + j, p * n + j);
            }
        }
        let piv = lu[k * n + k];
        for i in k + 1..n {
            let m = lu[i * n + k] / piv;
            for j in k + 1..n {
                lu[i * n + j] -= m * lu[k * n + j];
            }
        }
    }
    true
}

/// Banded matrix in LAPACK-style band storage with room for pivoting fill:
/// entry (i, j) with `-ku <= j - i <= kl + ku` lives at `ab[kl + ku + i - j][j]`.
pub struct Banded {
    n: usize,
    kl: usize,
    ku: usize,
    // (2*kl + ku + 1) x n, row-major; band row r, column j at r * n + j.
    ab: Vec<f64>,
}

impl Banded {
    /// `kl`/`ku` are the sub- and super-bandwidths of the matrix being
    /// assembled; factorization may fill up to `kl` extra superdiagonals.
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        Banded {
            n,
            kl,
            ku: ku + kl,
            ab: vec![0.0; (2 * kl + ku + kl + 1) * n],
        }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.n);
        debug_assert!(j <= i + self.ku && i <= j + self.kl, "entry outside band");
        (self.kl + self.ku + i - j) * self.n + j
    }

    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let k = self.idx(i, j);
        self.ab[k] += v;
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let k = self.idx(i, j);
        self.ab[k] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if j > i + self.ku || i > j + self.kl {
            0.0
        } else {
            self.ab[(self.kl + self.ku + i - j) * self.n + j]
        }
    }

    /// In-place banded LU with partial pivoting (row swaps stay inside the
    /// widened band).
    pub fn factor(mut self) -> Result<BandedLu, Singular> {
        let n = self.n;
        let (kl, ku) = (self.kl, self.ku);
        let mut pivots = vec![0usize; n];
        for j in 0..n {
            let imax = (j + kl).min(n - 1);
            let mut p = j;
            let mut pmax = math::abs(self.get(j, j));
            for i in j + 1..=imax {
                let v = math::abs(self.get(i, j));
                if v > pmax {
                    pmax = v;
                    p = i;
                }
            }
            if pmax == 0.0 || !pmax.is_finite() {
                return Err(Singular);
            }
            pivots[j] = p;
            let jmax = (j + ku).min(n - 1);
            if p != j {
                for k in j..=jmax {
                    let a = self.idx(j, k);
                    let b = self.idx(p, k);
                    self.ab.swap(a, b);
                }
            }
            let piv = self.get(j, j);
            for i in j + 1..=imax {
                let m = self.get(i, j) / piv;
                self.set(i, j, m);
                if m != 0.0 {
                    for k in j + 1..=jmax {
                        let v = self.get(j, k);
                        if v != 0.0 {
                            let t = self.idx(i, k);
                            self.ab[t] -= m * v;
                        }
                    }
                }
            }
        }
        Ok(BandedLu { mat: self, pivots })
    }
}

pub struct BandedLu {
    mat: Banded,
    pivots: Vec<usize>,
}

impl BandedLu {
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = self.mat.n;
        assert_eq!(rhs.len(), n);
        let (kl, ku) = (self.mat.kl, self.mat.ku);
        let mut x = rhs.to_vec();
        for j in 0..n {
            x.swap(j, self.pivots[j]);
            let imax = (j + kl).min(n - 1);
            for i in j + 1..=imax {
                x[i] -= self.mat.get(i, j) * x[j];
            }
        }
        for j in (0..n).rev() {
            x[j] /= self.mat.get(j, j);
            let imin = j.saturating_sub(ku);
            for i in imin..j {
                x[i] -= self.mat.get(i, j) * x[j];
            }
        }
        x
    }
}
