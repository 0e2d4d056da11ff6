//! Tiny dense linear algebra on stack matrices of dimension at most 4,
//! enough for metric components, their inverses, and lift-coordinate solves.


use crate::error::{GeomError, Result};

/// Symmetric-capable square matrix of dimension `n <= 4`, stored dense.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallMat {
    pub n: usize,
    pub a: [[f64; 4]; 4],
}

impl SmallMat {
    pub fn zeros(n: usize) -> Self {
        debug_assert!(n <= 4);
        SmallMat { n, a: [[0.0; 4]; 4] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.a[i][i] = 1.0;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i][j] = v;
    }

    pub fn max_abs_diff(&self, other: &SmallMat) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                m = m.max((self.a[i][j] - other.a[i][j]).abs());
            }
        }
        m
    }

    pub fn symmetry_residual(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                m = m.max((self.a[i][j] - self.a[j][i]).abs());
            }
        }
        m
    }

    pub fn det(&self) -> f64 {
        let mut lu = *self;
        let mut det = 1.0;
        for k in 0..self.n {
            let (p, piv) = lu.pivot_row(k);
            if piv == 0.0 {
                return 0.0;
            }
            if p != k {
                lu.a.swap(p, k);
                det = -det;
            }
            det *= lu.a[k][k];
            for i in (k + 1)..self.n {
                let f = lu.a[i][k] / lu.a[k][k];
                for j in k..self.n {
                    lu.a[i][j] -= f * lu.a[k][j];
                }
            }
        }
        det
    }

    fn pivot_row(&self, k: usize) -> (usize, f64) {
        let mut best = k;
        let mut best_abs = self.a[k][k].abs();
        for i in (k + 1)..self.n {
            if self.a[i][k].abs() > best_abs {
                best = i;
                best_abs = self.a[i][k].abs();
            }
        }
        (best, best_abs)
    }

    /// Solve `A x = b` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, b: &[f64]) -> Result<[f64; 4]> {
        debug_assert_eq!(b.len(), self.n);
        let n = self.n;
        let mut m = self.a;
        let mut rhs = [0.0; 4];
        rhs[..n].copy_from_slice(b);
        for k in 0..n {
            let mut p = k;
            for i in (k + 1)..n {
                if m[i][k].abs() > m[p][k].abs() {
                    p = i;
                }
            }
            if m[p][k].abs() < 1e-14 {
                return Err(GeomError::SingularMetric);
            }
            if p != k {
                m.swap(p, k);
                rhs.swap(p, k);
            }
            for i in (k + 1)..n {
                let f = m[i][k] / m[k][k];
                for j in k..n {
                    m[i][j] -= f * m[k][j];
                }
                rhs[i] -= f * rhs[k];
            }
        }
        let mut x = [0.0; 4];
        for k in (0..n).rev() {
            let mut acc = rhs[k];
            for j in (k + 1)..n {
                acc -= m[k][j] * x[j];
            }
            x[k] = acc / m[k][k];
        }
        Ok(x)
    }

    /// Full inverse via columnwise solves.
    pub fn inverse(&self) -> Result<SmallMat> {
        let n = self.n;
        let mut inv = SmallMat::zeros(n);
        for j in 0..n {
            let mut e = [0.0; 4];
            e[j] = 1.0;
            let col = self.solve(&e[..n])?;
            for i in 0..n {
                inv.a[i][j] = col[i];
            }
        }
        Ok(inv)
    }
}
