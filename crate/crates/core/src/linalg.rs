//! Dense complex linear algebra: LU solve/inverse with partial pivoting and
//! a cheap condition estimate. Sized for the T-matrix systems (tens of
//! scatterers) and the discrete resolvent oracle.

use crate::error::{CoreError, Result};
use num_complex::Complex64;

/// Row-major dense complex matrix.
#[derive(Debug, Clone)]
pub struct CMatrix {
    pub n: usize,
    pub data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![Complex64::new(0.0, 0.0); self.n];
        for i in 0..self.n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.n {
                acc += self[(i, j)] * x[j];
            }
            y[i] = acc;
        }
        y
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// LU factorization with partial pivoting.
pub struct Lu {
    lu: CMatrix,
    piv: Vec<usize>,
    /// Ratio of largest to smallest pivot magnitude; a cheap lower bound on
    /// the true condition number, good enough to flag resonances.
    pub cond_estimate: f64,
}

pub fn lu_factor(a: &CMatrix) -> Result<Lu> {
    let n = a.n;
    let mut lu = a.clone();
    let mut piv: Vec<usize> = (0..n).collect();
    let mut max_piv = 0.0f64;
    let mut min_piv = f64::INFINITY;

    for col in 0..n {
        let mut best = col;
        let mut best_mag = lu[(col, col)].norm();
        for row in (col + 1)..n {
            let mag = lu[(row, col)].norm();
            if mag > best_mag {
                best = row;
                best_mag = mag;
            }
        }
        if best_mag == 0.0 {
            return Err(CoreError::Resonance {
                op: "linalg::lu_factor",
                cond: f64::INFINITY,
            });
        }
        if best != col {
            for j in 0..n {
                let tmp = lu[(col, j)];
                lu[(col, j)] = lu[(best, j)];
                lu[(best, j)] = tmp;
            }
            piv.swap(col, best);
        }
        max_piv = max_piv.max(best_mag);
        min_piv = min_piv.min(best_mag);
        let inv = lu[(col, col)].inv();
        for row in (col + 1)..n {
            let factor = lu[(row, col)] * inv;
            lu[(row, col)] = factor;
            for j in (col + 1)..n {
                let sub = factor * lu[(col, j)];
                lu[(row, j)] -= sub;
            }
        }
    }
    Ok(Lu {
        lu,
        piv,
        cond_estimate: max_piv / min_piv,
    })
}

impl Lu {
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.lu.n;
        let mut x: Vec<Complex64> = self.piv.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let sub = self.lu[(i, j)] * x[j];
                x[i] -= sub;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let sub = self.lu[(i, j)] * x[j];
                x[i] -= sub;
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }

    pub fn inverse(&self) -> CMatrix {
        let n = self.lu.n;
        let mut out = CMatrix::zeros(n);
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        for col in 0..n {
            e[col] = Complex64::new(1.0, 0.0);
            let x = self.solve(&e);
            e[col] = Complex64::new(0.0, 0.0);
            for row in 0..n {
                out[(row, col)] = x[row];
            }
        }
        out
    }
}

/// Solve `A x = b`, flagging ill-conditioned systems above `cond_limit`.
pub fn solve(a: &CMatrix, b: &[Complex64], cond_limit: f64) -> Result<Vec<Complex64>> {
    let lu = lu_factor(a)?;
    if lu.cond_estimate > cond_limit {
        return Err(CoreError::Resonance {
            op: "linalg::solve",
            cond: lu.cond_estimate,
        });
    }
    Ok(lu.solve(b))
}
