//! Dense rational matrices: Gaussian elimination, rank, null space, and the
//! commutant dimension of a set of integer/rational matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::intmat::IntMatrix;

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        let mut out = QMatrix::zero(m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                out[(i, j)] = BigRational::from(m[(i, j)].clone());
            }
        }
        out
    }

    pub fn from_rows_i64(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        QMatrix {
            rows: r,
            cols: c,
            data: rows
                .into_iter()
                .flatten()
                .map(|x| BigRational::from(BigInt::from(x)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Row-reduce in place; returns the rank and pivot columns.
    pub fn row_reduce(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let t = self[(r, j)].clone();
                self[(r, j)] = self[(p, j)].clone();
                self[(p, j)] = t;
            }
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let t = &self[(r, j)] * &inv;
                self[(r, j)] = t;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = &self[(r, j)] * &f;
                        self[(i, j)] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().0
    }

    /// Basis of the right null space `{x : Ax = 0}` as column vectors.
    pub fn null_space(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let (_, pivots) = m.row_reduce();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, " {}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dimension over `Q` of `{X : XM = MX for all M in gens}`, computed as the
/// null-space dimension of the stacked Sylvester system in the n^2 unknowns
/// `X_ij`. Always >= 1 (the identity commutes with everything).
pub fn commutant_dimension(gens: &[QMatrix]) -> usize {
    assert!(!gens.is_empty(), "need at least one matrix");
    let n = gens[0].rows;
    for m in gens {
        assert!(
            m.rows == n && m.cols == n,
            "matrices must be square, equal size"
        );
    }
    let mut sys = QMatrix::zero(gens.len() * n * n, n * n);
    let unknown = |a: usize, b: usize| a * n + b; // X_{ab}
    for (gi, m) in gens.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = gi * n * n + i * n + j;
                // (XM - MX)_{ij} = sum_a X_{ia} M_{aj} - sum_b M_{ib} X_{bj}
                for a in 0..n {
                    let t = m[(a, j)].clone();
                    sys[(row, unknown(i, a))] += t;
                }
                for b in 0..n {
                    let t = m[(i, b)].clone();
                    sys[(row, unknown(b, j))] -= t;
                }
            }
        }
    }
    n * n - sys.rank()
}
