//! Dense integer matrices with Smith normal form and adjugates.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        // fraction-free Gaussian elimination (Bareiss)
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut denom = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let t = m[(k, j)].clone();
                            m[(k, j)] = m[(i, j)].clone();
                            m[(i, j)] = t;
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &t / &denom;
                }
                m[(i, k)] = BigInt::zero();
            }
            denom = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, " {}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `U * A * V = S` with `U`, `V` unimodular and `S` diagonal, nonnegative,
/// with each diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

/// Smith normal form by repeated pivoting. The pivot is always the nonzero
/// entry of smallest absolute value in the remaining block, ties broken by
/// row-major position, so outputs are deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let n = a.rows.min(a.cols);

    for t in 0..n {
        loop {
            // smallest nonzero |entry| in the block [t.., t..]
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..s.rows {
                for j in t..s.cols {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) => {
                            if s[(i, j)].abs() < s[(pi, pj)].abs() {
                                pivot = Some((i, j));
                            }
                        }
                        None => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            swap_rows(&mut s, &mut u, t, pi);
            swap_cols(&mut s, &mut v, t, pj);
            if s[(t, t)].is_negative() {
                negate_row(&mut s, &mut u, t);
            }

            let mut dirty = false;
            for i in t + 1..s.rows {
                if !s[(i, t)].is_zero() {
                    let q = div_round(&s[(i, t)], &s[(t, t)]);
                    row_axpy(&mut s, &mut u, i, t, &-q);
                    if !s[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..s.cols {
                if !s[(t, j)].is_zero() {
                    let q = div_round(&s[(t, j)], &s[(t, t)]);
                    col_axpy(&mut s, &mut v, j, t, &-q);
                    if !s[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue; // a smaller remainder appeared somewhere
            }
            // row and column clear; fix divisibility into the rest
            let mut fixed = true;
            'scan: for i in t + 1..s.rows {
                for j in t + 1..s.cols {
                    if !(&s[(i, j)] % &s[(t, t)]).is_zero() {
                        // fold row i into row t to pull the gcd forward
                        row_axpy(&mut s, &mut u, t, i, &BigInt::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
    }
    SnfResult { s, u, v }
}

fn swap_rows(s: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..s.cols {
        let t = s[(a, j)].clone();
        s[(a, j)] = s[(b, j)].clone();
        s[(b, j)] = t;
    }
    for j in 0..u.cols {
        let t = u[(a, j)].clone();
        u[(a, j)] = u[(b, j)].clone();
        u[(b, j)] = t;
    }
}

fn swap_cols(s: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..s.rows {
        let t = s[(i, a)].clone();
        s[(i, a)] = s[(i, b)].clone();
        s[(i, b)] = t;
    }
    for i in 0..v.rows {
        let t = v[(i, a)].clone();
        v[(i, a)] = v[(i, b)].clone();
        v[(i, b)] = t;
    }
}

fn negate_row(s: &mut IntMatrix, u: &mut IntMatrix, r: usize) {
    for j in 0..s.cols {
        let t = -s[(r, j)].clone();
        s[(r, j)] = t;
    }
    for j in 0..u.cols {
        let t = -u[(r, j)].clone();
        u[(r, j)] = t;
    }
}

/// row a += q * row b (in S and U simultaneously)
fn row_axpy(s: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for j in 0..s.cols {
        let t = &s[(b, j)] * q;
        s[(a, j)] += t;
    }
    for j in 0..u.cols {
        let t = &u[(b, j)] * q;
        u[(a, j)] += t;
    }
}

/// col a += q * col b (in S and V simultaneously)
fn col_axpy(s: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for i in 0..s.rows {
        let t = &s[(i, b)] * q;
        s[(i, a)] += t;
    }
    for i in 0..v.rows {
        let t = &v[(i, b)] * q;
        v[(i, a)] += t;
    }
}

/// Round-to-nearest integer division, which makes the remainder small.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::div_rem(a.clone(), b.clone());
    if (&r * 2u8).abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Adjugate matrix: `A * adj(A) = det(A) * I`, valid for singular `A` too
/// (then the product is the zero matrix).
///
/// The adjugate is the only integer matrix with this property in general;
/// the transpose satisfies `A * A^T = det(A) * I` only for scaled-orthogonal
/// matrices, so it is not a substitute here.
pub fn adjugate(a: &IntMatrix) -> (IntMatrix, BigInt) {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let det = a.det();
    let mut b = IntMatrix::zero(n, n);
    if n == 0 {
        return (b, det);
    }
    if n == 1 {
        b[(0, 0)] = BigInt::one();
        return (b, det);
    }
    for i in 0..n {
        for j in 0..n {
            // cofactor C_ji for the adjugate
            let minor = minor_det(a, j, i);
            b[(i, j)] = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    (b, det)
}

fn minor_det(a: &IntMatrix, skip_row: usize, skip_col: usize) -> BigInt {
    let n = a.rows;
    let mut m = IntMatrix::zero(n - 1, n - 1);
    let mut ri = 0;
    for i in 0..n {
        if i == skip_row {
            continue;
        }
        let mut cj = 0;
        for j in 0..n {
            if j == skip_col {
                continue;
            }
            m[(ri, cj)] = a[(i, j)].clone();
            cj += 1;
        }
        ri += 1;
    }
    m.det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn snf_invariants(a: &IntMatrix) {
        let r = smith_normal_form(a);
        assert_eq!(r.u.mul(a).mul(&r.v), r.s, "UAV != S for {a:?}");
        assert!(r.s.is_diagonal());
        assert_eq!(r.u.det().abs(), BigInt::one());
        assert_eq!(r.v.det().abs(), BigInt::one());
        let n = a.rows.min(a.cols);
        for i in 0..n {
            assert!(!r.s[(i, i)].is_negative());
            if i + 1 < n && !r.s[(i, i)].is_zero() {
                let next = r.s[(i + 1, i + 1)].clone();
                assert!(
                    (next % &r.s[(i, i)]).is_zero(),
                    "divisibility chain broken in {:?}",
                    r.s
                );
            }
            if r.s[(i, i)].is_zero() && i + 1 < n {
                assert!(r.s[(i + 1, i + 1)].is_zero());
            }
        }
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let r = smith_normal_form(&a);
        assert_eq!(r.s, a);
    }

    #[test]
    fn snf_diag_2_3() {
        // oracle: diag(gcd(2,3), lcm(2,3)) = diag(1, 6); det preserved up to sign
        let a = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let r = smith_normal_form(&a);
        assert_eq!(r.s, IntMatrix::from_rows(vec![vec![1, 0], vec![0, 6]]));
        snf_invariants(&a);
    }

    #[test]
    fn snf_rank_one() {
        let a = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 0]]);
        let r = smith_normal_form(&a);
        assert_eq!(r.s, IntMatrix::from_rows(vec![vec![2, 0], vec![0, 0]]));
        snf_invariants(&a);
    }

    #[test]
    fn snf_random_matrices() {
        let mut rng = SplitMix64::new(0xC0C0);
        for _ in 0..300 {
            let rows = 1 + rng.below(5);
            let cols = 1 + rng.below(5);
            let a = IntMatrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| rng.range_i64(-9, 9)).collect())
                    .collect(),
            );
            snf_invariants(&a);
        }
    }

    #[test]
    fn adjugate_examples() {
        let (b, d) = adjugate(&IntMatrix::identity(3));
        assert_eq!(b, IntMatrix::identity(3));
        assert_eq!(d, BigInt::one());

        // cofactor-expansion oracle
        let a = IntMatrix::from_rows(vec![vec![2, 1], vec![1, 1]]);
        let (b, d) = adjugate(&a);
        assert_eq!(d, BigInt::one());
        assert_eq!(b, IntMatrix::from_rows(vec![vec![1, -1], vec![-1, 2]]));

        // singular case: product is the zero matrix
        let a = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]);
        let (b, d) = adjugate(&a);
        assert!(d.is_zero());
        assert_eq!(a.mul(&b), IntMatrix::zero(2, 2));
    }

    #[test]
    fn adjugate_identity_random() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..200 {
            let n = 1 + rng.below(5);
            let a = IntMatrix::from_rows(
                (0..n)
                    .map(|_| (0..n).map(|_| rng.range_i64(-6, 6)).collect())
                    .collect(),
            );
            let (b, d) = adjugate(&a);
            let mut expect = IntMatrix::zero(n, n);
            for i in 0..n {
                expect[(i, i)] = d.clone();
            }
            assert_eq!(a.mul(&b), expect);
            assert_eq!(d, a.det());
        }
    }
}
