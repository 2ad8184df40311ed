//! Square matrices over `Z[2cos(pi/L)]`, the carrier for reflection
//! representations. Only the ring operations needed there are provided.

use std::fmt;

use super::cyclotomic::RealCyclotomic;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    pub n: usize,
    conductor: u64,
    data: Vec<RealCyclotomic>,
}

impl CycMatrix {
    pub fn zero(n: usize, conductor: u64) -> Self {
        CycMatrix {
            n,
            conductor,
            data: vec![RealCyclotomic::zero(conductor); n * n],
        }
    }

    pub fn identity(n: usize, conductor: u64) -> Self {
        let mut m = CycMatrix::zero(n, conductor);
        for i in 0..n {
            m[(i, i)] = RealCyclotomic::from_int(conductor, 1);
        }
        m
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, other.n);
        assert_eq!(self.conductor, other.conductor);
        let n = self.n;
        let mut out = CycMatrix::zero(n, self.conductor);
        for i in 0..n {
            for k in 0..n {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    let t = self[(i, k)].mul(&other[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&t);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == CycMatrix::identity(self.n, self.conductor)
    }

    pub fn pow(&self, mut e: usize) -> CycMatrix {
        let mut base = self.clone();
        let mut acc = CycMatrix::identity(self.n, self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for CycMatrix {
    type Output = RealCyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &RealCyclotomic {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CycMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RealCyclotomic {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix {}x{} (L={})", self.n, self.n, self.conductor)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, " {}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_pow() {
        let id = CycMatrix::identity(3, 4);
        assert!(id.is_identity());
        assert!(id.pow(5).is_identity());

        let mut m = CycMatrix::zero(2, 4);
        m[(0, 1)] = RealCyclotomic::from_int(4, 1);
        m[(1, 0)] = RealCyclotomic::from_int(4, 1);
        assert!(!m.is_identity());
        assert!(m.pow(2).is_identity());
    }
}
