use std::fmt;

use super::PermError;

/// Permutation of the points `{1..d}`, stored as a 0-based image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= 255, "permutation degree capped at 255");
        Perm {
            img: (0..degree as u8).collect(),
        }
    }

    /// Build from a 0-based image array; must be a bijection.
    pub fn from_images(img: Vec<u8>) -> Result<Perm, PermError> {
        let d = img.len();
        if d > 255 {
            return Err(PermError::Parse("degree capped at 255".into()));
        }
        let mut seen = vec![false; d];
        for &x in &img {
            if (x as usize) >= d || seen[x as usize] {
                return Err(PermError::Parse("image array is not a bijection".into()));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { img })
    }

    /// Build from disjoint cycles with 1-based points, e.g. `&[vec![1,3], vec![2,4]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, PermError> {
        let mut img: Vec<u8> = (0..degree as u8).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for w in 0..cyc.len() {
                let a = cyc[w];
                let b = cyc[(w + 1) % cyc.len()];
                if a == 0 || a > degree || b == 0 || b > degree {
                    return Err(PermError::Parse(format!(
                        "cycle point out of range 1..{degree}"
                    )));
                }
                if touched[a - 1] {
                    return Err(PermError::Parse(format!("point {a} appears twice")));
                }
                touched[a - 1] = true;
                img[a - 1] = (b - 1) as u8;
            }
        }
        Perm::from_images(img)
    }

    /// Parse cycle notation like `(1 3)(2 4)(5 6)`; `()` or `id` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Perm, PermError> {
        let text = text.trim();
        if text == "id" || text == "()" || text.is_empty() {
            return Ok(Perm::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let rest2 = rest.trim_start();
            if !rest2.starts_with('(') {
                return Err(PermError::Parse(format!("expected '(' in `{text}`")));
            }
            let close = rest2
                .find(')')
                .ok_or_else(|| PermError::Parse(format!("unclosed cycle in `{text}`")))?;
            let inner = &rest2[1..close];
            let pts: Result<Vec<usize>, _> = inner
                .split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad point `{s}`")))
                })
                .collect();
            let pts = pts?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = &rest2[close + 1..];
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.img[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    /// `self * other` applies `other` first, then `self`.
    #[inline]
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        let img = other.img.iter().map(|&x| self.img[x as usize]).collect();
        Perm { img }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u8;
        }
        Perm { img }
    }

    pub fn conj(&self, by: &Perm) -> Perm {
        by.mul(self).mul(&by.inv())
    }

    pub fn order(&self) -> usize {
        cycle_type(self).into_iter().fold(1, num_integer::lcm)
    }

    pub fn images(&self) -> &[u8] {
        &self.img
    }

    /// Same permutation acting on `1..=new_degree` (extra points fixed).
    pub fn extended(&self, new_degree: usize) -> Perm {
        assert!(new_degree >= self.degree());
        let mut img: Vec<u8> = (0..new_degree as u8).collect();
        img[..self.degree()].copy_from_slice(&self.img);
        Perm { img }
    }

    /// Same permutation moved to points `offset+1 ..= offset+degree` inside `1..=new_degree`.
    pub fn shifted(&self, offset: usize, new_degree: usize) -> Perm {
        assert!(offset + self.degree() <= new_degree);
        let mut img: Vec<u8> = (0..new_degree as u8).collect();
        for (i, &x) in self.img.iter().enumerate() {
            img[offset + i] = (offset + x as usize) as u8;
        }
        Perm { img }
    }
}

/// Cycle type as a partition of the degree, largest part first.
pub fn cycle_type(p: &Perm) -> Vec<usize> {
    let d = p.degree();
    let mut seen = vec![false; d];
    let mut parts = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = p.apply(x);
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut wrote = false;
        for start in 0..d {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        // (1 2) * (2 3): apply (2 3) first, then (1 2) => 1->2, 2->3->... check images
        let a = Perm::parse(3, "(1 2)").unwrap();
        let b = Perm::parse(3, "(2 3)").unwrap();
        let ab = a.mul(&b);
        // 1 -(b)-> 1 -(a)-> 2 ; 2 -> 3 -> 3 ; 3 -> 2 -> 1
        assert_eq!(ab, Perm::parse(3, "(1 2 3)").unwrap());
    }

    #[test]
    fn inverse_and_order() {
        let p = Perm::parse(9, "(1 2)(3 4 5)(6 7 8 9)").unwrap();
        assert!(p.mul(&p.inv()).is_identity());
        assert_eq!(p.order(), 12);
        assert_eq!(cycle_type(&p), vec![4, 3, 2]);
    }

    #[test]
    fn paper_cycle_type_example() {
        // x = (1 3)(2 4)(5 6) in S6 has type [2,2,2]
        let x = Perm::parse(6, "(1 3)(2 4)(5 6)").unwrap();
        assert_eq!(cycle_type(&x), vec![2, 2, 2]);
        assert_eq!(cycle_type(&Perm::identity(6)), vec![1; 6]);
        let t = Perm::parse(6, "(1 2)").unwrap();
        assert_eq!(cycle_type(&t), vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn display_round_trip() {
        let p = Perm::parse(8, "(1 3)(2 4)(5 6)").unwrap();
        let q = Perm::parse(8, &p.to_string()).unwrap();
        assert_eq!(p, q);
        assert_eq!(Perm::identity(4).to_string(), "()");
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Perm::parse(4, "(1 5)").is_err());
        assert!(Perm::parse(4, "(1 2)(2 3)").is_err());
    }
}
